// Copyright 2026 The gdpkraus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "experiments.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "gdpk/channel_metrics.hpp"
#include "gdpk/entanglement.hpp"
#include "gdpk/errors.hpp"
#include "gdpk/me2kraus.hpp"

namespace gdpk::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kKrausDiscrepancyMax = 1e-8;
constexpr double kSelfCheckRel = 1e-9;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string normalize_key(std::string key) {
  std::replace(key.begin(), key.end(), '_', '-');
  return key;
}

double parse_double(const std::string& key, const std::string& text) {
  const std::string s = trim(text);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
    throw ConfigError(fmt::format("{}: '{}' is not a finite number", key, text));
  }
  return v;
}

int parse_int(const std::string& key, const std::string& text) {
  const double v = parse_double(key, text);
  if (v != std::floor(v) || std::abs(v) > 1e9) throw ConfigError(fmt::format("{}: '{}' is not an integer", key, text));
  return static_cast<int>(v);
}

bool parse_bool(const std::string& key, const std::string& text) {
  const std::string s = trim(text);
  if (s == "1" || s == "true" || s == "yes" || s == "on") return true;
  if (s == "0" || s == "false" || s == "no" || s == "off") return false;
  throw ConfigError(fmt::format("{}: '{}' is not a boolean", key, text));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) parts.push_back(trim(item));
  return parts;
}

std::vector<double> parse_list(const std::string& key, const std::string& text) {
  std::vector<double> out;
  for (const std::string& part : split(text, ',')) {
    if (!part.empty()) out.push_back(parse_double(key, part));
  }
  if (out.empty()) throw ConfigError(fmt::format("{}: empty list", key));
  return out;
}

std::vector<BathTriple> parse_triples(const std::string& key, const std::string& text) {
  std::vector<BathTriple> out;
  for (const std::string& part : split(text, ',')) {
    if (part.empty()) continue;
    const auto f = split(part, ':');
    if (f.size() != 3) throw ConfigError(fmt::format("{}: '{}' is not T:alpha:omegac", key, part));
    out.push_back({parse_double(key, f[0]), parse_double(key, f[1]), parse_double(key, f[2])});
  }
  if (out.empty()) throw ConfigError(fmt::format("{}: empty list", key));
  return out;
}

ChannelSelect parse_channel(const std::string& text) {
  const std::string s = trim(text);
  if (s == "gdp") return ChannelSelect::kGdp;
  if (s == "dp") return ChannelSelect::kDp;
  if (s == "both") return ChannelSelect::kBoth;
  if (s == "identity") return ChannelSelect::kIdentity;
  throw ConfigError(fmt::format("channel: '{}' is not one of gdp, dp, both, identity", text));
}

template <class F>
ExitCode with_output(const ExperimentConfig& cfg, std::ostream& fallback, F&& body) {
  if (cfg.out.empty()) return body(fallback);
  std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError(fmt::format("cannot open '{}' for writing", cfg.out));
  const ExitCode code = body(static_cast<std::ostream&>(file));
  file.flush();
  if (!file) throw IoError(fmt::format("write to '{}' failed", cfg.out));
  return code;
}

std::string svg_path(const ExperimentConfig& cfg, const std::string& suffix) {
  std::string stem = cfg.out;
  const auto slash = stem.find_last_of('/');
  const auto dot = stem.find_last_of('.');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) stem.resize(dot);
  return stem + "_" + suffix + ".svg";
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError(fmt::format("cannot open '{}' for writing", path));
  file << text;
  file.flush();
  if (!file) throw IoError(fmt::format("write to '{}' failed", path));
}

std::size_t column(const Table& t, const std::string& name) {
  const auto it = std::find(t.header.begin(), t.header.end(), name);
  if (it == t.header.end()) throw std::logic_error("missing column " + name);
  return static_cast<std::size_t>(it - t.header.begin());
}

Series series_of(const Table& t, const std::string& label, const std::string& x, const std::string& y) {
  const std::size_t ix = column(t, x), iy = column(t, y);
  Series s{label, {}, {}};
  for (const auto& row : t.rows) {
    s.x.push_back(row[ix]);
    s.y.push_back(row[iy]);
  }
  return s;
}

// One local channel family as seen by the metrics table.
struct Family {
  LocalGenerator g;
  bool identity;

  KrausSet kraus(double t) const { return identity ? identity_kraus(2, t) : channel_kraus(g, t); }
  double volume(double t) const {
    if (identity) return 4.0 * kPi / 3.0;
    if (g.y + g.z > 0.0) return ellipsoid_volume(shape(g, t));
    return ellipsoid_volume(semi_axes(kraus(t)));
  }
  double rate(double t) const { return identity ? 0.0 : volume_rate(g, t); }
};

struct MetricsRow {
  std::vector<double> cells;
  DensityMatrix rho_gdp;
  DensityMatrix rho_dp;
};

const std::vector<std::string> kMetricsHeader = {
    "t", "tau", "V_gdp", "V_dp", "kappa_gdp", "kappa_dp", "S_gdp", "S_dp",
    "Tdist_gdp_init", "Tdist_dp_init", "Tdist_gdp_dp", "S_gdp_bits", "S_dp_bits"};

struct MetricsModel {
  Family gdp;
  Family dp;
  DensityMatrix rho0;

  explicit MetricsModel(const ExperimentConfig& cfg)
      : gdp{generator_from_micro(cfg.micro, cfg.rate_model()), cfg.channel == ChannelSelect::kIdentity},
        dp{standard_comparison(gdp.g), gdp.identity},
        rho0(bloch_to_density(BlochVector::from_angles(cfg.u, cfg.v))) {}

  MetricsRow row(double t) const {
    const double tau = gdp.identity ? 0.0 : 2.0 * (gdp.g.y + gdp.g.z) * t;
    DensityMatrix a = apply_channel(gdp.kraus(t), rho0);
    DensityMatrix b = apply_channel(dp.kraus(t), rho0);
    const double sa = von_neumann_entropy(a), sb = von_neumann_entropy(b);
    std::vector<double> cells = {t,
                                 tau,
                                 gdp.volume(t),
                                 dp.volume(t),
                                 gdp.rate(t),
                                 dp.rate(t),
                                 sa,
                                 sb,
                                 trace_distance(a, rho0),
                                 trace_distance(b, rho0),
                                 trace_distance(a, b),
                                 sa / std::numbers::ln2,
                                 sb / std::numbers::ln2};
    return MetricsRow{std::move(cells), std::move(a), std::move(b)};
  }
};

std::string esd_text(const std::optional<double>& t) { return t ? fmt::format("{:.9g}", *t) : std::string("none"); }

void print_kraus_set(std::ostream& os, const std::string& label, const KrausSet& k) {
  for (std::size_t i = 0; i < k.ops.size(); ++i) {
    os << label << " E" << (i + 1) << '\n';
    const CMat& m = k.ops[i];
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      os << ' ';
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        os << fmt::format(" {:+.11e}{:+.11e}i", m(r, c).real() + 0.0, m(r, c).imag() + 0.0);
      }
      os << '\n';
    }
  }
}

}  // namespace

RateModel ExperimentConfig::rate_model() const {
  return high_t_approx ? RateModel::kHighTemperature : RateModel::kExactBose;
}

void ExperimentConfig::validate() const {
  try {
    micro.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
  if (points < 2) throw ConfigError("points must be at least 2");
  if (!(t_start >= 0.0)) throw ConfigError("t-start must be non-negative");
  if (!(t_end > t_start)) throw ConfigError("t-end must exceed t-start");
  if (!(kraus_t >= 0.0)) throw ConfigError("t must be non-negative");
  if (u < 0.0 || u > 2.0 * kPi) throw ConfigError("u must lie in [0, 2 pi]");
  if (v < 0.0 || v > kPi) throw ConfigError("v must lie in [0, pi]");
  if (omega1 < 0.0 || omega2 < 0.0) throw ConfigError("omega1 and omega2 must be non-negative");
  if (emit_svg && out.empty()) throw ConfigError("emit-svg needs --out to name the plot files");
  for (const BathTriple& b : triples) {
    if (!(b.temperature > 0.0) || !(b.alpha >= 0.0) || !(b.omega_c > 0.0)) {
      throw ConfigError("triples: need T > 0, alpha >= 0, omegac > 0");
    }
  }
}

void apply_setting(ExperimentConfig& cfg, const std::string& raw_key, const std::string& value) {
  const std::string key = normalize_key(trim(raw_key));
  if (key == "channel") {
    cfg.channel = parse_channel(value);
  } else if (key == "T") {
    cfg.micro.temperature = parse_double(key, value);
  } else if (key == "alpha") {
    cfg.micro.alpha = parse_double(key, value);
  } else if (key == "omega0") {
    cfg.micro.omega0 = parse_double(key, value);
  } else if (key == "omegac") {
    cfg.micro.omega_c = parse_double(key, value);
    cfg.omega_c_explicit = true;
    if (!cfg.omega_max_explicit) cfg.micro.omega_max = kDefaultCutoffMultiple * cfg.micro.omega_c;
  } else if (key == "omegamax") {
    cfg.micro.omega_max = parse_double(key, value);
    cfg.omega_max_explicit = true;
  } else if (key == "t-start") {
    cfg.t_start = parse_double(key, value);
  } else if (key == "t-end") {
    cfg.t_end = parse_double(key, value);
  } else if (key == "points") {
    cfg.points = parse_int(key, value);
  } else if (key == "t") {
    cfg.kraus_t = parse_double(key, value);
  } else if (key == "u") {
    cfg.u = parse_double(key, value);
  } else if (key == "v") {
    cfg.v = parse_double(key, value);
  } else if (key == "omega1") {
    cfg.omega1 = parse_double(key, value);
  } else if (key == "omega2") {
    cfg.omega2 = parse_double(key, value);
  } else if (key == "high-t-approx") {
    cfg.high_t_approx = parse_bool(key, value);
  } else if (key == "emit-svg") {
    cfg.emit_svg = parse_bool(key, value);
  } else if (key == "out") {
    cfg.out = trim(value);
  } else if (key == "self-check") {
    cfg.self_check = trim(value);
  } else if (key == "triples") {
    cfg.triples = parse_triples(key, value);
  } else if (key == "sweep-T") {
    cfg.sweep_t = parse_list(key, value);
  } else if (key == "sweep-alpha") {
    cfg.sweep_alpha = parse_list(key, value);
  } else if (key == "sweep-omegac") {
    cfg.sweep_omega_c = parse_list(key, value);
  } else {
    throw ConfigError(fmt::format("unknown setting '{}'", raw_key));
  }
}

void apply_config_text(ExperimentConfig& cfg, const std::string& text, const std::string& origin) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(fmt::format("{}:{}: expected key=value", origin, lineno));
    try {
      apply_setting(cfg, line.substr(0, eq), line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError(fmt::format("{}:{}: {}", origin, lineno, e.what()));
    }
  }
}

void load_config_file(ExperimentConfig& cfg, const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ConfigError(fmt::format("cannot read config file '{}'", path));
  std::ostringstream text;
  text << file.rdbuf();
  apply_config_text(cfg, text.str(), path);
}

std::vector<double> time_grid(const ExperimentConfig& cfg) {
  std::vector<double> ts(static_cast<std::size_t>(cfg.points));
  const double step = (cfg.t_end - cfg.t_start) / (cfg.points - 1);
  for (int i = 0; i < cfg.points; ++i) ts[static_cast<std::size_t>(i)] = cfg.t_start + i * step;
  ts.back() = cfg.t_end;
  return ts;
}

std::vector<BathTriple> default_sweep() {
  return {{50.0, 0.005, 15.0}, {100.0, 0.005, 50.0}, {50.0, 0.02, 15.0}, {50.0, 0.02, 50.0}, {100.0, 0.02, 15.0}};
}

std::vector<BathTriple> sweep_points(const ExperimentConfig& cfg) {
  const bool cartesian = !cfg.sweep_t.empty() || !cfg.sweep_alpha.empty() || !cfg.sweep_omega_c.empty();
  if (!cfg.triples.empty() && cartesian) throw ConfigError("give either triples or sweep lists, not both");
  if (!cfg.triples.empty()) return cfg.triples;
  if (!cartesian) return default_sweep();
  const auto or_base = [](const std::vector<double>& list, double base) {
    return list.empty() ? std::vector<double>{base} : list;
  };
  std::vector<BathTriple> out;
  for (double t : or_base(cfg.sweep_t, cfg.micro.temperature)) {
    for (double a : or_base(cfg.sweep_alpha, cfg.micro.alpha)) {
      for (double w : or_base(cfg.sweep_omega_c, cfg.micro.omega_c)) out.push_back({t, a, w});
    }
  }
  if (out.empty()) throw ConfigError("empty sweep");
  return out;
}

std::string format_cell(double value) { return fmt::format("{:.12e}", value + 0.0); }

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << t.header[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_cell(row[i]);
    os << '\n';
  }
  for (const std::string& c : t.comments) os << "# " << c << '\n';
}

Table metrics_table(const ExperimentConfig& cfg) {
  cfg.validate();
  const MetricsModel model(cfg);
  Table t;
  t.header = kMetricsHeader;
  for (double time : time_grid(cfg)) t.rows.push_back(model.row(time).cells);
  return t;
}

Table entangle_table(const ExperimentConfig& cfg) {
  cfg.validate();
  const PairModel m = pair_model_from_micro(cfg.micro.temperature, cfg.micro.alpha, cfg.micro.omega_c, cfg.omega1,
                                            cfg.omega2, cfg.rate_model());
  const bool identity = cfg.channel == ChannelSelect::kIdentity;
  const ChannelKind gdp = identity ? ChannelKind::kIdentity : ChannelKind::kGdp;
  const ChannelKind dp = identity ? ChannelKind::kIdentity : ChannelKind::kStandard;
  const CVec psi0 = bell_phi_plus();

  Table t;
  t.header = {"t", "C_gdp", "C_dp", "EoF_gdp", "EoF_dp"};
  for (double time : time_grid(cfg)) {
    const double cg = concurrence(pair_state(m, gdp, time, psi0));
    const double cd = concurrence(pair_state(m, dp, time, psi0));
    t.rows.push_back({time, cg, cd, entanglement_of_formation(cg), entanglement_of_formation(cd)});
  }
  const double step = cfg.t_end / (10.0 * (cfg.points - 1));
  t.comments.push_back(fmt::format("esd_gdp={} esd_dp={} omega_c={:.9g} omega_c_source={}",
                                   esd_text(esd_time(m, gdp, psi0, cfg.t_end, step)),
                                   esd_text(esd_time(m, dp, psi0, cfg.t_end, step)), cfg.micro.omega_c,
                                   cfg.omega_c_explicit ? "given" : "default"));
  return t;
}

std::size_t self_check_metrics(const ExperimentConfig& cfg, std::istream& csv) {
  cfg.validate();
  const MetricsModel model(cfg);
  std::string line;
  if (!std::getline(csv, line) || split(line, ',') != kMetricsHeader) {
    throw InvalidStateError("self-check: header does not match the metrics columns");
  }
  std::size_t n = 0;
  while (std::getline(csv, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split(line, ',');
    if (fields.size() != kMetricsHeader.size()) {
      throw InvalidStateError(fmt::format("self-check: row {} has {} fields", n + 1, fields.size()));
    }
    std::vector<double> stored;
    for (const std::string& f : fields) {
      try {
        stored.push_back(parse_double("self-check", f));
      } catch (const ConfigError& e) {
        throw InvalidStateError(e.what());
      }
    }
    // Rebuilding the row re-validates both output states.
    const MetricsRow row = model.row(stored[0]);
    for (std::size_t i = 0; i < stored.size(); ++i) {
      const double scale = std::max(1.0, std::abs(row.cells[i]));
      if (std::abs(stored[i] - row.cells[i]) > kSelfCheckRel * scale) {
        throw InvalidStateError(fmt::format("self-check: row {} column {}: file {} recomputed {}", n + 1,
                                            kMetricsHeader[i], format_cell(stored[i]), format_cell(row.cells[i])));
      }
    }
    const double s_max = std::log(2.0) + 1e-12;
    for (std::size_t i : {6u, 7u}) {
      if (stored[i] < -1e-12 || stored[i] > s_max) {
        throw InvalidStateError(fmt::format("self-check: row {} entropy out of range", n + 1));
      }
    }
    for (std::size_t i : {8u, 9u, 10u, 11u, 12u}) {
      if (stored[i] < -1e-12 || stored[i] > 1.0 + 1e-12) {
        throw InvalidStateError(fmt::format("self-check: row {} column {} out of [0, 1]", n + 1, kMetricsHeader[i]));
      }
    }
    ++n;
  }
  if (n == 0) throw InvalidStateError("self-check: no rows");
  return n;
}

ExitCode cmd_rates(const ExperimentConfig& cfg, std::ostream& os) {
  cfg.validate();
  const DampingRates r = damping_rates(cfg.micro, cfg.rate_model());
  const LocalGenerator g = generator_from_micro(cfg.micro, cfg.rate_model());
  const bool has_shape = g.y + g.z > 0.0;
  const ChannelShape c = has_shape ? shape(g, 0.0) : ChannelShape{};
  const double nan = std::numeric_limits<double>::quiet_NaN();
  return with_output(cfg, os, [&](std::ostream& out) {
    const auto kv = [&](const char* key, double value) { out << key << '=' << fmt::format("{:.12g}", value) << '\n'; };
    out << "rate_model=" << (cfg.high_t_approx ? "high_temperature" : "exact_bose") << '\n';
    kv("T", cfg.micro.temperature);
    kv("alpha", cfg.micro.alpha);
    kv("omega0", cfg.micro.omega0);
    kv("omegac", cfg.micro.omega_c);
    kv("omegamax", cfg.micro.omega_max);
    kv("gamma_zz0", r.gamma_zz0);
    kv("gamma_plus", r.gamma_plus);
    kv("gamma_minus", r.gamma_minus);
    kv("lamb_delta", r.lamb_delta);
    kv("x", g.x);
    kv("y", g.y);
    kv("z", g.z);
    kv("theta", has_shape ? c.theta : nan);
    kv("Omega", has_shape ? c.omega : nan);
    for (const std::string& w : cfg.micro.regime_warnings()) out << "warning=" << w << '\n';
    return ExitCode::kOk;
  });
}

ExitCode cmd_kraus(const ExperimentConfig& cfg, std::ostream& os) {
  cfg.validate();
  const LocalGenerator g = generator_from_micro(cfg.micro, cfg.rate_model());
  const double t = cfg.kraus_t;

  struct Section {
    std::string name;
    LocalGenerator g;
  };
  std::vector<Section> sections;
  switch (cfg.channel) {
    case ChannelSelect::kGdp: sections = {{"gdp", g}}; break;
    case ChannelSelect::kDp: sections = {{"dp", standard_comparison(g)}}; break;
    case ChannelSelect::kBoth: sections = {{"gdp", g}, {"dp", standard_comparison(g)}}; break;
    case ChannelSelect::kIdentity: sections = {{"identity", LocalGenerator{}}}; break;
  }

  return with_output(cfg, os, [&](std::ostream& out) {
    ExitCode code = ExitCode::kOk;
    for (const Section& s : sections) {
      const KrausSet closed = channel_kraus(s.g, t);
      const KrausSet numeric = pipeline_kraus(s.g, t);
      const double d = action_discrepancy(closed, numeric);
      out << fmt::format("# channel={} t={:.12g}", s.name, t);
      if (s.g.y + s.g.z > 0.0) {
        const ChannelShape c = shape(s.g, t);
        out << fmt::format(" theta={:.12g} Omega={:.12g} tau={:.12g}", c.theta, c.omega, c.tau);
      }
      out << '\n';
      print_kraus_set(out, "closed_form", closed);
      print_kraus_set(out, "pipeline", numeric);
      out << fmt::format("discrepancy_{}={:.3e}\n", s.name, d);
      if (!(d <= kKrausDiscrepancyMax)) code = ExitCode::kNumerical;
    }
    return code;
  });
}

ExitCode cmd_metrics(const ExperimentConfig& cfg, std::ostream& os) {
  if (!cfg.self_check.empty()) {
    std::ifstream in(cfg.self_check, std::ios::binary);
    if (!in) throw IoError(fmt::format("cannot read '{}'", cfg.self_check));
    const std::size_t n = self_check_metrics(cfg, in);
    os << "self_check=ok rows=" << n << '\n';
    return ExitCode::kOk;
  }
  const Table t = metrics_table(cfg);
  const ExitCode code = with_output(cfg, os, [&](std::ostream& out) {
    write_csv(out, t);
    return ExitCode::kOk;
  });
  if (cfg.emit_svg) {
    write_text_file(svg_path(cfg, "volume"), svg_plot("Bloch volume", "t", {series_of(t, "GDP", "t", "V_gdp"),
                                                                            series_of(t, "DP", "t", "V_dp")}));
    write_text_file(svg_path(cfg, "trace_distance"),
                    svg_plot("Trace distance to the initial state", "t",
                             {series_of(t, "GDP", "t", "Tdist_gdp_init"), series_of(t, "DP", "t", "Tdist_dp_init")}));
    write_text_file(svg_path(cfg, "entropy"), svg_plot("Entropy", "t", {series_of(t, "GDP", "t", "S_gdp"),
                                                                        series_of(t, "DP", "t", "S_dp")}));
  }
  return code;
}

ExitCode cmd_entangle(const ExperimentConfig& cfg, std::ostream& os) {
  const Table t = entangle_table(cfg);
  const ExitCode code = with_output(cfg, os, [&](std::ostream& out) {
    write_csv(out, t);
    return ExitCode::kOk;
  });
  if (cfg.emit_svg) {
    write_text_file(svg_path(cfg, "concurrence"), svg_plot("Concurrence", "t", {series_of(t, "GDP", "t", "C_gdp"),
                                                                                series_of(t, "DP", "t", "C_dp")}));
  }
  return code;
}

ExitCode cmd_sweep(const ExperimentConfig& cfg, std::ostream& os) {
  cfg.validate();
  const std::vector<BathTriple> points = sweep_points(cfg);
  std::vector<Table> blocks;
  for (const BathTriple& b : points) {
    ExperimentConfig one = cfg;
    one.micro.temperature = b.temperature;
    one.micro.alpha = b.alpha;
    one.micro.omega_c = b.omega_c;
    if (!cfg.omega_max_explicit) one.micro.omega_max = kDefaultCutoffMultiple * b.omega_c;
    blocks.push_back(metrics_table(one));
  }
  const ExitCode code = with_output(cfg, os, [&](std::ostream& out) {
    out << "T,alpha,omega_c";
    for (const std::string& h : kMetricsHeader) out << ',' << h;
    out << '\n';
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      const BathTriple& b = points[k];
      out << fmt::format("# block {} T={:.12g} alpha={:.12g} omega_c={:.12g}\n", k + 1, b.temperature, b.alpha,
                         b.omega_c);
      for (const auto& row : blocks[k].rows) {
        out << format_cell(b.temperature) << ',' << format_cell(b.alpha) << ',' << format_cell(b.omega_c);
        for (double v : row) out << ',' << format_cell(v);
        out << '\n';
      }
    }
    return ExitCode::kOk;
  });
  if (cfg.emit_svg) {
    std::vector<Series> series;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      const BathTriple& b = points[k];
      series.push_back(series_of(blocks[k], fmt::format("T={:g} alpha={:g} omegac={:g}", b.temperature, b.alpha,
                                                        b.omega_c),
                                 "t", "V_gdp"));
    }
    write_text_file(svg_path(cfg, "volume"), svg_plot("Bloch volume (GDP)", "t", series));
  }
  return code;
}

std::string svg_plot(const std::string& title, const std::string& x_label, const std::vector<Series>& series) {
  constexpr double kW = 640, kH = 400, kLeft = 70, kRight = 20, kTop = 40, kBottom = 50;
  static const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const Series& s : series) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      x0 = std::min(x0, s.x[i]);
      x1 = std::max(x1, s.x[i]);
      y0 = std::min(y0, s.y[i]);
      y1 = std::max(y1, s.y[i]);
    }
  }
  if (!(x1 > x0)) x1 = x0 + 1.0;
  if (!(y1 > y0)) y1 = y0 + 1.0;
  const auto px = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * (kW - kLeft - kRight); };
  const auto py = [&](double y) { return kH - kBottom - (y - y0) / (y1 - y0) * (kH - kTop - kBottom); };

  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      "<text x=\"{2}\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"middle\">{3}</text>\n"
      "<rect x=\"{4}\" y=\"{5}\" width=\"{6}\" height=\"{7}\" fill=\"none\" stroke=\"black\"/>\n",
      kW, kH, kW / 2, title, kLeft, kTop, kW - kLeft - kRight, kH - kTop - kBottom);
  svg += fmt::format(
      "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">{}</text>\n",
      kW / 2, kH - 12, x_label);
  svg += fmt::format("<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\">{:.4g}</text>\n", kLeft,
                     kH - kBottom + 16, x0);
  svg += fmt::format(
      "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">{:.4g}</text>\n",
      kW - kRight, kH - kBottom + 16, x1);
  svg += fmt::format(
      "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">{:.4g}</text>\n",
      kLeft - 6, kH - kBottom, y0);
  svg += fmt::format(
      "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">{:.4g}</text>\n",
      kLeft - 6, kTop + 10, y1);

  for (std::size_t k = 0; k < series.size(); ++k) {
    const Series& s = series[k];
    const char* color = kColors[k % std::size(kColors)];
    std::string pts;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      pts += fmt::format("{}{:.2f},{:.2f}", pts.empty() ? "" : " ", px(s.x[i]), py(s.y[i]));
    }
    svg += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" points=\"{}\"/>\n", color, pts);
    svg += fmt::format(
        "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\" fill=\"{}\">{}</text>\n",
        kW - kRight - 190, kTop + 16 + 14 * static_cast<double>(k), color, s.label);
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace gdpk::cli
