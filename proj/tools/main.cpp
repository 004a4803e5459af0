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

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "experiments.hpp"
#include "gdpk/errors.hpp"

namespace {

using gdpk::cli::ExitCode;
using gdpk::cli::ExperimentConfig;

struct Overrides {
  std::string config;
  std::vector<std::pair<std::string, std::string>> settings;
};

struct ValueFlag {
  const char* name;
  const char* help;
};

constexpr ValueFlag kValueFlags[] = {
    {"T", "bath temperature"},
    {"alpha", "coupling strength"},
    {"omega0", "qubit frequency"},
    {"omegac", "bath cutoff frequency"},
    {"omegamax", "upper limit of the frequency integrals (default 20 omegac)"},
    {"t-start", "first time of the grid"},
    {"t-end", "last time of the grid"},
    {"points", "number of grid points"},
    {"t", "time of the kraus report"},
    {"u", "azimuth of the initial Bloch vector"},
    {"v", "polar angle of the initial Bloch vector"},
    {"omega1", "frequency of qubit 1 (entangle)"},
    {"omega2", "frequency of qubit 2 (entangle)"},
    {"channel", "gdp, dp, both or identity"},
    {"out", "output file instead of stdout"},
    {"self-check", "re-read a metrics CSV and verify every row"},
    {"triples", "sweep points T:alpha:omegac, comma separated"},
    {"sweep-T", "sweep temperatures, comma separated"},
    {"sweep-alpha", "sweep couplings, comma separated"},
    {"sweep-omegac", "sweep cutoffs, comma separated"},
};

void add_common(CLI::App* sub, Overrides& o) {
  sub->add_option("--config", o.config, "key=value configuration file; flags override it");
  for (const ValueFlag& f : kValueFlags) {
    const std::string key = f.name;
    sub->add_option_function<std::string>(
        "--" + key, [&o, key](const std::string& v) { o.settings.emplace_back(key, v); }, f.help);
  }
  sub->add_flag_callback("--high-t-approx", [&o] { o.settings.emplace_back("high-t-approx", "true"); },
                         "use the high-temperature form of the damping rates");
  sub->add_flag_callback("--emit-svg", [&o] { o.settings.emplace_back("emit-svg", "true"); },
                         "also write SVG plots next to --out");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gdpk: qubit dephasing/depolarizing channels from a microscopic bath"};
  app.require_subcommand(1);

  using Command = ExitCode (*)(const ExperimentConfig&, std::ostream&);
  const std::pair<const char*, Command> commands[] = {
      {"rates", gdpk::cli::cmd_rates},       {"kraus", gdpk::cli::cmd_kraus},
      {"metrics", gdpk::cli::cmd_metrics},   {"entangle", gdpk::cli::cmd_entangle},
      {"sweep", gdpk::cli::cmd_sweep},
  };
  const char* help[] = {
      "damping rates, Lamb shift and channel parameters",
      "closed-form and numerically derived Kraus operators",
      "Bloch volume, entropy and trace-distance table",
      "two-qubit concurrence and entanglement of formation",
      "metrics tables over a set of bath parameters",
  };

  Overrides overrides;
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < std::size(commands); ++i) {
    subs.push_back(app.add_subcommand(commands[i].first, help[i]));
    add_common(subs.back(), overrides);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::kConfig);
  }

  try {
    ExperimentConfig cfg;
    if (!overrides.config.empty()) gdpk::cli::load_config_file(cfg, overrides.config);
    for (const auto& [key, value] : overrides.settings) gdpk::cli::apply_setting(cfg, key, value);
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (subs[i]->parsed()) {
        const ExitCode code = commands[i].second(cfg, std::cout);
        std::cout.flush();
        if (!std::cout) throw gdpk::cli::IoError("write to stdout failed");
        return static_cast<int>(code);
      }
    }
  } catch (const gdpk::cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kConfig);
  } catch (const gdpk::InvalidArgument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kConfig);
  } catch (const gdpk::cli::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kIo);
  } catch (const gdpk::Error& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kNumerical);
  }
  return static_cast<int>(ExitCode::kConfig);
}
