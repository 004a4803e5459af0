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

// Experiment drivers behind the gdpk command-line tool: configuration,
// figure-data tables and their CSV/SVG renderings.

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "gdpk/gdp_model.hpp"

namespace gdpk::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ExitCode : int { kOk = 0, kConfig = 2, kNumerical = 3, kIo = 4 };

// Which channels a run reports. kIdentity substitutes the identity channel
// for both families (reference runs).
enum class ChannelSelect { kGdp, kDp, kBoth, kIdentity };

struct BathTriple {
  double temperature;
  double alpha;
  double omega_c;
};

struct ExperimentConfig {
  ChannelSelect channel = ChannelSelect::kBoth;
  MicroParams micro;
  bool omega_c_explicit = false;
  bool omega_max_explicit = false;
  double t_start = 0.0;
  double t_end = 1.0;
  int points = 101;
  double kraus_t = 0.05;
  // initial Bloch angles for single-qubit runs
  double u = 0.0;
  double v = 0.0;
  // pair runs
  double omega1 = 0.1;
  double omega2 = 0.2;
  bool high_t_approx = false;
  bool emit_svg = false;
  std::string out;
  std::string self_check;
  // sweep: explicit triples, or the Cartesian product of the three lists
  std::vector<BathTriple> triples;
  std::vector<double> sweep_t;
  std::vector<double> sweep_alpha;
  std::vector<double> sweep_omega_c;

  RateModel rate_model() const;
  // Throws ConfigError.
  void validate() const;
};

// Flat key=value settings: '#' starts a comment, blank lines are ignored,
// keys are the long flag names without dashes (t-start and t_start are both
// accepted). Throws ConfigError on unknown keys or malformed values.
void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& value);
void apply_config_text(ExperimentConfig& cfg, const std::string& text, const std::string& origin);
void load_config_file(ExperimentConfig& cfg, const std::string& path);

std::vector<double> time_grid(const ExperimentConfig& cfg);
std::vector<BathTriple> sweep_points(const ExperimentConfig& cfg);
// The five baths of the ellipsoid comparison, largest ellipsoid first.
std::vector<BathTriple> default_sweep();

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> comments;  // emitted after the rows, '#'-prefixed
};

Table metrics_table(const ExperimentConfig& cfg);
Table entangle_table(const ExperimentConfig& cfg);

// header row, then "%.12e" cells; comma separators, LF line endings
void write_csv(std::ostream& os, const Table& t);
std::string format_cell(double value);

// Re-reads a metrics CSV for the same configuration, rebuilds each row's
// output states and checks them against the file. Returns the number of rows
// checked; throws NumericalError on the first mismatch.
std::size_t self_check_metrics(const ExperimentConfig& cfg, std::istream& csv);

// Subcommands. Output goes to `os` unless cfg.out is set.
ExitCode cmd_rates(const ExperimentConfig& cfg, std::ostream& os);
ExitCode cmd_kraus(const ExperimentConfig& cfg, std::ostream& os);
ExitCode cmd_metrics(const ExperimentConfig& cfg, std::ostream& os);
ExitCode cmd_entangle(const ExperimentConfig& cfg, std::ostream& os);
ExitCode cmd_sweep(const ExperimentConfig& cfg, std::ostream& os);

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};
std::string svg_plot(const std::string& title, const std::string& x_label, const std::vector<Series>& series);

}  // namespace gdpk::cli
