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

// Generalized depolarizing (GDP) channel of a qubit coupled through
// sigma_x, sigma_y and sigma_z to three independent Ohmic bosonic baths.
//
// Units: hbar = k_B = 1; every frequency and the temperature are angular
// frequencies.

#pragma once

#include <string>
#include <vector>

#include "gdpk/me2kraus.hpp"
#include "gdpk/operator_algebra.hpp"

namespace gdpk {

inline constexpr double kDefaultCutoffMultiple = 20.0;  // omega_max = 20 omega_c

struct MicroParams {
  double temperature = 50.0;
  double alpha = 0.02;
  double omega0 = 1.0;
  double omega_c = 15.0;
  double omega_max = kDefaultCutoffMultiple * 15.0;

  // omega_max defaults to 20 omega_c.
  static MicroParams with_default_cap(double temperature, double alpha, double omega0, double omega_c);

  void validate() const;

  // Markovian-regime checks: omega0/omega_c < 0.2 and T/omega0 > 10.
  std::vector<std::string> regime_warnings() const;
};

enum class RateModel {
  kExactBose,        // gamma(+w0) ~ n + 1, gamma(-w0) ~ n
  kHighTemperature,  // both ~ n
};

struct DampingRates {
  double gamma_zz0 = 0.0;    // gamma_zz(0)
  double gamma_plus = 0.0;   // gamma_xx(w0) = gamma_yy(w0)
  double gamma_minus = 0.0;  // gamma_xx(-w0) = gamma_yy(-w0)
  double lamb_delta = 0.0;   // Delta
};

// Dimensionless channel coordinates: theta = x/(y+z), Omega = -2z/(y+z),
// tau = 2(y+z)t.
struct ChannelShape {
  double theta = 0.0;
  double omega = -1.0;
  double tau = 0.0;

  // Throws InvalidArgument unless tau >= 0 and Omega lies in (-2, 0).
  void validate() const;
};

// J(w) = alpha w exp(-w/omega_c)
double ohmic_density(double omega, const MicroParams& p);

// 1/(exp(w/T) - 1); throws InvalidArgument for w <= 0.
double bose_occupation(double omega, double temperature);

// J(w) n(w), continued to its w -> 0 limit alpha T.
double thermal_weight(double omega, const MicroParams& p);

DampingRates damping_rates(const MicroParams& p, RateModel model = RateModel::kExactBose);

// Delta = omega0 P.V. int_0^omega_max J(w) n(w) / (omega0^2 - w^2) dw.
// Throws QuadratureError if the excision-window estimates fail to converge.
double lamb_shift(const MicroParams& p);

struct LambShiftTrace {
  double value = 0.0;
  std::vector<double> windows;
  std::vector<double> estimates;
};
LambShiftTrace lamb_shift_trace(const MicroParams& p);

// x = Delta, y = gamma_zz(0), z = (gamma_xx(w0) + gamma_yy(w0))/2.
LocalGenerator generator_from_micro(const MicroParams& p, RateModel model = RateModel::kExactBose);

// Standard depolarizing comparison generator: x = 0 and y, z both replaced by
// their mean, which keeps y + z and therefore the tau scale.
LocalGenerator standard_comparison(const LocalGenerator& g);

// Throws DegenerateGeneratorError when y + z == 0.
ChannelShape shape(const LocalGenerator& g, double t);

// A generator and time realising c, normalised to y + z = 1/2 so that t = tau.
struct GeneratorAtTime {
  LocalGenerator generator;
  double t = 0.0;
};
GeneratorAtTime generator_for_shape(const ChannelShape& c);

// Closed-form Choi matrix of the GDP channel.
ChoiMatrix gdp_choi(const ChannelShape& c);

// The four closed-form GDP Kraus matrices. Where |sin(theta tau)| < 1e-8 the
// tan/cot factors are singular and the set is rebuilt from gdp_choi instead.
KrausSet gdp_kraus(const ChannelShape& c);

// Standard depolarizing set at p = 1 - e^{-tau}, in the GDP reduction's phase
// convention (last operator is -i/2 e^{-tau/2} sqrt(3 + e^tau) I).
KrausSet standard_kraus(double tau);

// tau -> infinity limit shared by every depolarizing family.
KrausSet asymptotic_kraus();

// GDP channel for generator g after time t. Handles the edge cases the
// closed form does not: y + z == 0 (pure rotation) and Omega on the boundary
// of (-2, 0) (numeric pipeline).
KrausSet channel_kraus(const LocalGenerator& g, double t);

// Bloch-sphere initial state (u, v) evolved analytically.
DensityMatrix analytic_state(double u, double v, const ChannelShape& c);

struct ReductionScan {
  std::vector<double> roots;  // omega0 values in [0, 5 omega_c]
  double f_at_zero = 0.0;
  bool degenerate = false;    // f identically zero (alpha == 0)
};

// Roots of f(w0) = 2 gamma_zz(0) - gamma_xx(w0) - gamma_yy(w0) located by a
// sign scan (step omega_c/1000) and bisection to 1e-10. p.omega0 is ignored.
ReductionScan reduction_condition_roots(const MicroParams& p, RateModel model = RateModel::kHighTemperature);

}  // namespace gdpk
