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

#include "gdpk/gdp_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "gdpk/errors.hpp"

namespace gdpk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSingularSine = 1e-8;

CMat diag2(Complex a, Complex d) {
  CMat m = CMat::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = d;
  return m;
}

CMat offdiag2(Complex b, Complex c) {
  CMat m = CMat::Zero(2, 2);
  m(0, 1) = b;
  m(1, 0) = c;
  return m;
}

// gamma_xx(w0) = gamma_yy(w0); the Lamb shift is not needed here.
double transverse_rate(double omega0, const MicroParams& p, RateModel model) {
  const double weight = thermal_weight(omega0, p);
  const double emission = model == RateModel::kExactBose ? ohmic_density(omega0, p) : 0.0;
  return 0.5 * kPi * (weight + emission);
}

double reduction_residual(double omega0, const MicroParams& p, RateModel model) {
  const double gamma_zz0 = 2.0 * kPi * p.alpha * p.temperature;
  return 2.0 * gamma_zz0 - 2.0 * transverse_rate(omega0, p, model);
}

}  // namespace

MicroParams MicroParams::with_default_cap(double temperature, double alpha, double omega0, double omega_c) {
  return MicroParams{temperature, alpha, omega0, omega_c, kDefaultCutoffMultiple * omega_c};
}

void MicroParams::validate() const {
  if (!(temperature > 0.0) || !std::isfinite(temperature)) throw InvalidArgument("MicroParams: T must be positive");
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw InvalidArgument("MicroParams: alpha must be non-negative");
  if (!(omega0 >= 0.0) || !std::isfinite(omega0)) throw InvalidArgument("MicroParams: omega0 must be non-negative");
  if (!(omega_c > 0.0) || !std::isfinite(omega_c)) throw InvalidArgument("MicroParams: omega_c must be positive");
  if (!(omega_max > 0.0) || !std::isfinite(omega_max)) {
    throw InvalidArgument("MicroParams: omega_max must be positive");
  }
}

std::vector<std::string> MicroParams::regime_warnings() const {
  std::vector<std::string> out;
  const double ratio = omega0 / omega_c;
  if (!(ratio < 0.2)) {
    std::ostringstream os;
    os << "omega0/omega_c = " << ratio << " is not << 1; Markovian approximation is questionable";
    out.push_back(os.str());
  }
  if (omega0 > 0.0 && !(temperature / omega0 > 10.0)) {
    std::ostringstream os;
    os << "T/omega0 = " << temperature / omega0 << " is not >> 1; high-temperature regime not reached";
    out.push_back(os.str());
  }
  return out;
}

void ChannelShape::validate() const {
  if (!std::isfinite(theta) || !std::isfinite(omega) || !std::isfinite(tau)) {
    throw InvalidArgument("ChannelShape: parameters must be finite");
  }
  if (tau < 0.0) throw InvalidArgument("ChannelShape: tau must be non-negative");
  if (!(omega > -2.0 && omega < 0.0)) throw InvalidArgument("ChannelShape: Omega must lie in (-2, 0)");
}

double ohmic_density(double omega, const MicroParams& p) {
  if (omega < 0.0) throw InvalidArgument("ohmic_density: omega must be non-negative");
  return p.alpha * omega * std::exp(-omega / p.omega_c);
}

double bose_occupation(double omega, double temperature) {
  if (!(omega > 0.0)) throw InvalidArgument("bose_occupation: omega must be positive");
  if (!(temperature > 0.0)) throw InvalidArgument("bose_occupation: T must be positive");
  return 1.0 / std::expm1(omega / temperature);
}

double thermal_weight(double omega, const MicroParams& p) {
  if (omega == 0.0) return p.alpha * p.temperature;
  const double x = omega / p.temperature;
  // alpha w e^{-w/wc} / (e^{w/T} - 1) = alpha T e^{-w/wc} x / expm1(x)
  return p.alpha * p.temperature * std::exp(-omega / p.omega_c) * (x / std::expm1(x));
}

DampingRates damping_rates(const MicroParams& p, RateModel model) {
  p.validate();
  DampingRates r;
  r.gamma_zz0 = 2.0 * kPi * p.alpha * p.temperature;
  const double weight = thermal_weight(p.omega0, p);
  if (model == RateModel::kExactBose) {
    r.gamma_plus = 0.5 * kPi * (weight + ohmic_density(p.omega0, p));
  } else {
    r.gamma_plus = 0.5 * kPi * weight;
  }
  r.gamma_minus = 0.5 * kPi * weight;
  r.lamb_delta = lamb_shift(p);
  return r;
}

LocalGenerator generator_from_micro(const MicroParams& p, RateModel model) {
  const DampingRates r = damping_rates(p, model);
  return LocalGenerator{r.lamb_delta, r.gamma_zz0, r.gamma_plus};
}

LocalGenerator standard_comparison(const LocalGenerator& g) {
  const double mean = 0.5 * (g.y + g.z);
  return LocalGenerator{0.0, mean, mean};
}

ChannelShape shape(const LocalGenerator& g, double t) {
  g.validate();
  if (t < 0.0) throw InvalidArgument("shape: t must be non-negative");
  const double total = g.y + g.z;
  if (total == 0.0) throw DegenerateGeneratorError("shape: y + z == 0, the channel is a pure rotation");
  return ChannelShape{g.x / total, -2.0 * g.z / total, 2.0 * total * t};
}

GeneratorAtTime generator_for_shape(const ChannelShape& c) {
  c.validate();
  const double z = -0.25 * c.omega;
  return {LocalGenerator{0.5 * c.theta, 0.5 - z, z}, c.tau};
}

ChoiMatrix gdp_choi(const ChannelShape& c) {
  c.validate();
  const double decay = std::exp(-c.tau);
  const double longitudinal = std::exp(c.tau * c.omega);
  const double cs = decay * std::cos(c.theta * c.tau);
  const double sn = decay * std::sin(c.theta * c.tau);
  const Complex i(0.0, 1.0);
  CMat s = CMat::Zero(4, 4);
  s(0, 0) = cs + 0.5 * longitudinal + 0.5;
  s(0, 3) = i * sn;
  s(1, 1) = 0.5 - 0.5 * longitudinal;
  s(2, 2) = 0.5 - 0.5 * longitudinal;
  s(3, 0) = -i * sn;
  s(3, 3) = -cs + 0.5 * longitudinal + 0.5;
  return {s, c.tau};
}

KrausSet gdp_kraus(const ChannelShape& c) {
  c.validate();
  const double angle = c.theta * c.tau;
  if (std::abs(std::sin(angle)) < kSingularSine) return kraus_from_choi(gdp_choi(c));

  const Complex i(0.0, 1.0);
  const double decay = std::exp(-c.tau);
  const double longitudinal = std::exp(c.tau * c.omega);
  const double flip = 0.5 * std::sqrt(std::max(0.0, 1.0 - longitudinal));
  const double tn = std::tan(0.5 * angle);
  const double ct = 1.0 / tn;
  const double r3 = std::sqrt(std::max(0.0, longitudinal - 2.0 * decay + 1.0) / (tn * tn + 1.0));
  const double r4 = std::sqrt((longitudinal + 2.0 * decay + 1.0) / (ct * ct + 1.0));

  KrausSet k;
  k.time_tag = c.tau;
  k.ops.push_back(offdiag2(-i * flip, i * flip));
  k.ops.push_back(offdiag2(flip, flip));
  k.ops.push_back(diag2(0.5 * (1.0 - i * tn) * r3, 0.5 * (-1.0 - i * tn) * r3));
  k.ops.push_back(diag2(0.5 * (1.0 + i * ct) * r4, 0.5 * i * (ct + i) * r4));
  return k;
}

KrausSet standard_kraus(double tau) {
  if (!(tau >= 0.0)) throw InvalidArgument("standard_kraus: tau must be non-negative");
  const Complex i(0.0, 1.0);
  const double s = 0.5 * std::sqrt(-std::expm1(-tau));
  // e^{-tau/2} sqrt(3 + e^tau), written to stay finite for large tau
  const double id_weight = 0.5 * std::sqrt(3.0 * std::exp(-tau) + 1.0);
  KrausSet k;
  k.time_tag = tau;
  k.ops.push_back(offdiag2(-i * s, i * s));
  k.ops.push_back(offdiag2(s, s));
  k.ops.push_back(diag2(s, -s));
  k.ops.push_back(diag2(-i * id_weight, -i * id_weight));
  return k;
}

KrausSet asymptotic_kraus() {
  const Complex i(0.0, 1.0);
  KrausSet k;
  k.time_tag = std::numeric_limits<double>::infinity();
  k.ops.push_back(offdiag2(-0.5 * i, 0.5 * i));
  k.ops.push_back(offdiag2(0.5, 0.5));
  k.ops.push_back(diag2(0.5 * i, -0.5 * i));
  k.ops.push_back(diag2(0.5 * i, 0.5 * i));
  return k;
}

KrausSet channel_kraus(const LocalGenerator& g, double t) {
  g.validate();
  if (!(t >= 0.0)) throw InvalidArgument("channel_kraus: t must be non-negative");
  if (g.y + g.z == 0.0) {
    // Lambda = -i x [sigma_z, .] generates the unitary e^{-i x t sigma_z}.
    const Complex phase = std::exp(Complex(0.0, -g.x * t));
    return KrausSet{{diag2(phase, std::conj(phase))}, t};
  }
  const ChannelShape c = shape(g, t);
  if (c.omega > -2.0 && c.omega < 0.0) {
    KrausSet k = gdp_kraus(c);
    k.time_tag = t;
    return k;
  }
  return pipeline_kraus(g, t);
}

DensityMatrix analytic_state(double u, double v, const ChannelShape& c) {
  if (!(v >= 0.0 && v <= kPi)) throw InvalidArgument("analytic_state: v must lie in [0, pi]");
  if (!(u >= 0.0 && u <= 2.0 * kPi)) throw InvalidArgument("analytic_state: u must lie in [0, 2 pi]");
  if (!(c.tau >= 0.0)) throw InvalidArgument("analytic_state: tau must be non-negative");
  const double transverse = std::exp(-c.tau) * std::sin(v);
  const double phase = u + c.theta * c.tau;
  const double nx = transverse * std::cos(phase);
  const double ny = transverse * std::sin(phase);
  const double nz = std::exp(c.tau * c.omega) * std::cos(v);
  const CMat rho = 0.5 * (pauli::identity() + nx * pauli::x() + ny * pauli::y() + nz * pauli::z());
  return DensityMatrix(rho);
}

ReductionScan reduction_condition_roots(const MicroParams& p, RateModel model) {
  MicroParams q = p;
  q.omega0 = 0.0;
  q.validate();
  ReductionScan out;
  out.f_at_zero = reduction_residual(0.0, q, model);
  if (q.alpha == 0.0) {
    out.degenerate = true;
    return out;
  }

  const auto f = [&](double w) { return reduction_residual(w, q, model); };
  const double step = q.omega_c / 1000.0;
  const int steps = 5000;
  double left = 0.0;
  double f_left = f(left);
  if (f_left == 0.0) out.roots.push_back(0.0);
  for (int k = 1; k <= steps; ++k) {
    const double right = k * step;
    const double f_right = f(right);
    if (f_right == 0.0) {
      out.roots.push_back(right);
    } else if (f_left != 0.0 && (f_left < 0.0) != (f_right < 0.0)) {
      double a = left;
      double b = right;
      double fa = f_left;
      while (b - a > 1e-10) {
        const double mid = 0.5 * (a + b);
        const double fm = f(mid);
        if ((fm < 0.0) == (fa < 0.0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      out.roots.push_back(0.5 * (a + b));
    }
    left = right;
    f_left = f_right;
  }
  return out;
}

}  // namespace gdpk
