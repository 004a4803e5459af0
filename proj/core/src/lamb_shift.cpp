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

// Principal-value quadrature for the Lamb shift.
//
// With g(w) = J(w) n(w) / (omega0 + w) the integrand is g(w) / (omega0 - w).
// A window (omega0 - eps, omega0 + eps) is cut out of the range; the part
// inside the window is folded onto [0, eps] as (g(omega0 - s) - g(omega0 + s))/s,
// which is regular at s = 0. Each estimate is therefore a full principal
// value, and shrinking eps only checks that the quadrature has converged.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <iterator>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "gdpk/errors.hpp"
#include "gdpk/gdp_model.hpp"

namespace gdpk {

namespace {

constexpr double kWindows[] = {1e-2, 5e-3, 2.5e-3};
constexpr int kExtraHalvings = 6;
constexpr double kConvergedRel = 1e-8;
constexpr double kQuadTol = 1e-12;
constexpr unsigned kMaxDepth = 12;
constexpr double kSplitRatio = 4.0;

template <class F>
double integrate(F&& f, double a, double b) {
  if (b <= a) return 0.0;
  double err = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, kMaxDepth, kQuadTol, &err);
}

// Integrate over [a, b] where one endpoint sits next to the pole at w0. The
// range is cut at distances eps * 4^k from the pole so each piece sees a
// bounded relative variation of 1/(w0 - w).
template <class F>
double integrate_near_pole(F&& f, double a, double b, double w0) {
  if (b <= a) return 0.0;
  const bool right = a >= w0;
  const double near = right ? a - w0 : w0 - b;
  const double far = right ? b - w0 : w0 - a;
  double sum = 0.0;
  double lo = near;
  while (lo < far) {
    const double hi = std::min(far, lo * kSplitRatio);
    sum += right ? integrate(f, w0 + lo, w0 + hi) : integrate(f, w0 - hi, w0 - lo);
    lo = hi;
  }
  return sum;
}

}  // namespace

LambShiftTrace lamb_shift_trace(const MicroParams& p) {
  p.validate();
  LambShiftTrace trace;
  if (p.omega0 == 0.0 || p.alpha == 0.0) return trace;

  const double w0 = p.omega0;
  const double cap = p.omega_max;
  const auto g = [&](double w) { return thermal_weight(w, p) / (w0 + w); };
  const auto h = [&](double w) { return g(w) / (w0 - w); };

  if (w0 > cap) {
    trace.value = w0 * integrate_near_pole(h, 0.0, cap, w0);
    return trace;
  }
  const double room = std::min(w0, cap - w0);
  if (!(room > 0.0)) {
    throw QuadratureError("lamb_shift: omega0 coincides with the integration cap omega_max");
  }
  const double scale = std::min(1.0, 0.5 * room / kWindows[0]);

  const auto estimate = [&](double eps) {
    const auto folded = [&](double s) { return (g(w0 - s) - g(w0 + s)) / s; };
    return integrate_near_pole(h, 0.0, w0 - eps, w0) + integrate_near_pole(h, w0 + eps, cap, w0) +
           integrate(folded, 0.0, eps);
  };

  std::vector<double> eps_list(std::begin(kWindows), std::end(kWindows));
  for (double& e : eps_list) e *= scale;

  bool converged = false;
  for (std::size_t k = 0; k < eps_list.size() + kExtraHalvings && !converged; ++k) {
    const double eps = k < eps_list.size() ? eps_list[k] : trace.windows.back() * 0.5;
    trace.windows.push_back(eps);
    trace.estimates.push_back(estimate(eps));
    const std::size_t n = trace.estimates.size();
    if (n >= std::size(kWindows)) {
      const double last = trace.estimates[n - 1];
      const double prev = trace.estimates[n - 2];
      const double prev2 = trace.estimates[n - 3];
      const double tolerance = kConvergedRel * std::max(std::abs(last), 1e-300);
      converged = std::abs(last - prev) < tolerance && std::abs(prev - prev2) < tolerance;
    }
  }
  if (!converged) {
    std::ostringstream os;
    os.precision(16);
    os << "lamb_shift: principal value did not converge; windows/estimates:";
    for (std::size_t k = 0; k < trace.windows.size(); ++k) {
      os << ' ' << trace.windows[k] << '/' << trace.estimates[k];
    }
    throw QuadratureError(os.str());
  }
  trace.value = w0 * trace.estimates.back();
  return trace;
}

double lamb_shift(const MicroParams& p) { return lamb_shift_trace(p).value; }

}  // namespace gdpk
