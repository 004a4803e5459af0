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

#include "gdpk/me2kraus.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gdpk/errors.hpp"

namespace gdpk {

void LocalGenerator::validate() const {
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) {
    throw InvalidArgument("LocalGenerator: coefficients must be finite");
  }
  if (y < 0.0 || z < 0.0) throw InvalidArgument("LocalGenerator: rates y and z must be non-negative");
}

CMat LocalGenerator::apply(const CMat& rho) const {
  if (rho.rows() != 2 || rho.cols() != 2) throw DimensionError("LocalGenerator::apply: expected 2x2");
  const CMat& sx = pauli::x();
  const CMat& sy = pauli::y();
  const CMat& sz = pauli::z();
  const Complex i(0.0, 1.0);
  return -i * x * (sz * rho - rho * sz) + y * (sz * rho * sz - rho) + z * (sx * rho * sx - rho) +
         z * (sy * rho * sy - rho);
}

RMat generator_matrix(const LocalGenerator& g) {
  g.validate();
  return generator_matrix([&g](const CMat& rho) { return g.apply(rho); });
}

RMat generator_matrix(const SuperOperator& lambda) {
  const auto& basis = hermitian_basis();
  RMat l(4, 4);
  for (int k = 0; k < 4; ++k) {
    for (int col = 0; col < 4; ++col) {
      const Complex v = (basis[k] * lambda(basis[col])).trace();
      if (std::abs(v.imag()) > 1e-12) {
        throw InvalidArgument("generator_matrix: map does not preserve hermiticity");
      }
      l(k, col) = v.real();
    }
  }
  return l;
}

PropagatorMatrix propagator(const RMat& l, double t) {
  if (l.rows() != 4 || l.cols() != 4) throw DimensionError("propagator: L must be 4x4");
  if (!(t >= 0.0)) throw InvalidArgument("propagator: t must be non-negative");
  PropagatorMatrix out{mat_exp(l, t), t};
  RMat first_row_error = out.f.row(0);
  first_row_error(0) -= 1.0;
  const double err = first_row_error.cwiseAbs().maxCoeff();
  if (err > tol::kPropagatorFirstRow) {
    throw NumericalError("propagator: map is not trace preserving (first-row deviation " +
                         std::to_string(err) + ")");
  }
  return out;
}

ChoiMatrix choi(const PropagatorMatrix& f) {
  if (f.f.rows() != 4 || f.f.cols() != 4) throw DimensionError("choi: F must be 4x4");
  const auto& g = hermitian_basis();
  CMat s = CMat::Zero(4, 4);
  for (int n = 0; n < 4; ++n) {
    for (int m = 0; m < 4; ++m) {
      Complex acc = 0.0;
      for (int sr = 0; sr < 4; ++sr) {
        for (int r = 0; r < 4; ++r) {
          const double fsr = f.f(sr, r);
          if (fsr == 0.0) continue;
          acc += fsr * (g[r] * g[n].adjoint() * g[sr] * g[m]).trace();
        }
      }
      s(n, m) = acc;
    }
  }
  return {s, f.time};
}

KrausSet kraus_from_choi(const ChoiMatrix& s) {
  if (s.s.rows() != 4 || s.s.cols() != 4) throw DimensionError("kraus_from_choi: S must be 4x4");
  const HermEig eig = herm_eig(s.s);
  const auto& g = hermitian_basis();
  KrausSet out;
  out.time_tag = s.time;
  for (Eigen::Index i = 0; i < 4; ++i) {
    const double d = eig.values(i);
    if (d < -tol::kPsdError) {
      throw CompletePositivityError("kraus_from_choi: Choi eigenvalue " + std::to_string(d) +
                                    " is negative; the map is not completely positive");
    }
    if (d < tol::kKrausDrop) continue;
    const double w = std::sqrt(d);
    CMat e = CMat::Zero(2, 2);
    for (int j = 0; j < 4; ++j) e += w * eig.vectors(j, i) * g[j];
    out.ops.push_back(std::move(e));
  }
  return out;
}

KrausSet pipeline_kraus(const LocalGenerator& g, double t) {
  return kraus_from_choi(choi(propagator(generator_matrix(g), t)));
}

CMat apply_choi(const ChoiMatrix& s, const CMat& x) {
  const auto& g = hermitian_basis();
  CMat out = CMat::Zero(2, 2);
  for (int n = 0; n < 4; ++n) {
    for (int m = 0; m < 4; ++m) out += s.s(n, m) * g[n] * x * g[m].adjoint();
  }
  return out;
}

CMat apply_map(const KrausSet& k, const CMat& x) {
  CMat out = CMat::Zero(x.rows(), x.cols());
  for (const CMat& e : k.ops) out += e * x * e.adjoint();
  return out;
}

double completeness_error(const KrausSet& k) {
  if (k.ops.empty()) return 1.0;
  const Eigen::Index n = k.dim();
  CMat acc = CMat::Zero(n, n);
  for (const CMat& e : k.ops) {
    if (e.rows() != n || e.cols() != n) throw DimensionError("KrausSet: operators differ in shape");
    acc += e.adjoint() * e;
  }
  return (acc - CMat::Identity(n, n)).cwiseAbs().maxCoeff();
}

DensityMatrix apply_channel(const KrausSet& k, const DensityMatrix& rho) {
  const double err = completeness_error(k);
  if (err > tol::kCompleteness) {
    throw InvalidKrausError("apply_channel: completeness violated by " + std::to_string(err));
  }
  if (k.dim() != rho.dim()) throw DimensionError("apply_channel: Kraus and state dimensions differ");
  return DensityMatrix(apply_map(k, rho.mat()));
}

namespace {
template <class Other>
double discrepancy_impl(Eigen::Index n, const KrausSet& a, const Other& b_action) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      CMat unit = CMat::Zero(n, n);
      unit(i, j) = 1.0;
      worst = std::max(worst, (apply_map(a, unit) - b_action(unit)).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}
}  // namespace

double action_discrepancy(const KrausSet& a, const KrausSet& b) {
  if (a.dim() != b.dim()) throw DimensionError("action_discrepancy: dimension mismatch");
  return discrepancy_impl(a.dim(), a, [&b](const CMat& x) { return apply_map(b, x); });
}

double action_discrepancy(const KrausSet& a, const SuperOperator& b) {
  return discrepancy_impl(a.dim(), a, b);
}

KrausSet identity_kraus(Eigen::Index dim, double time_tag) {
  return KrausSet{{CMat::Identity(dim, dim)}, time_tag};
}

}  // namespace gdpk
