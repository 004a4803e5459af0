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

// Generic qubit pipeline: local generator -> L -> F = e^{Lt} -> Choi S -> Kraus set.
//
// All matrices on the Bloch side are written in the fixed Hermitian basis
// G = (I, sigma_x, sigma_y, sigma_z)/sqrt(2) from operator_algebra.hpp, so
// F_{kl} = tr[G_k phi(G_l)] and S_{nm} = sum_{s,r} F_{sr} tr[G_r G_n^+ G_s G_m].

#pragma once

#include <functional>
#include <vector>

#include "gdpk/operator_algebra.hpp"

namespace gdpk {

namespace tol {
inline constexpr double kKrausDrop = 1e-14;        // Choi weights below this yield no operator
inline constexpr double kCompleteness = 1e-8;      // apply_channel precondition
inline constexpr double kPropagatorFirstRow = 1e-10;
}  // namespace tol

// d rho/dt = -i x [sigma_z, rho] + y (sz rho sz - rho) + z (sx rho sx - rho) + z (sy rho sy - rho)
//
// x is the Lamb-shifted level splitting, y the sigma_z dephasing rate and z
// the common sigma_x / sigma_y rate.
struct LocalGenerator {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  // Throws InvalidArgument for negative or non-finite rates.
  void validate() const;
  CMat apply(const CMat& rho) const;
};

// Any linear map on 2x2 operators.
using SuperOperator = std::function<CMat(const CMat&)>;

struct PropagatorMatrix {
  RMat f;  // 4x4, first row (1, 0, 0, 0)
  double time = 0.0;
};

struct ChoiMatrix {
  CMat s;  // 4x4 Hermitian, trace 2 for trace-preserving maps
  double time = 0.0;
};

// Operators are ordered by descending Choi weight. That order is a
// convenience only; two sets describe the same channel iff their actions
// agree (see action_discrepancy).
struct KrausSet {
  std::vector<CMat> ops;
  double time_tag = 0.0;

  Eigen::Index dim() const { return ops.empty() ? 0 : ops.front().rows(); }
};

RMat generator_matrix(const LocalGenerator& g);
// L_{kl} = tr[G_k Lambda(G_l)]; throws InvalidArgument if Lambda does not
// preserve hermiticity.
RMat generator_matrix(const SuperOperator& lambda);

// F = e^{l t}. Throws InvalidArgument for t < 0 and NumericalError if the
// result is not trace preserving.
PropagatorMatrix propagator(const RMat& l, double t);

ChoiMatrix choi(const PropagatorMatrix& f);

// Kraus operators E_i = sqrt(d_i) sum_j u_{ji} G_j from S = U D U^+.
// Throws CompletePositivityError if S has an eigenvalue below -1e-8.
KrausSet kraus_from_choi(const ChoiMatrix& s);

// generator_matrix -> propagator -> choi -> kraus_from_choi.
KrausSet pipeline_kraus(const LocalGenerator& g, double t);

// sum_{nm} S_{nm} G_n x G_m^+
CMat apply_choi(const ChoiMatrix& s, const CMat& x);

// sum_k E_k x E_k^+ without any validation.
CMat apply_map(const KrausSet& k, const CMat& x);

// max |sum_k E_k^+ E_k - I|
double completeness_error(const KrausSet& k);

// Throws InvalidKrausError if completeness fails beyond tol::kCompleteness.
DensityMatrix apply_channel(const KrausSet& k, const DensityMatrix& rho);

// Largest entrywise difference of the two channel actions over all matrix
// units |i><j|. Zero iff the sets describe the same linear map.
double action_discrepancy(const KrausSet& a, const KrausSet& b);
double action_discrepancy(const KrausSet& a, const SuperOperator& b);

KrausSet identity_kraus(Eigen::Index dim, double time_tag = 0.0);

}  // namespace gdpk
