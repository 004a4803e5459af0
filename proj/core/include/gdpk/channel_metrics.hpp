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

// Bloch-sphere geometry and state-comparison measures for qubit channels.

#pragma once

#include <Eigen/Dense>

#include "gdpk/gdp_model.hpp"
#include "gdpk/me2kraus.hpp"
#include "gdpk/operator_algebra.hpp"

namespace gdpk {

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
  // (sin v cos u, sin v sin u, cos v)
  static BlochVector from_angles(double u, double v);
};

// rho = (I + n.sigma)/2; throws InvalidArgument if |n| > 1 + 1e-10.
DensityMatrix bloch_to_density(const BlochVector& b);
BlochVector density_to_bloch(const DensityMatrix& rho);

// Affine action n -> linear * n + offset of a qubit channel on Bloch vectors.
struct BlochMap {
  Eigen::Matrix3d linear;
  Eigen::Vector3d offset;
};
BlochMap bloch_map(const KrausSet& k);

// Singular values of the Bloch map's linear part, descending.
Eigen::Vector3d semi_axes(const KrausSet& k);

// V(tau) = (4 pi / 3) e^{tau (Omega - 2)}
double ellipsoid_volume(const ChannelShape& c);
// (4 pi / 3) a b c
double ellipsoid_volume(const Eigen::Vector3d& axes);

// kappa(t) = (1/V0) dV/dt = -4(2z + y) e^{-4(2z + y) t}
double volume_rate(const LocalGenerator& g, double t);

// Natural logarithm, 0 ln 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho);

// (1/2) ||rho - sigma||_1
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace gdpk
