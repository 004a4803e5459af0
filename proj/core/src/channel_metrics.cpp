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

#include "gdpk/channel_metrics.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "gdpk/errors.hpp"

namespace gdpk {

namespace {
constexpr double kUnitBallVolume = 4.0 * std::numbers::pi / 3.0;
constexpr double kBlochNormSlack = 1e-10;

const CMat& pauli_at(int i) {
  switch (i) {
    case 0: return pauli::x();
    case 1: return pauli::y();
    default: return pauli::z();
  }
}
}  // namespace

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

BlochVector BlochVector::from_angles(double u, double v) {
  return {std::sin(v) * std::cos(u), std::sin(v) * std::sin(u), std::cos(v)};
}

DensityMatrix bloch_to_density(const BlochVector& b) {
  if (b.norm() > 1.0 + kBlochNormSlack) throw InvalidArgument("bloch_to_density: |n| exceeds 1");
  return DensityMatrix(0.5 * (pauli::identity() + b.x * pauli::x() + b.y * pauli::y() + b.z * pauli::z()));
}

BlochVector density_to_bloch(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw DimensionError("density_to_bloch: expected a qubit state");
  const CMat& m = rho.mat();
  return {(pauli::x() * m).trace().real(), (pauli::y() * m).trace().real(),
          (pauli::z() * m).trace().real()};
}

BlochMap bloch_map(const KrausSet& k) {
  if (k.dim() != 2) throw DimensionError("bloch_map: expected a qubit channel");
  BlochMap out{Eigen::Matrix3d::Zero(), Eigen::Vector3d::Zero()};
  const CMat image_of_identity = apply_map(k, pauli::identity());
  for (int i = 0; i < 3; ++i) {
    out.offset(i) = 0.5 * (pauli_at(i) * image_of_identity).trace().real();
    for (int j = 0; j < 3; ++j) {
      out.linear(i, j) = 0.5 * (pauli_at(i) * apply_map(k, pauli_at(j))).trace().real();
    }
  }
  return out;
}

Eigen::Vector3d semi_axes(const KrausSet& k) {
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(bloch_map(k).linear);
  return svd.singularValues();
}

double ellipsoid_volume(const ChannelShape& c) {
  if (!(c.tau >= 0.0)) throw InvalidArgument("ellipsoid_volume: tau must be non-negative");
  return kUnitBallVolume * std::exp(c.tau * (c.omega - 2.0));
}

double ellipsoid_volume(const Eigen::Vector3d& axes) { return kUnitBallVolume * axes.prod(); }

double volume_rate(const LocalGenerator& g, double t) {
  g.validate();
  if (!(t >= 0.0)) throw InvalidArgument("volume_rate: t must be non-negative");
  const double rate = 4.0 * (2.0 * g.z + g.y);
  return -rate * std::exp(-rate * t);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<CMat> solver(rho.mat(), Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double lambda = solver.eigenvalues()(i);
    if (lambda > 0.0) s -= lambda * std::log(lambda);
  }
  return s;
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw DimensionError("trace_distance: dimension mismatch");
  return 0.5 * trace_norm(rho.mat() - sigma.mat());
}

}  // namespace gdpk
