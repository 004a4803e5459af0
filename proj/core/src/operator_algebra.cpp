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

#include "gdpk/operator_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "gdpk/errors.hpp"

namespace gdpk {

namespace {

CMat make2(Complex a, Complex b, Complex c, Complex d) {
  CMat m(2, 2);
  m << a, b, c, d;
  return m;
}

template <class Mat>
double one_norm(const Mat& m) {
  return m.cwiseAbs().colwise().sum().maxCoeff();
}

// Higham (2005) degree-13 Pade with scaling and squaring.
template <class Mat>
Mat expm_pade13(const Mat& a_in) {
  static constexpr double b[] = {64764752532480000.0,
                                 32382376266240000.0,
                                 7771770303897600.0,
                                 1187353796428800.0,
                                 129060195264000.0,
                                 10559470521600.0,
                                 670442572800.0,
                                 33522128640.0,
                                 1323241920.0,
                                 40840800.0,
                                 960960.0,
                                 16380.0,
                                 182.0,
                                 1.0};
  static constexpr double kTheta13 = 5.371920351148152;

  const Eigen::Index n = a_in.rows();
  const double norm = one_norm(a_in);
  int squarings = 0;
  if (norm > kTheta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / kTheta13)));
  }
  const Mat a = a_in / std::ldexp(1.0, squarings);
  const Mat id = Mat::Identity(n, n);
  const Mat a2 = a * a;
  const Mat a4 = a2 * a2;
  const Mat a6 = a4 * a2;

  const Mat u_inner = b[13] * a6 + b[11] * a4 + b[9] * a2;
  const Mat u = a * (a6 * u_inner + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
  const Mat v_inner = b[12] * a6 + b[10] * a4 + b[8] * a2;
  const Mat v = a6 * v_inner + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;

  Mat r = (v - u).partialPivLu().solve(v + u);
  for (int k = 0; k < squarings; ++k) r = r * r;
  return r;
}

template <class Mat>
Mat mat_exp_impl(const Mat& m, double s) {
  if (m.rows() != m.cols()) throw DimensionError("mat_exp: matrix is not square");
  if (s == 0.0) return Mat::Identity(m.rows(), m.cols());
  const Mat scaled = m * s;
  const double norm = one_norm(scaled);
  if (!std::isfinite(norm) || norm > tol::kExpOverflowNorm) {
    throw RangeError("mat_exp: ||m s||_1 = " + std::to_string(norm) + " exceeds the supported range");
  }
  return expm_pade13(scaled);
}

}  // namespace

void require_operator_dim(const CMat& m, const char* what) {
  if (m.rows() != m.cols() || (m.rows() != 2 && m.rows() != 4)) {
    throw DimensionError(std::string(what) + ": expected a 2x2 or 4x4 matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

namespace pauli {
const CMat& identity() {
  static const CMat m = CMat::Identity(2, 2);
  return m;
}
const CMat& x() {
  static const CMat m = make2(0.0, 1.0, 1.0, 0.0);
  return m;
}
const CMat& y() {
  static const CMat m = make2(0.0, Complex(0, -1), Complex(0, 1), 0.0);
  return m;
}
const CMat& z() {
  static const CMat m = make2(1.0, 0.0, 0.0, -1.0);
  return m;
}
const CMat& plus() {
  static const CMat m = make2(0.0, 1.0, 0.0, 0.0);
  return m;
}
const CMat& minus() {
  static const CMat m = make2(0.0, 0.0, 1.0, 0.0);
  return m;
}
}  // namespace pauli

const std::array<CMat, 4>& hermitian_basis() {
  static const std::array<CMat, 4> basis = [] {
    const double s = 1.0 / std::sqrt(2.0);
    return std::array<CMat, 4>{pauli::identity() * s, pauli::x() * s, pauli::y() * s,
                               pauli::z() * s};
  }();
  return basis;
}

Complex hs_inner(const CMat& a, const CMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("hs_inner: dimension mismatch");
  }
  return (a.adjoint() * b).trace();
}

double hermiticity_error(const CMat& m) {
  if (m.rows() != m.cols()) throw DimensionError("hermiticity_error: matrix is not square");
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

HermEig herm_eig(const CMat& m) {
  require_operator_dim(m, "herm_eig");
  const double herr = hermiticity_error(m);
  if (herr > tol::kHermitianInput) {
    throw NotHermitianError("herm_eig: input deviates from Hermitian by " + std::to_string(herr));
  }
  const CMat h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMat> solver(h);
  if (solver.info() != Eigen::Success) throw NumericalError("herm_eig: eigensolver failed");

  const Eigen::Index n = h.rows();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  // Eigen returns ascending values; stable reversal keeps ties deterministic.
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return solver.eigenvalues()(a) > solver.eigenvalues()(b);
  });

  HermEig out{Eigen::VectorXd(n), CMat(n, n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index src = order[static_cast<std::size_t>(i)];
    out.values(i) = solver.eigenvalues()(src);
    CVec v = solver.eigenvectors().col(src);
    v.normalize();
    const double vmax = v.cwiseAbs().maxCoeff();
    Eigen::Index pivot = 0;
    while (std::abs(v(pivot)) < vmax * (1.0 - 1e-12)) ++pivot;
    v *= std::conj(v(pivot)) / std::abs(v(pivot));
    v(pivot) = Complex(v(pivot).real(), 0.0);
    out.vectors.col(i) = v;
  }
  return out;
}

CMat mat_exp(const CMat& m, double s) { return mat_exp_impl(m, s); }

RMat mat_exp(const RMat& m, double s) { return mat_exp_impl(m, s); }

CMat psd_sqrt(const CMat& m) {
  const HermEig eig = herm_eig(m);
  const Eigen::Index n = eig.values.size();
  Eigen::VectorXd roots(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lambda = eig.values(i);
    if (lambda < -tol::kPsdError) {
      throw NotPsdError("psd_sqrt: eigenvalue " + std::to_string(lambda) + " is negative");
    }
    roots(i) = std::sqrt(std::max(lambda, 0.0));
  }
  return eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
}

double trace_norm(const CMat& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMat> svd(m);
  return svd.singularValues().sum();
}

CMat kron(const CMat& a, const CMat& b) {
  if (a.rows() != 2 || a.cols() != 2 || b.rows() != 2 || b.cols() != 2) {
    throw DimensionError("kron: both factors must be 2x2");
  }
  CMat out(4, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out.block(2 * i, 2 * j, 2, 2) = a(i, j) * b;
  }
  return out;
}

DensityMatrix::DensityMatrix(CMat m) : mat_(std::move(m)) {
  require_operator_dim(mat_, "DensityMatrix");
  const double herr = hermiticity_error(mat_);
  if (herr > tol::kStateHermitian) {
    throw InvalidStateError("density matrix is not Hermitian (deviation " + std::to_string(herr) + ")");
  }
  const double terr = std::abs(mat_.trace() - 1.0);
  if (terr > tol::kStateTrace) {
    throw InvalidStateError("density matrix trace differs from 1 by " + std::to_string(terr));
  }
  Eigen::SelfAdjointEigenSolver<CMat> solver(0.5 * (mat_ + mat_.adjoint()), Eigen::EigenvaluesOnly);
  const double lmin = solver.eigenvalues().minCoeff();
  if (lmin < -tol::kPsdClip) {
    throw InvalidStateError("density matrix has negative eigenvalue " + std::to_string(lmin));
  }
}

DensityMatrix DensityMatrix::from_pure(const CVec& psi) {
  if (psi.size() != 2 && psi.size() != 4) throw DimensionError("from_pure: expected 2 or 4 amplitudes");
  if (std::abs(psi.norm() - 1.0) > 1e-10) throw InvalidArgument("from_pure: state vector is not normalized");
  return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
  return DensityMatrix(CMat::Identity(dim, dim) / static_cast<double>(dim));
}

}  // namespace gdpk
