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

// Dense complex kernels for qubit (2x2) and qubit-pair (4x4) operators.

#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace gdpk {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;

namespace tol {
inline constexpr double kHermitianInput = 1e-10;  // herm_eig precondition
inline constexpr double kPsdClip = 1e-10;         // eigenvalues above -this are clipped to 0
inline constexpr double kPsdError = 1e-8;         // below -this is an error
inline constexpr double kStateHermitian = 1e-12;
inline constexpr double kStateTrace = 1e-12;
inline constexpr double kExpOverflowNorm = 700.0;
}  // namespace tol

// Throws DimensionError unless m is square with dimension 2 or 4.
void require_operator_dim(const CMat& m, const char* what);

namespace pauli {
const CMat& identity();
const CMat& x();
const CMat& y();
const CMat& z();
// sigma_+ = (sigma_x + i sigma_y)/2 = |0><1| in the sigma_z basis.
const CMat& plus();
const CMat& minus();
}  // namespace pauli

// Hilbert-Schmidt orthonormal basis G_k = sigma_k / sqrt(2), ordered (I, x, y, z).
const std::array<CMat, 4>& hermitian_basis();

// tr(a^dagger b).
Complex hs_inner(const CMat& a, const CMat& b);

// Largest |m - m^dagger| entry.
double hermiticity_error(const CMat& m);

struct HermEig {
  Eigen::VectorXd values;  // descending
  CMat vectors;            // column i belongs to values[i]
};

// Eigendecomposition of a Hermitian matrix. Eigenvalues are sorted
// descending, and each eigenvector is rephased so that its largest-magnitude
// component (first one on ties) is real and positive.
HermEig herm_eig(const CMat& m);

// e^{m s} by scaling and squaring around a degree-13 Pade approximant.
// Throws RangeError when ||m s||_1 exceeds tol::kExpOverflowNorm.
CMat mat_exp(const CMat& m, double s);
RMat mat_exp(const RMat& m, double s);

// Principal square root of a Hermitian PSD matrix. Eigenvalues in
// [-kPsdError, 0) are clipped to zero; anything lower throws NotPsdError.
CMat psd_sqrt(const CMat& m);

// Sum of singular values.
double trace_norm(const CMat& m);

// a (x) b for 2x2 factors; a acts on the left (first) qubit.
CMat kron(const CMat& a, const CMat& b);

// A validated density operator: Hermitian, unit trace, PSD.
class DensityMatrix {
 public:
  // Throws InvalidStateError if any invariant fails.
  explicit DensityMatrix(CMat m);

  // |psi><psi|; psi must have unit norm to 1e-10.
  static DensityMatrix from_pure(const CVec& psi);
  static DensityMatrix maximally_mixed(Eigen::Index dim);

  const CMat& mat() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }

 private:
  CMat mat_;
};

}  // namespace gdpk
