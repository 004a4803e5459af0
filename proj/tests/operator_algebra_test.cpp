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

#include <doctest.h>

#include <cmath>

#include "gdpk/errors.hpp"
#include "gdpk/operator_algebra.hpp"
#include "oracles.hpp"

using namespace gdpk;

namespace {
double max_diff(const CMat& a, const CMat& b) { return (a - b).cwiseAbs().maxCoeff(); }
}  // namespace

TEST_CASE("hs_inner on the Pauli basis") {
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(hs_inner(pauli::x() * s, pauli::x() * s) - 1.0) < 1e-15);
  CHECK(std::abs(hs_inner(pauli::x() * s, pauli::y() * s)) < 1e-15);
  CHECK(std::abs(hs_inner(pauli::identity(), pauli::z())) < 1e-15);
  CHECK_THROWS_AS(hs_inner(CMat::Identity(2, 2), CMat::Identity(4, 4)), DimensionError);
}

TEST_CASE("Hermitian basis Gram matrix is the identity") {
  const auto& g = hermitian_basis();
  for (int k = 0; k < 4; ++k) {
    CHECK(hermiticity_error(g[k]) == 0.0);
    for (int l = 0; l < 4; ++l) {
      const Complex v = (g[k] * g[l]).trace();
      CHECK(std::abs(v - (k == l ? 1.0 : 0.0)) < 1e-14);
    }
  }
}

TEST_CASE("herm_eig") {
  SUBCASE("sigma_z") {
    const HermEig e = herm_eig(pauli::z());
    CHECK(e.values(0) == doctest::Approx(1.0));
    CHECK(e.values(1) == doctest::Approx(-1.0));
    CHECK(max_diff(e.vectors.col(0), CVec::Unit(2, 0)) < 1e-15);
    CHECK(max_diff(e.vectors.col(1), CVec::Unit(2, 1)) < 1e-15);
  }
  SUBCASE("identity 4x4") {
    const HermEig e = herm_eig(CMat::Identity(4, 4));
    for (int i = 0; i < 4; ++i) CHECK(e.values(i) == doctest::Approx(1.0));
  }
  SUBCASE("random Hermitian reconstruction, ordering and phase convention") {
    oracle::Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
      const CMat m = rng.hermitian(4);
      const HermEig e = herm_eig(m);
      CMat rec = CMat::Zero(4, 4);
      for (int i = 0; i < 4; ++i) {
        rec += e.values(i) * e.vectors.col(i) * e.vectors.col(i).adjoint();
        CHECK(std::abs(e.vectors.col(i).norm() - 1.0) < 1e-13);
        Eigen::Index pivot = 0;
        e.vectors.col(i).cwiseAbs().maxCoeff(&pivot);
        CHECK(e.vectors(pivot, i).real() > 0.0);
        CHECK(e.vectors(pivot, i).imag() == 0.0);
        if (i > 0) CHECK(e.values(i - 1) >= e.values(i));
      }
      CHECK(max_diff(rec, m) < 1e-10);
    }
  }
  SUBCASE("rejects non-Hermitian input") {
    CHECK_THROWS_AS(herm_eig(pauli::plus()), NotHermitianError);
    CHECK_THROWS_AS(herm_eig(CMat::Identity(3, 3)), DimensionError);
  }
}

TEST_CASE("mat_exp") {
  SUBCASE("zero time is the identity") {
    oracle::Rng rng(3);
    CHECK(max_diff(mat_exp(CMat(rng.complex_matrix(4)), 0.0), CMat::Identity(4, 4)) == 0.0);
  }
  SUBCASE("diagonal generator") {
    RMat l = RMat::Zero(4, 4);
    l.diagonal() << 0.0, -2.0, -2.0, -2.0;
    const RMat f = mat_exp(l, 1.0);
    const double e2 = std::exp(-2.0);
    CHECK(std::abs(f(0, 0) - 1.0) < 1e-15);
    for (int i = 1; i < 4; ++i) CHECK(std::abs(f(i, i) - e2) / e2 < 1e-13);
  }
  SUBCASE("matches the closed-form GDP propagator") {
    for (double theta : {0.0, 0.7, 2.0}) {
      for (double omega : {-0.3, -1.0, -1.8}) {
        for (double tau : {0.2, 1.5, 10.0}) {
          const RMat f = mat_exp(RMat(oracle::reduced_generator(theta, omega)), tau);
          CHECK((f - oracle::propagator(theta, omega, tau)).cwiseAbs().maxCoeff() < 1e-12);
        }
      }
    }
  }
  SUBCASE("semigroup property") {
    oracle::Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      const CMat m = rng.complex_matrix(4);
      const double s1 = rng.uniform(0.0, 1.0), s2 = rng.uniform(0.0, 1.0);
      const CMat lhs = mat_exp(m, s1) * mat_exp(m, s2);
      const CMat rhs = mat_exp(m, s1 + s2);
      CHECK(max_diff(lhs, rhs) / rhs.cwiseAbs().maxCoeff() < 1e-10);
    }
  }
  SUBCASE("agrees with an eigen-route exponential of a Hermitian matrix at large norm") {
    oracle::Rng rng(8);
    const CMat h = rng.hermitian(4);
    const double scale = 90.0 / h.cwiseAbs().colwise().sum().maxCoeff();
    const CMat ih = Complex(0.0, 1.0) * h;
    const HermEig e = herm_eig(h);
    CVec phases(4);
    for (int i = 0; i < 4; ++i) phases(i) = std::exp(Complex(0.0, e.values(i) * scale));
    const CMat ref = e.vectors * phases.asDiagonal() * e.vectors.adjoint();
    CHECK(max_diff(mat_exp(ih, scale), ref) < 1e-12 * 90.0);
  }
  SUBCASE("overflow range is reported") {
    RMat l = RMat::Identity(4, 4);
    CHECK_THROWS_AS(mat_exp(l, 800.0), RangeError);
  }
}

TEST_CASE("psd_sqrt") {
  CHECK(max_diff(psd_sqrt(CMat::Identity(2, 2)), CMat::Identity(2, 2)) < 1e-15);
  CMat d = CMat::Zero(2, 2);
  d(0, 0) = 4.0;
  d(1, 1) = 9.0;
  const CMat r = psd_sqrt(d);
  CHECK(std::abs(r(0, 0) - 2.0) < 1e-14);
  CHECK(std::abs(r(1, 1) - 3.0) < 1e-14);

  oracle::Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const CMat a = rng.complex_matrix(4);
    const CMat m = a.adjoint() * a;
    const CMat root = psd_sqrt(m);
    CHECK(hermiticity_error(root) < 1e-12);
    CHECK(max_diff(root * root, m) < 1e-10);
  }

  CMat neg = CMat::Identity(2, 2);
  neg(1, 1) = -1e-6;
  CHECK_THROWS_AS(psd_sqrt(neg), NotPsdError);
  neg(1, 1) = -1e-11;
  CHECK(std::abs(psd_sqrt(neg)(1, 1)) < 1e-12);
}

TEST_CASE("trace_norm") {
  CHECK(trace_norm(pauli::z()) == doctest::Approx(2.0));
  CHECK(trace_norm(CMat::Zero(2, 2)) == 0.0);
  CMat p0 = CMat::Zero(2, 2), p1 = CMat::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  CHECK(trace_norm(p0 - p1) == doctest::Approx(2.0));

  oracle::Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const CMat a = rng.hermitian(4), b = rng.hermitian(4);
    const double c = rng.uniform(-3.0, 3.0);
    CHECK(trace_norm(a + b) <= trace_norm(a) + trace_norm(b) + 1e-12);
    CHECK(std::abs(trace_norm(c * a) - std::abs(c) * trace_norm(a)) < 1e-11);
  }
}

TEST_CASE("kron") {
  CHECK(max_diff(kron(pauli::identity(), pauli::identity()), CMat::Identity(4, 4)) == 0.0);
  const CMat zi = kron(pauli::z(), pauli::identity());
  CMat expect = CMat::Zero(4, 4);
  expect.diagonal() << 1.0, 1.0, -1.0, -1.0;
  CHECK(max_diff(zi, expect) == 0.0);
  const CVec out = kron(pauli::x(), pauli::x()) * CVec::Unit(4, 0);
  CHECK(max_diff(out, CVec::Unit(4, 3)) == 0.0);
  CHECK_THROWS_AS(kron(CMat::Identity(4, 4), pauli::x()), DimensionError);
}

TEST_CASE("DensityMatrix validation") {
  CHECK_NOTHROW(DensityMatrix::maximally_mixed(4));
  CHECK_THROWS_AS(DensityMatrix(CMat::Identity(2, 2)), InvalidStateError);
  CHECK_THROWS_AS(DensityMatrix(pauli::plus() + CMat::Identity(2, 2) / 2.0), InvalidStateError);
  CMat neg = CMat::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix{neg}, InvalidStateError);
  CHECK_THROWS_AS(DensityMatrix::from_pure(CVec::Ones(2)), InvalidArgument);
}
