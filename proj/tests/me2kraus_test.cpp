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
#include "gdpk/gdp_model.hpp"
#include "gdpk/me2kraus.hpp"
#include "oracles.hpp"

using namespace gdpk;

namespace {

double max_diff(const CMat& a, const CMat& b) { return (a - b).cwiseAbs().maxCoeff(); }

SuperOperator analytic(double theta, double omega, double tau) {
  return [=](const CMat& a) { return CMat(oracle::gdp_action(theta, omega, tau, a)); };
}

}  // namespace

TEST_CASE("LocalGenerator action is traceless and Hermitian") {
  oracle::Rng rng(1);
  const LocalGenerator g{0.3, 0.4, 0.9};
  for (int trial = 0; trial < 20; ++trial) {
    const CMat out = g.apply(rng.density(2));
    CHECK(std::abs(out.trace()) < 1e-14);
    CHECK(hermiticity_error(out) < 1e-14);
  }
  CHECK_THROWS_AS((LocalGenerator{0.0, -1.0, 0.0}.validate()), InvalidArgument);
}

TEST_CASE("generator_matrix") {
  SUBCASE("isotropic dissipation") {
    const RMat l = generator_matrix(LocalGenerator{0.0, 0.5, 0.5});
    RMat expect = RMat::Zero(4, 4);
    expect.diagonal() << 0.0, -2.0, -2.0, -2.0;
    CHECK((l - expect).cwiseAbs().maxCoeff() < 1e-15);
  }
  SUBCASE("pure Hamiltonian rotates sigma_x into sigma_y") {
    const RMat l = generator_matrix(LocalGenerator{1.0, 0.0, 0.0});
    RMat expect = RMat::Zero(4, 4);
    expect(2, 1) = 2.0;   // tr[G_y Lambda(G_x)]
    expect(1, 2) = -2.0;  // tr[G_x Lambda(G_y)]
    CHECK((l - expect).cwiseAbs().maxCoeff() < 1e-15);
  }
  SUBCASE("null generator") {
    CHECK(generator_matrix(LocalGenerator{}).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("matches the printed closed form for random coefficients") {
    oracle::Rng rng(2);
    for (int trial = 0; trial < 20; ++trial) {
      const double x = rng.uniform(-2, 2), y = rng.uniform(0, 3), z = rng.uniform(0, 3);
      const RMat l = generator_matrix(LocalGenerator{x, y, z});
      CHECK((l - RMat(oracle::generator_matrix(x, y, z))).cwiseAbs().maxCoeff() < 1e-14);
    }
  }
  SUBCASE("rejects maps that break hermiticity") {
    const SuperOperator bad = [](const CMat& a) { return CMat(Complex(0, 1) * a); };
    CHECK_THROWS_AS(generator_matrix(bad), InvalidArgument);
  }
}

TEST_CASE("propagator") {
  const RMat l = generator_matrix(LocalGenerator{0.0, 0.5, 0.5});
  CHECK((propagator(l, 0.0).f - RMat::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);
  const RMat f1 = propagator(l, 1.0).f;
  CHECK(std::abs(f1(1, 1) - std::exp(-2.0)) < 1e-15);
  CHECK(std::abs(f1(3, 3) - std::exp(-2.0)) < 1e-15);
  CHECK_THROWS_AS(propagator(l, -0.1), InvalidArgument);

  for (double theta : {0.0, 0.5, 2.0}) {
    for (double omega : {-0.2, -1.0, -1.9}) {
      for (double tau : {0.0, 0.3, 3.0}) {
        const PropagatorMatrix f = propagator(RMat(oracle::reduced_generator(theta, omega)), tau);
        CHECK((f.f - oracle::propagator(theta, omega, tau)).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(std::abs(f.f(0, 0) - 1.0) < 1e-13);
        CHECK(f.f.row(0).tail(3).cwiseAbs().maxCoeff() < 1e-13);
      }
    }
  }

  RMat leaky = RMat::Zero(4, 4);
  leaky(0, 0) = -1.0;
  CHECK_THROWS_AS(propagator(leaky, 1.0), NumericalError);
}

TEST_CASE("choi") {
  SUBCASE("identity channel") {
    const ChoiMatrix s = choi(PropagatorMatrix{RMat::Identity(4, 4), 0.0});
    CMat expect = CMat::Zero(4, 4);
    expect(0, 0) = 2.0;
    CHECK(max_diff(s.s, expect) < 1e-15);
    const KrausSet k = kraus_from_choi(s);
    REQUIRE(k.ops.size() == 1);
    CHECK(max_diff(k.ops[0], CMat::Identity(2, 2)) < 1e-15);
  }
  SUBCASE("matches the closed-form GDP Choi matrix") {
    const ChannelShape c{0.2, -0.5, 0.3};
    const ChoiMatrix s = choi(propagator(RMat(oracle::reduced_generator(c.theta, c.omega)), c.tau));
    CHECK(max_diff(s.s, gdp_choi(c).s) < 1e-12);
    CHECK(hermiticity_error(s.s) < 1e-12);
    CHECK(std::abs(s.s.trace() - 2.0) < 1e-12);
  }
  SUBCASE("large tau: every eigenvalue tends to one half") {
    const ChannelShape c{0.4, -1.2, 40.0};
    const HermEig e = herm_eig(choi(propagator(RMat(oracle::reduced_generator(c.theta, c.omega)), c.tau)).s);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(e.values(i) - 0.5) < 1e-10);
  }
  SUBCASE("Choi channel reproduces F on the basis") {
    const ChannelShape c{1.1, -0.7, 0.9};
    const RMat f = oracle::propagator(c.theta, c.omega, c.tau);
    const ChoiMatrix s = choi(PropagatorMatrix{f, c.tau});
    CHECK(action_discrepancy(kraus_from_choi(s), [&](const CMat& a) { return apply_choi(s, a); }) < 1e-13);
    CHECK(action_discrepancy(kraus_from_choi(s), analytic(c.theta, c.omega, c.tau)) < 1e-13);
  }
}

TEST_CASE("kraus_from_choi") {
  SUBCASE("drops zero-weight operators at tau = 0") {
    const KrausSet k = kraus_from_choi(gdp_choi(ChannelShape{0.3, -0.6, 0.0}));
    CHECK(k.ops.size() == 1);
  }
  SUBCASE("standard reduction matches the standard set") {
    for (double tau : {0.1, 1.0, 4.0}) {
      const KrausSet k = kraus_from_choi(gdp_choi(ChannelShape{0.0, -1.0, tau}));
      CHECK(action_discrepancy(k, standard_kraus(tau)) < 1e-13);
      CHECK(completeness_error(k) < 1e-13);
    }
  }
  SUBCASE("large tau approaches the asymptotic set") {
    for (double theta : {0.0, 0.5, 2.0}) {
      for (double omega : {-1.0, -1.5, -1.9}) {
        const KrausSet k = kraus_from_choi(gdp_choi(ChannelShape{theta, omega, 40.0}));
        CHECK(action_discrepancy(k, asymptotic_kraus()) < 1e-8);
      }
    }
  }
  SUBCASE("rejects a non-CP Choi matrix") {
    ChoiMatrix bad{CMat::Identity(4, 4) * 0.5, 0.0};
    bad.s(1, 1) = -0.1;
    CHECK_THROWS_AS(kraus_from_choi(bad), CompletePositivityError);
  }
  SUBCASE("deterministic output") {
    const ChoiMatrix s = gdp_choi(ChannelShape{0.8, -0.3, 1.7});
    const KrausSet a = kraus_from_choi(s), b = kraus_from_choi(s);
    REQUIRE(a.ops.size() == b.ops.size());
    for (std::size_t i = 0; i < a.ops.size(); ++i) CHECK(max_diff(a.ops[i], b.ops[i]) == 0.0);
  }
}

TEST_CASE("apply_channel") {
  oracle::Rng rng(9);
  SUBCASE("unital on the maximally mixed state") {
    for (double tau : {0.0, 0.5, 5.0}) {
      const DensityMatrix out = apply_channel(pipeline_kraus(LocalGenerator{0.2, 0.7, 0.3}, tau),
                                              DensityMatrix::maximally_mixed(2));
      CHECK(max_diff(out.mat(), CMat::Identity(2, 2) / 2.0) < 1e-14);
    }
  }
  SUBCASE("identity set") {
    const DensityMatrix rho(rng.density(2));
    CHECK(max_diff(apply_channel(identity_kraus(2), rho).mat(), rho.mat()) == 0.0);
  }
  SUBCASE("trace, hermiticity and positivity of outputs for random inputs") {
    for (int trial = 0; trial < 50; ++trial) {
      const LocalGenerator g{rng.uniform(-1, 1), rng.uniform(0, 2), rng.uniform(0, 2)};
      const KrausSet k = pipeline_kraus(g, rng.uniform(0, 3));
      const DensityMatrix out = apply_channel(k, DensityMatrix::from_pure(rng.pure_state(2)));
      CHECK(std::abs(out.mat().trace() - 1.0) < 1e-12);
      CHECK(hermiticity_error(out.mat()) < 1e-13);
      CHECK(completeness_error(k) < 1e-10);
    }
  }
  SUBCASE("rejects an incomplete set") {
    const KrausSet bad{{CMat::Identity(2, 2) * 0.5}, 0.0};
    CHECK_THROWS_AS(apply_channel(bad, DensityMatrix::maximally_mixed(2)), InvalidKrausError);
  }
}

TEST_CASE("pipeline equivalence with the analytic solution") {
  oracle::Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const ChannelShape c{rng.uniform(0.0, 3.0), rng.uniform(-1.999, -0.001), rng.uniform(0.0, 5.0)};
    const GeneratorAtTime gt = generator_for_shape(c);
    const KrausSet k = pipeline_kraus(gt.generator, gt.t);
    CHECK(completeness_error(k) < 1e-10);
    CHECK(herm_eig(choi(propagator(generator_matrix(gt.generator), gt.t)).s).values(3) >= -1e-10);
    for (int s = 0; s < 20; ++s) {
      const auto [u, v] = rng.angles();
      const DensityMatrix out = apply_channel(k, analytic_state(u, v, ChannelShape{0, -1, 0}));
      CHECK(max_diff(out.mat(), analytic_state(u, v, c).mat()) < 1e-9);
    }
  }
}
