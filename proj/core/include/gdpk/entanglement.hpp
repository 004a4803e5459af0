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

// Two independent qubits under local channels: Schrodinger-picture dressing,
// concurrence, entanglement of formation and sudden-death detection.
//
// Pair states use the product basis |00>, |01>, |10>, |11>, qubit 1 on the left.

#pragma once

#include <functional>
#include <optional>

#include "gdpk/gdp_model.hpp"
#include "gdpk/me2kraus.hpp"
#include "gdpk/operator_algebra.hpp"

namespace gdpk {

// H_q = (freq / 2) sigma_z
struct QubitHamiltonian {
  double freq = 0.0;

  // e^{-i H_q t}
  CMat unitary(double t) const;
};

// E_i -> U(t) E_i
KrausSet schrodinger_dress(const KrausSet& k, const QubitHamiltonian& h, double t);

// All products k1_i (x) k2_j, k1 on qubit 1.
KrausSet tensor_kraus(const KrausSet& k1, const KrausSet& k2);

// sum_{ij} (K1i (x) K2j) |psi><psi| (K1i (x) K2j)^+
DensityMatrix evolve_pair(const CVec& psi0, const KrausSet& k1, const KrausSet& k2);

// (|00> + |11>)/sqrt(2)
CVec bell_phi_plus();

double concurrence(const DensityMatrix& rho);

// H((1 + sqrt(1 - C^2))/2) in bits.
double entanglement_of_formation(double c);

enum class ChannelKind {
  kGdp,       // microscopic generator of each qubit
  kStandard,  // x = 0, y = z = mean, same tau
  kIdentity,
};

// Local environments and free Hamiltonians of the two qubits.
struct PairModel {
  LocalGenerator g1;
  LocalGenerator g2;
  QubitHamiltonian h1;
  QubitHamiltonian h2;
};

// Qubit i sees bath parameters (T, alpha, omega_c) at omega0 = omega_i and is
// dressed with H_i = (omega_i/2) sigma_z.
PairModel pair_model_from_micro(double temperature, double alpha, double omega_c, double omega1,
                                double omega2, RateModel model = RateModel::kExactBose);

// Schrodinger-picture pair state at time t.
DensityMatrix pair_state(const PairModel& m, ChannelKind kind, double t, const CVec& psi0);

inline constexpr double kEsdThreshold = 1e-9;

// Smallest t in [0, t_max] with conc(t) <= 1e-9, located on a grid of the
// given step and refined by bisection to 1e-6 relative. Empty if the
// concurrence stays above threshold on the whole interval.
std::optional<double> esd_time(const std::function<double(double)>& conc, double t_max, double step);
std::optional<double> esd_time(const PairModel& m, ChannelKind kind, const CVec& psi0, double t_max,
                               double step);

}  // namespace gdpk
