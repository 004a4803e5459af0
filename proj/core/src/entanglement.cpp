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

#include "gdpk/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/SVD>

#include "gdpk/errors.hpp"

namespace gdpk {

namespace {

double binary_entropy(double x) {
  double h = 0.0;
  if (x > 0.0) h -= x * std::log2(x);
  if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
  return h;
}

const CMat& spin_flip() {
  static const CMat yy = kron(pauli::y(), pauli::y());
  return yy;
}

KrausSet local_channel(const LocalGenerator& g, ChannelKind kind, double t) {
  switch (kind) {
    case ChannelKind::kGdp:
      return channel_kraus(g, t);
    case ChannelKind::kStandard:
      return channel_kraus(standard_comparison(g), t);
    case ChannelKind::kIdentity:
      break;
  }
  return identity_kraus(2, t);
}

}  // namespace

CMat QubitHamiltonian::unitary(double t) const {
  const Complex phase = std::exp(Complex(0.0, -0.5 * freq * t));
  CMat u = CMat::Zero(2, 2);
  u(0, 0) = phase;
  u(1, 1) = std::conj(phase);
  return u;
}

KrausSet schrodinger_dress(const KrausSet& k, const QubitHamiltonian& h, double t) {
  if (k.dim() != 2) throw DimensionError("schrodinger_dress: expected a qubit Kraus set");
  const CMat u = h.unitary(t);
  KrausSet out;
  out.time_tag = k.time_tag;
  out.ops.reserve(k.ops.size());
  for (const CMat& e : k.ops) out.ops.push_back(u * e);
  return out;
}

KrausSet tensor_kraus(const KrausSet& k1, const KrausSet& k2) {
  KrausSet out;
  out.time_tag = k1.time_tag;
  out.ops.reserve(k1.ops.size() * k2.ops.size());
  for (const CMat& a : k1.ops) {
    for (const CMat& b : k2.ops) out.ops.push_back(kron(a, b));
  }
  return out;
}

DensityMatrix evolve_pair(const CVec& psi0, const KrausSet& k1, const KrausSet& k2) {
  if (psi0.size() != 4) throw DimensionError("evolve_pair: expected a two-qubit state vector");
  if (std::abs(psi0.norm() - 1.0) > 1e-10) throw InvalidArgument("evolve_pair: initial state is not normalized");
  return apply_channel(tensor_kraus(k1, k2), DensityMatrix::from_pure(psi0));
}

CVec bell_phi_plus() {
  CVec psi = CVec::Zero(4);
  psi(0) = psi(3) = 1.0 / std::sqrt(2.0);
  return psi;
}

double concurrence(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw DimensionError("concurrence: expected a two-qubit state");
  // The square roots of the eigenvalues of rho (Y(x)Y) rho* (Y(x)Y) are the
  // singular values of sqrt(rho) sqrt(rho~); this avoids square roots of
  // round-off-level eigenvalues.
  const CMat root = psd_sqrt(rho.mat());
  const CMat flipped_root = spin_flip() * root.conjugate() * spin_flip();
  Eigen::JacobiSVD<CMat> svd(root * flipped_root);
  const Eigen::VectorXd s = svd.singularValues();  // descending
  const double lambda = s(0) - s(1) - s(2) - s(3);
  return std::clamp(lambda, 0.0, 1.0);
}

double entanglement_of_formation(double c) {
  if (!(c >= -1e-12 && c <= 1.0 + 1e-12)) {
    throw InvalidArgument("entanglement_of_formation: concurrence must lie in [0, 1]");
  }
  c = std::clamp(c, 0.0, 1.0);
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

PairModel pair_model_from_micro(double temperature, double alpha, double omega_c, double omega1,
                                double omega2, RateModel model) {
  const MicroParams p1 = MicroParams::with_default_cap(temperature, alpha, omega1, omega_c);
  const MicroParams p2 = MicroParams::with_default_cap(temperature, alpha, omega2, omega_c);
  return PairModel{generator_from_micro(p1, model), generator_from_micro(p2, model),
                   QubitHamiltonian{omega1}, QubitHamiltonian{omega2}};
}

DensityMatrix pair_state(const PairModel& m, ChannelKind kind, double t, const CVec& psi0) {
  const KrausSet k1 = schrodinger_dress(local_channel(m.g1, kind, t), m.h1, t);
  const KrausSet k2 = schrodinger_dress(local_channel(m.g2, kind, t), m.h2, t);
  return evolve_pair(psi0, k1, k2);
}

std::optional<double> esd_time(const std::function<double(double)>& conc, double t_max, double step) {
  if (!(step > 0.0)) throw InvalidArgument("esd_time: step must be positive");
  if (!(t_max >= 0.0)) throw InvalidArgument("esd_time: t_max must be non-negative");
  const auto dead = [&](double t) { return conc(t) <= kEsdThreshold; };
  if (dead(0.0)) return 0.0;

  double prev = 0.0;
  const auto n = static_cast<long>(std::ceil(t_max / step));
  for (long k = 1; k <= n; ++k) {
    const double t = std::min(t_max, static_cast<double>(k) * step);
    if (dead(t)) {
      double a = prev;
      double b = t;
      while (b - a > 1e-6 * b) {
        const double mid = 0.5 * (a + b);
        if (dead(mid)) {
          b = mid;
        } else {
          a = mid;
        }
      }
      return b;
    }
    prev = t;
  }
  return std::nullopt;
}

std::optional<double> esd_time(const PairModel& m, ChannelKind kind, const CVec& psi0, double t_max,
                               double step) {
  return esd_time([&](double t) { return concurrence(pair_state(m, kind, t, psi0)); }, t_max, step);
}

}  // namespace gdpk
