// Copyright 2026 The vqhe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vqhe/q_estimator.hpp"

#include <bit>
#include <cmath>
#include <random>

#include "vqhe/errors.hpp"

namespace vqhe {

namespace {

std::size_t qubits_of(const StateVector& psi) {
  const auto dim = static_cast<std::size_t>(psi.size());
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw DimensionError("state length must be a power of two >= 2");
  }
  return static_cast<std::size_t>(std::countr_zero(dim));
}

void require_normalized(const StateVector& psi) {
  if (std::abs(psi.norm() - 1.0) > kNormalizationTolerance) {
    throw ValidationError("state is not normalized");
  }
}

}  // namespace

QEstimate q_analytic(const StateVector& psi) {
  require_dense_capacity(qubits_of(psi), kMaxAnalyticQQubits);
  require_normalized(psi);
  // tr[rho |psi><psi|] with rho = sum_i |c_i|^2 |i><i|
  double q = 0.0;
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    const double p = std::norm(psi[i]);
    q += p * p;
  }
  return {0.5 + 0.5 * q, q, 0, 0.0};
}

double q_circuit_marginal(const StateVector& psi) {
  const std::size_t n = qubits_of(psi);
  require_dense_capacity(n, kMaxCircuitQQubits);
  require_normalized(psi);
  const std::size_t total = 3 * n + 1;
  const std::size_t dim = std::size_t{1} << n;
  StateVector state = StateVector::Zero(static_cast<Eigen::Index>(std::size_t{1} << total));
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      state[static_cast<Eigen::Index>((a << (2 * n)) | (b << n))] =
          psi[static_cast<Eigen::Index>(a)] * psi[static_cast<Eigen::Index>(b)];
    }
  }
  const std::size_t top = 0;
  const auto reg2 = [](std::size_t k) { return 1 + k; };
  const auto reg3 = [n](std::size_t k) { return 1 + n + k; };
  const auto reg4 = [n](std::size_t k) { return 1 + 2 * n + k; };
  for (std::size_t k = 0; k < n; ++k) apply_cnot(state, total, reg3(k), reg4(k));
  Eigen::Matrix2cd hadamard;
  hadamard << 1, 1, 1, -1;
  hadamard /= std::sqrt(2.0);
  apply_single_qubit(state, total, top, hadamard);
  for (std::size_t k = 0; k < n; ++k) apply_cswap(state, total, top, reg2(k), reg3(k));
  apply_single_qubit(state, total, top, hadamard);
  return state.head(state.size() / 2).squaredNorm();
}

QEstimate q_full_circuit(const StateVector& psi, std::size_t shots,
                         std::uint64_t seed) {
  if (shots == 0) throw ValidationError("shots must be positive; use q_analytic");
  const double p = std::clamp(q_circuit_marginal(psi), 0.0, 1.0);
  std::mt19937_64 rng(seed);
  std::binomial_distribution<std::size_t> draw(shots, p);
  const double s = static_cast<double>(shots);
  const double frac = static_cast<double>(draw(rng)) / s;
  return {frac, 2.0 * frac - 1.0, shots, 2.0 * std::sqrt(frac * (1.0 - frac) / s)};
}

StateVector hamiltonian_state(const Hamiltonian& h) {
  const CoefficientVector v = vectorize(h);
  require_dense_capacity(2 * v.num_qubits, kMaxAnalyticQQubits);
  StateVector psi = StateVector::Zero(static_cast<Eigen::Index>(std::size_t{1} << (2 * v.num_qubits)));
  for (const auto& [idx, c] : v.entries) psi[static_cast<Eigen::Index>(idx)] = c;
  return psi;
}

}  // namespace vqhe
