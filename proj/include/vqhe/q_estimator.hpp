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

#pragma once

#include <cstddef>
#include <cstdint>

#include "vqhe/dense.hpp"
#include "vqhe/hamiltonian.hpp"

namespace vqhe {

inline constexpr std::size_t kMaxAnalyticQQubits = 7;
inline constexpr std::size_t kMaxCircuitQQubits = 4;
inline constexpr double kNormalizationTolerance = 1e-10;

struct QEstimate {
  /// Probability (or observed fraction) of the +1 outcome on the top qubit.
  double p_plus = 1.0;
  /// 2 p_plus - 1.
  double q_value = 1.0;
  /// 0 for analytic estimates.
  std::size_t shots = 0;
  double standard_error = 0.0;
};

/// p_plus = 1/2 + Q/2 with Q = sum |c_i|^4.
QEstimate q_analytic(const StateVector& psi);

/// Statevector emulation of the SWAP-test circuit on |0>|psi>|psi>|0...0>:
/// CNOTs copy register 3 into register 4, then H, controlled-SWAPs between
/// registers 2 and 3, H on the top qubit. Returns P(top = 0) before sampling.
double q_circuit_marginal(const StateVector& psi);

/// Samples the top qubit of the emulated circuit `shots` times.
QEstimate q_full_circuit(const StateVector& psi, std::size_t shots,
                         std::uint64_t seed);

/// Dense state whose amplitudes are the normalized Pauli coefficients of h,
/// on 2n qubits.
StateVector hamiltonian_state(const Hamiltonian& h);

}  // namespace vqhe
