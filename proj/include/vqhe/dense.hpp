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

#include <complex>
#include <cstddef>
#include <random>

#include <Eigen/Dense>

#include "vqhe/ansatz.hpp"
#include "vqhe/hamiltonian.hpp"
#include "vqhe/pauli_string.hpp"

namespace vqhe {

// Dense helpers for small registers. Basis index bit (n-1-k) is qubit k, so
// qubit 0 is the most significant bit, matching the Pauli label order.

using Complex = std::complex<double>;
using DenseOperator = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

inline constexpr std::size_t kMaxDenseQubits = 10;

/// Throws CapacityError when n exceeds `limit`.
void require_dense_capacity(std::size_t n, std::size_t limit = kMaxDenseQubits);

/// P|psi> computed from the symplectic bits in O(2^n).
StateVector apply_pauli(const PauliString& p, const StateVector& psi);
/// <psi|P|psi>, real for Hermitian P.
double pauli_expectation(const PauliString& p, const StateVector& psi);

DenseOperator to_dense(const PauliString& p);
DenseOperator to_dense(const Hamiltonian& h);
double expectation(const Hamiltonian& h, const StateVector& psi);

/// 2x2 matrix of a single ansatz rotation exp(-i theta A / 2).
Eigen::Matrix2cd rotation_matrix(GateKind kind, double theta);

void apply_single_qubit(StateVector& psi, std::size_t n, std::size_t qubit,
                        const Eigen::Matrix2cd& m);
void apply_cz(StateVector& psi, std::size_t n, std::size_t q1, std::size_t q2);
void apply_cnot(StateVector& psi, std::size_t n, std::size_t control,
                std::size_t target);
void apply_cswap(StateVector& psi, std::size_t n, std::size_t control,
                 std::size_t a, std::size_t b);

/// U(theta)|psi> by gate-by-gate statevector evolution.
StateVector apply_ansatz_to_state(const AnsatzLayout& layout,
                                  const ParameterVector& theta,
                                  const StateVector& psi);
/// Dense U(theta) = G_last ... G_1.
DenseOperator ansatz_unitary(const AnsatzLayout& layout,
                             const ParameterVector& theta);

/// Normalized vector of i.i.d. standard complex Gaussian amplitudes.
StateVector haar_state(std::size_t n, std::mt19937_64& rng);

/// Largest singular value.
double spectral_norm(const DenseOperator& m);

}  // namespace vqhe
