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
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "vqhe/ansatz.hpp"
#include "vqhe/hamiltonian.hpp"

namespace vqhe {

// Adjoint action H -> U H U^dagger of the ansatz gates, evaluated directly on
// Pauli coefficients. For a rotation U = exp(-i theta A / 2) and a factor B
// anticommuting with A,
//
//   U B U^dagger = cos(theta) B - i sin(theta) A B,
//
// and -iAB is again a real-signed Pauli string. Taking (A, B, C) in cyclic
// order X -> Y -> Z -> X this reads B -> cos B + sin C, C -> cos C - sin B,
// a planar rotation of the (h_B, h_C) coefficient pair. CZ is Clifford and
// maps every string to one string with sign +-1.

/// Conjugation by exp(-i theta A / 2) with A = `axis` on `qubit`.
Hamiltonian conjugate_rotation(const Hamiltonian& h, Pauli axis,
                               std::size_t qubit, double theta);

/// Image of a single string under CZ conjugation, with its sign.
std::pair<PauliString, int> cz_image(const PauliString& p, std::size_t q1,
                                     std::size_t q2);
Hamiltonian conjugate_cz(const Hamiltonian& h, std::size_t q1, std::size_t q2);

/// U(theta) H U(theta)^dagger, gates applied in layout order.
Hamiltonian apply_ansatz(const Hamiltonian& h, const AnsatzLayout& layout,
                         const ParameterVector& theta);
/// U(theta)^dagger H U(theta).
Hamiltonian apply_ansatz_inverse(const Hamiltonian& h,
                                 const AnsatzLayout& layout,
                                 const ParameterVector& theta);

/// Explicit 4^n x 4^n encoded map V with rows |U^dagger P_i U>, built from
/// dense matrices so it is independent of the coefficient-space engine.
/// Rows and columns use the base-4 Pauli index. Requires n <= 3.
Eigen::MatrixXd build_encoded_v(const AnsatzLayout& layout,
                                const ParameterVector& theta);

Pauli rotation_axis(GateKind kind);

/// The ansatz action for one fixed input Hamiltonian, compiled to flat
/// arrays.
///
/// Compilation tracks, gate by gate, which Pauli strings can carry weight for
/// generic angles and assigns each a slot in one index space. Forward and
/// reverse passes are then plain array updates. The reverse pass returns the
/// exact gradient of any cost whose derivative with respect to the final
/// coefficients is supplied.
class CompiledAnsatz {
 public:
  CompiledAnsatz(const Hamiltonian& h, const AnsatzLayout& layout);

  std::size_t num_qubits() const noexcept { return n_; }
  std::size_t parameter_count() const noexcept { return parameter_count_; }
  std::size_t basis_size() const noexcept { return basis_.size(); }
  const std::vector<PauliString>& basis() const noexcept { return basis_; }

  /// Final (unnormalized) coefficients indexed like `basis()`.
  std::vector<double> forward(const ParameterVector& theta) const;

  /// dC/dtheta given the forward output and dC/d(final coefficients).
  std::vector<double> backward(const ParameterVector& theta,
                               std::vector<double> final_coefficients,
                               std::vector<double> cotangent) const;

  Hamiltonian to_hamiltonian(std::span<const double> coefficients) const;

 private:
  struct Step {
    bool rotation = true;
    std::size_t slot = 0;
    // rotation: (B, C) index pairs; CZ: (from, to) moves
    std::vector<std::pair<std::uint32_t, std::uint32_t>> links;
    std::vector<std::int8_t> signs;
  };

  std::size_t n_;
  std::size_t parameter_count_;
  std::vector<PauliString> basis_;
  std::vector<double> initial_;
  std::vector<Step> steps_;
};

}  // namespace vqhe
