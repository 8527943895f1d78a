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
#include <map>
#include <utility>
#include <vector>

#include "vqhe/pauli_string.hpp"

namespace vqhe {

/// Coefficients with magnitude below this are dropped after transformations.
inline constexpr double kPruneThreshold = 1e-12;

/// Real-coefficient Pauli sum on a fixed number of qubits.
///
/// Terms are kept in a map ordered by label, with duplicates merged and zero
/// coefficients removed, so two Hamiltonians compare equal iff they have the
/// same qubit count and identical coefficient sets.
class Hamiltonian {
 public:
  using Term = std::pair<PauliString, double>;
  using TermMap = std::map<PauliString, double>;

  explicit Hamiltonian(std::size_t n);
  /// Merges duplicate strings (summing coefficients) and drops terms whose
  /// merged coefficient is exactly zero.
  Hamiltonian(std::size_t n, const std::vector<Term>& terms);

  std::size_t num_qubits() const noexcept { return n_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  const TermMap& terms() const noexcept { return terms_; }
  /// Coefficient of `p`, zero when absent.
  double coefficient(const PauliString& p) const;

  /// Drops terms with |h| < threshold.
  Hamiltonian pruned(double threshold = kPruneThreshold) const;
  Hamiltonian scaled(double alpha) const;

  friend Hamiltonian operator+(const Hamiltonian& a, const Hamiltonian& b);
  friend bool operator==(const Hamiltonian&, const Hamiltonian&) = default;

 private:
  std::size_t n_;
  TermMap terms_;
};

/// Normalized 4^n-dimensional coefficient state |H> = h / lambda, stored
/// sparsely by base-4 Pauli index.
struct CoefficientVector {
  std::size_t num_qubits = 0;
  double lambda = 0.0;
  std::map<std::uint64_t, double> entries;
};

/// Sum of |h_i|.
double pauli_norm(const Hamiltonian& h);
/// sqrt(sum h_i^2), the l2 norm of the coefficient vector.
double l2_norm(const Hamiltonian& h);

/// Throws DegenerateInputError on an empty Hamiltonian and CapacityError for
/// n > 32.
CoefficientVector vectorize(const Hamiltonian& h);
Hamiltonian devectorize(const CoefficientVector& v);

double state_l1_norm(const CoefficientVector& v);

/// Tensor product a (on the first qubits) with b (on the following ones).
Hamiltonian tensor(const Hamiltonian& a, const Hamiltonian& b);

/// Largest |h_i - g_i| over the union of both supports.
double max_coefficient_difference(const Hamiltonian& a, const Hamiltonian& b);

}  // namespace vqhe
