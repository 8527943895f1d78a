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
#include <vector>

#include "vqhe/ansatz.hpp"
#include "vqhe/hamiltonian.hpp"
#include "vqhe/optimizer.hpp"

namespace vqhe {

/// One part of a partitioned Hamiltonian: the listed terms all carry
/// `factor` on `factor_qubits`; what they carry on `residual_qubits` forms the
/// residual Hamiltonian that gets engineered.
struct PartSpec {
  std::vector<std::size_t> factor_qubits;
  /// Full-width string, identity outside factor_qubits.
  PauliString factor;
  std::vector<std::size_t> residual_qubits;
  /// Positions in h.terms() iteration order.
  std::vector<std::size_t> term_indices;
};

struct PartitionSpec {
  std::vector<PartSpec> parts;
};

struct PartitionPart {
  PartSpec spec;
  Hamiltonian residual;
};

/// Splits h per `spec`. Throws ValidationError unless the parts are disjoint,
/// cover every term, use complementary qubit sets, and each listed term
/// carries the stated factor exactly.
std::vector<PartitionPart> partition(const Hamiltonian& h,
                                     const PartitionSpec& spec);

/// factor (on factor_qubits) tensored with residual (on residual_qubits).
Hamiltonian embed_part(const PartSpec& part, const Hamiltonian& residual,
                       std::size_t n_total);

/// Greedy spec: for each candidate factor-qubit set in order, the largest
/// group of remaining terms sharing one restriction to that set becomes a
/// part. Leftover terms form a final part with an empty factor set.
PartitionSpec greedy_partition_spec(
    const Hamiltonian& h,
    const std::vector<std::vector<std::size_t>>& candidate_factor_qubits);

struct PartitionedResult {
  std::vector<PartitionPart> parts;
  std::vector<EngineeredResult> results;
  /// Sum of engineered residual Pauli norms. Valid for expectation-value
  /// estimation only: each part carries its own unitary, so one evolution
  /// cannot be sandwiched across parts.
  double combined_norm = 0.0;
  double original_norm = 0.0;
};

/// Engineers every residual independently with its own layout (one per part,
/// each on that part's residual width).
PartitionedResult optimize_partitioned(const Hamiltonian& h,
                                       const PartitionSpec& spec,
                                       const std::vector<AnsatzLayout>& layouts,
                                       const OptimizerConfig& config);

}  // namespace vqhe
