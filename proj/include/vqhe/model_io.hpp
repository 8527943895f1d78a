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
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "vqhe/ansatz.hpp"
#include "vqhe/dense.hpp"
#include "vqhe/dynamics.hpp"
#include "vqhe/grouping.hpp"
#include "vqhe/hamiltonian.hpp"
#include "vqhe/optimizer.hpp"
#include "vqhe/q_estimator.hpp"

namespace vqhe {

/// -sum_i Z_i Z_{i+1} (open chain) + sum_k X_k.
Hamiltonian ising_neighbor(std::size_t n);
/// -sum_{i<j} Z_i Z_j + sum_k X_k.
Hamiltonian ising_all_to_all(std::size_t n);

/// One term per line: `<coefficient> <label>`. `#` starts a comment; blank
/// lines are skipped. Duplicate labels are summed and exact zeros dropped, so
/// the result may be empty. A text with no terms at all is a ParseError.
Hamiltonian parse_pauli_sum(std::string_view text);
Hamiltonian read_pauli_sum_file(const std::string& path);

/// Shortest round-trip decimal per coefficient, label order.
std::string serialize_pauli_sum(const Hamiltonian& h);
void write_pauli_sum_file(const std::string& path, const Hamiltonian& h);

/// One amplitude per line: `<re>` or `<re> <im>`; same comment rules. The
/// length must be a power of two. No normalization is applied.
StateVector parse_state(std::string_view text);
StateVector read_state_file(const std::string& path);

/// FNV-1a 64 of serialize_pauli_sum(h), as 16 hex digits.
std::string input_digest(const Hamiltonian& h);
std::string input_digest(const StateVector& psi);

nlohmann::json to_json(const Hamiltonian& h);
nlohmann::json to_json(const AnsatzLayout& layout);
nlohmann::json to_json(const EngineeredResult& r);
nlohmann::json to_json(const GroupingResult& g);
nlohmann::json to_json(const QEstimate& q);
nlohmann::json to_json(const QDriftError& e);
nlohmann::json to_json(const QDriftCostModel& m);

AnsatzLayout layout_from_json(const nlohmann::json& j);
ParameterVector parameters_from_json(const nlohmann::json& j);

}  // namespace vqhe
