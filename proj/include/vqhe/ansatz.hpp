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
#include <optional>
#include <string>
#include <vector>

namespace vqhe {

enum class GateKind { RX, RY, RZ, CZ };

std::string to_string(GateKind kind);
GateKind gate_kind_from_string(const std::string& name);

/// One ansatz gate. Rotations use `qubits[0]` and a parameter slot; CZ uses
/// both qubits and no slot.
struct Gate {
  GateKind kind = GateKind::RX;
  std::size_t qubits[2] = {0, 0};
  std::optional<std::size_t> slot;

  static Gate rotation(GateKind kind, std::size_t qubit, std::size_t slot);
  static Gate cz(std::size_t q1, std::size_t q2);

  bool is_rotation() const noexcept { return kind != GateKind::CZ; }
  friend bool operator==(const Gate& a, const Gate& b);
};

enum class Entangler { Linear, AllToAll };

using ParameterVector = std::vector<double>;

/// Ordered gate list on n qubits. The circuit unitary is
/// U = G_last ... G_1, so gates are applied in list order.
class AnsatzLayout {
 public:
  /// Validates qubit ranges, CZ distinctness, and that rotation slots are
  /// exactly 0..m-1, each used once.
  AnsatzLayout(std::size_t n, std::size_t depth, std::vector<Gate> gates);

  /// Per layer: each rotation kind in `rotations` on every qubit, then CZ on
  /// the entangler pairs (neighbouring chain or all pairs i<j).
  static AnsatzLayout hardware_efficient(
      std::size_t n, std::size_t depth,
      const std::vector<GateKind>& rotations = {GateKind::RX, GateKind::RZ},
      Entangler entangler = Entangler::Linear);

  std::size_t num_qubits() const noexcept { return n_; }
  std::size_t depth() const noexcept { return depth_; }
  std::size_t parameter_count() const noexcept { return parameter_count_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }

  /// Same gates with qubit k relabelled to `qubit_map[k]` on an n_total
  /// register.
  AnsatzLayout embedded(const std::vector<std::size_t>& qubit_map,
                        std::size_t n_total) const;
  /// Gates of `this` followed by the gates of `next`, with next's slots
  /// shifted past ours.
  AnsatzLayout concatenated(const AnsatzLayout& next) const;

  friend bool operator==(const AnsatzLayout&, const AnsatzLayout&) = default;

 private:
  std::size_t n_;
  std::size_t depth_;
  std::vector<Gate> gates_;
  std::size_t parameter_count_ = 0;
};

/// Throws DimensionError when theta does not match the layout.
void check_parameters(const AnsatzLayout& layout, const ParameterVector& theta);

}  // namespace vqhe
