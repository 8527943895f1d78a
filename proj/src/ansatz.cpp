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

#include "vqhe/ansatz.hpp"

#include <cmath>

#include "vqhe/errors.hpp"

namespace vqhe {

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::CZ: return "CZ";
  }
  return "?";
}

GateKind gate_kind_from_string(const std::string& name) {
  if (name == "RX") return GateKind::RX;
  if (name == "RY") return GateKind::RY;
  if (name == "RZ") return GateKind::RZ;
  if (name == "CZ") return GateKind::CZ;
  throw ValidationError("unknown gate kind '" + name + "'");
}

Gate Gate::rotation(GateKind kind, std::size_t qubit, std::size_t slot) {
  if (kind == GateKind::CZ) throw ValidationError("CZ is not a rotation");
  Gate g;
  g.kind = kind;
  g.qubits[0] = qubit;
  g.qubits[1] = qubit;
  g.slot = slot;
  return g;
}

Gate Gate::cz(std::size_t q1, std::size_t q2) {
  Gate g;
  g.kind = GateKind::CZ;
  g.qubits[0] = q1;
  g.qubits[1] = q2;
  return g;
}

bool operator==(const Gate& a, const Gate& b) {
  if (a.kind != b.kind || a.slot != b.slot || a.qubits[0] != b.qubits[0]) {
    return false;
  }
  return !(a.kind == GateKind::CZ) || a.qubits[1] == b.qubits[1];
}

AnsatzLayout::AnsatzLayout(std::size_t n, std::size_t depth,
                           std::vector<Gate> gates)
    : n_(n), depth_(depth), gates_(std::move(gates)) {
  if (n == 0) throw ValidationError("layout needs at least one qubit");
  std::vector<int> seen;
  for (const auto& g : gates_) {
    if (g.qubits[0] >= n || (g.kind == GateKind::CZ && g.qubits[1] >= n)) {
      throw DimensionError("gate qubit index out of range");
    }
    if (g.kind == GateKind::CZ) {
      if (g.qubits[0] == g.qubits[1]) {
        throw ValidationError("CZ qubits must be distinct");
      }
      if (g.slot) throw ValidationError("CZ takes no parameter slot");
      continue;
    }
    if (!g.slot) throw ValidationError("rotation gate without parameter slot");
    if (*g.slot >= seen.size()) seen.resize(*g.slot + 1, 0);
    if (seen[*g.slot]++) {
      throw ValidationError("parameter slot " + std::to_string(*g.slot) +
                            " used twice");
    }
  }
  for (std::size_t s = 0; s < seen.size(); ++s) {
    if (!seen[s]) {
      throw ValidationError("parameter slot " + std::to_string(s) + " unused");
    }
  }
  parameter_count_ = seen.size();
}

AnsatzLayout AnsatzLayout::hardware_efficient(
    std::size_t n, std::size_t depth, const std::vector<GateKind>& rotations,
    Entangler entangler) {
  std::vector<Gate> gates;
  std::size_t slot = 0;
  for (std::size_t layer = 0; layer < depth; ++layer) {
    for (const auto kind : rotations) {
      for (std::size_t q = 0; q < n; ++q) {
        gates.push_back(Gate::rotation(kind, q, slot++));
      }
    }
    if (entangler == Entangler::Linear) {
      for (std::size_t q = 0; q + 1 < n; ++q) gates.push_back(Gate::cz(q, q + 1));
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) gates.push_back(Gate::cz(i, j));
      }
    }
  }
  return AnsatzLayout(n, depth, std::move(gates));
}

AnsatzLayout AnsatzLayout::embedded(const std::vector<std::size_t>& qubit_map,
                                    std::size_t n_total) const {
  if (qubit_map.size() != n_) {
    throw DimensionError("qubit map length must equal layout width");
  }
  std::vector<Gate> gates = gates_;
  for (auto& g : gates) {
    g.qubits[0] = qubit_map.at(g.qubits[0]);
    g.qubits[1] = qubit_map.at(g.qubits[1]);
  }
  return AnsatzLayout(n_total, depth_, std::move(gates));
}

AnsatzLayout AnsatzLayout::concatenated(const AnsatzLayout& next) const {
  if (next.n_ != n_) throw DimensionError("layouts act on different widths");
  std::vector<Gate> gates = gates_;
  for (Gate g : next.gates_) {
    if (g.slot) g.slot = *g.slot + parameter_count_;
    gates.push_back(g);
  }
  return AnsatzLayout(n_, depth_ + next.depth_, std::move(gates));
}

void check_parameters(const AnsatzLayout& layout, const ParameterVector& theta) {
  if (theta.size() != layout.parameter_count()) {
    throw DimensionError("expected " + std::to_string(layout.parameter_count()) +
                         " parameters, got " + std::to_string(theta.size()));
  }
  for (double t : theta) {
    if (!std::isfinite(t)) throw NumericError("non-finite parameter");
  }
}

}  // namespace vqhe
