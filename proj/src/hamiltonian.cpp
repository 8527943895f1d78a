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

#include "vqhe/hamiltonian.hpp"

#include <algorithm>
#include <cmath>

#include "vqhe/errors.hpp"

namespace vqhe {

Hamiltonian::Hamiltonian(std::size_t n) : n_(n) {
  if (n == 0 || n > PauliString::kMaxQubits) {
    throw CapacityError("Hamiltonian qubit count must be in [1, 64]");
  }
}

Hamiltonian::Hamiltonian(std::size_t n, const std::vector<Term>& terms)
    : Hamiltonian(n) {
  for (const auto& [p, c] : terms) {
    if (p.num_qubits() != n) {
      throw DimensionError("term " + p.label() + " does not act on " +
                           std::to_string(n) + " qubits");
    }
    terms_[p] += c;
  }
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0.0; });
}

double Hamiltonian::coefficient(const PauliString& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? 0.0 : it->second;
}

Hamiltonian Hamiltonian::pruned(double threshold) const {
  Hamiltonian out(*this);
  std::erase_if(out.terms_, [threshold](const auto& kv) {
    return std::abs(kv.second) < threshold;
  });
  return out;
}

Hamiltonian Hamiltonian::scaled(double alpha) const {
  Hamiltonian out(n_);
  if (alpha == 0.0) return out;
  for (const auto& [p, c] : terms_) out.terms_.emplace(p, alpha * c);
  return out;
}

Hamiltonian operator+(const Hamiltonian& a, const Hamiltonian& b) {
  if (a.n_ != b.n_) throw DimensionError("Hamiltonian qubit counts differ");
  Hamiltonian out(a);
  for (const auto& [p, c] : b.terms_) out.terms_[p] += c;
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0.0; });
  return out;
}

double pauli_norm(const Hamiltonian& h) {
  double s = 0.0;
  for (const auto& [p, c] : h.terms()) s += std::abs(c);
  return s;
}

double l2_norm(const Hamiltonian& h) {
  double s = 0.0;
  for (const auto& [p, c] : h.terms()) s += c * c;
  return std::sqrt(s);
}

CoefficientVector vectorize(const Hamiltonian& h) {
  if (h.empty()) {
    throw DegenerateInputError("cannot vectorize the zero Hamiltonian");
  }
  if (h.num_qubits() > 32) {
    throw CapacityError("vectorization indexes 4^n entries; requires n <= 32");
  }
  CoefficientVector v;
  v.num_qubits = h.num_qubits();
  v.lambda = l2_norm(h);
  for (const auto& [p, c] : h.terms()) v.entries.emplace(p.index(), c / v.lambda);
  return v;
}

Hamiltonian devectorize(const CoefficientVector& v) {
  std::vector<Hamiltonian::Term> terms;
  terms.reserve(v.entries.size());
  for (const auto& [idx, a] : v.entries) {
    const double c = v.lambda * a;
    if (std::abs(c) < kPruneThreshold) continue;
    terms.emplace_back(PauliString::from_index(v.num_qubits, idx), c);
  }
  return Hamiltonian(v.num_qubits, terms);
}

double state_l1_norm(const CoefficientVector& v) {
  double s = 0.0;
  for (const auto& [idx, a] : v.entries) s += std::abs(a);
  return s;
}

Hamiltonian tensor(const Hamiltonian& a, const Hamiltonian& b) {
  const std::size_t na = a.num_qubits();
  const std::size_t n = na + b.num_qubits();
  if (n > PauliString::kMaxQubits) throw CapacityError("tensor product too wide");
  std::vector<Hamiltonian::Term> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& [pa, ca] : a.terms()) {
    for (const auto& [pb, cb] : b.terms()) {
      terms.emplace_back(PauliString(n, pa.x_bits() | (pb.x_bits() << na),
                                     pa.z_bits() | (pb.z_bits() << na)),
                         ca * cb);
    }
  }
  return Hamiltonian(n, terms);
}

double max_coefficient_difference(const Hamiltonian& a, const Hamiltonian& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw DimensionError("Hamiltonian qubit counts differ");
  }
  double worst = 0.0;
  for (const auto& [p, c] : a.terms()) {
    worst = std::max(worst, std::abs(c - b.coefficient(p)));
  }
  for (const auto& [p, c] : b.terms()) {
    if (a.terms().count(p) == 0) worst = std::max(worst, std::abs(c));
  }
  return worst;
}

}  // namespace vqhe
