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

#include "vqhe/partition.hpp"

#include <algorithm>
#include <map>

#include "vqhe/errors.hpp"

namespace vqhe {

namespace {

std::uint64_t mask_of(const std::vector<std::size_t>& qubits) {
  std::uint64_t m = 0;
  for (auto q : qubits) m |= std::uint64_t{1} << q;
  return m;
}

PauliString restrict_to(const PauliString& p, const std::vector<std::size_t>& qubits) {
  std::uint64_t x = 0, z = 0;
  for (std::size_t j = 0; j < qubits.size(); ++j) {
    if ((p.x_bits() >> qubits[j]) & 1) x |= std::uint64_t{1} << j;
    if ((p.z_bits() >> qubits[j]) & 1) z |= std::uint64_t{1} << j;
  }
  return PauliString(qubits.size(), x, z);
}

PauliString masked(const PauliString& p, std::uint64_t mask) {
  return PauliString(p.num_qubits(), p.x_bits() & mask, p.z_bits() & mask);
}

void validate_part_qubits(const PartSpec& part, std::size_t n) {
  if (part.factor.num_qubits() != n) {
    throw ValidationError("part factor must span the full register");
  }
  if (part.residual_qubits.empty()) {
    throw ValidationError("part has no residual qubits to engineer");
  }
  std::vector<int> seen(n, 0);
  for (auto q : part.factor_qubits) {
    if (q >= n || seen[q]++) throw ValidationError("bad factor qubit list");
  }
  for (auto q : part.residual_qubits) {
    if (q >= n || seen[q]++) throw ValidationError("bad residual qubit list");
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw ValidationError("factor and residual qubits must cover the register");
  }
  if (!std::is_sorted(part.residual_qubits.begin(), part.residual_qubits.end())) {
    throw ValidationError("residual qubits must be listed in ascending order");
  }
  if (masked(part.factor, ~mask_of(part.factor_qubits)) != PauliString(n)) {
    throw ValidationError("factor acts outside its qubit set");
  }
}

}  // namespace

std::vector<PartitionPart> partition(const Hamiltonian& h,
                                     const PartitionSpec& spec) {
  const std::size_t n = h.num_qubits();
  const std::vector<Hamiltonian::Term> terms(h.terms().begin(), h.terms().end());
  std::vector<int> used(terms.size(), 0);
  std::vector<PartitionPart> out;
  for (const auto& part : spec.parts) {
    validate_part_qubits(part, n);
    const std::uint64_t fmask = mask_of(part.factor_qubits);
    std::vector<Hamiltonian::Term> residual;
    for (auto idx : part.term_indices) {
      if (idx >= terms.size()) throw ValidationError("term index out of range");
      if (used[idx]++) {
        throw ValidationError("term " + std::to_string(idx) + " in two parts");
      }
      const auto& [p, c] = terms[idx];
      if (masked(p, fmask) != part.factor) {
        throw ValidationError("term " + p.label() + " does not carry factor " +
                              part.factor.label());
      }
      residual.emplace_back(restrict_to(p, part.residual_qubits), c);
    }
    out.push_back({part, Hamiltonian(part.residual_qubits.size(), residual)});
  }
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (!used[i]) {
      throw ValidationError("term " + terms[i].first.label() + " not covered");
    }
  }
  return out;
}

Hamiltonian embed_part(const PartSpec& part, const Hamiltonian& residual,
                       std::size_t n_total) {
  if (residual.num_qubits() != part.residual_qubits.size()) {
    throw DimensionError("residual width differs from residual qubit count");
  }
  std::vector<Hamiltonian::Term> terms;
  for (const auto& [p, c] : residual.terms()) {
    std::uint64_t x = part.factor.x_bits(), z = part.factor.z_bits();
    for (std::size_t j = 0; j < part.residual_qubits.size(); ++j) {
      if ((p.x_bits() >> j) & 1) x |= std::uint64_t{1} << part.residual_qubits[j];
      if ((p.z_bits() >> j) & 1) z |= std::uint64_t{1} << part.residual_qubits[j];
    }
    terms.emplace_back(PauliString(n_total, x, z), c);
  }
  return Hamiltonian(n_total, terms);
}

PartitionSpec greedy_partition_spec(
    const Hamiltonian& h,
    const std::vector<std::vector<std::size_t>>& candidate_factor_qubits) {
  const std::size_t n = h.num_qubits();
  const std::vector<Hamiltonian::Term> terms(h.terms().begin(), h.terms().end());
  std::vector<char> taken(terms.size(), 0);
  PartitionSpec spec;
  for (auto fq : candidate_factor_qubits) {
    std::sort(fq.begin(), fq.end());
    const std::uint64_t fmask = mask_of(fq);
    std::vector<std::size_t> residual;
    for (std::size_t q = 0; q < n; ++q) {
      if (!((fmask >> q) & 1)) residual.push_back(q);
    }
    if (residual.empty()) throw ValidationError("factor set covers every qubit");
    std::map<PauliString, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (!taken[i]) groups[masked(terms[i].first, fmask)].push_back(i);
    }
    const std::vector<std::size_t>* best = nullptr;
    const PauliString* best_key = nullptr;
    for (const auto& [key, members] : groups) {
      if (!best || members.size() > best->size()) {
        best = &members;
        best_key = &key;
      }
    }
    if (!best) break;
    for (auto i : *best) taken[i] = 1;
    spec.parts.push_back({fq, *best_key, residual, *best});
  }
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!taken[i]) rest.push_back(i);
  }
  if (!rest.empty()) {
    std::vector<std::size_t> all(n);
    for (std::size_t q = 0; q < n; ++q) all[q] = q;
    spec.parts.push_back({{}, PauliString(n), all, rest});
  }
  return spec;
}

PartitionedResult optimize_partitioned(const Hamiltonian& h,
                                       const PartitionSpec& spec,
                                       const std::vector<AnsatzLayout>& layouts,
                                       const OptimizerConfig& config) {
  PartitionedResult out;
  out.parts = partition(h, spec);
  out.original_norm = pauli_norm(h);
  if (layouts.size() != out.parts.size()) {
    throw DimensionError("need one layout per part");
  }
  for (std::size_t i = 0; i < out.parts.size(); ++i) {
    out.results.push_back(optimize(out.parts[i].residual, layouts[i], config));
    out.combined_norm += out.results.back().engineered_norm;
  }
  return out;
}

}  // namespace vqhe
