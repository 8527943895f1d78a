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

#include "vqhe/adjoint.hpp"

#include <cmath>
#include <unordered_map>

#include "vqhe/dense.hpp"
#include "vqhe/errors.hpp"

namespace vqhe {

namespace {

Pauli cyclic_next(Pauli p, int steps) {
  // X=1, Y=2, Z=3 -> cyclic successor within {X, Y, Z}
  const int v = static_cast<int>(p) - 1;
  return static_cast<Pauli>((v + steps) % 3 + 1);
}

void require_qubit(const Hamiltonian& h, std::size_t qubit) {
  if (qubit >= h.num_qubits()) {
    throw DimensionError("qubit " + std::to_string(qubit) +
                         " out of range for " + std::to_string(h.num_qubits()) +
                         "-qubit Hamiltonian");
  }
}

void require_layout(const Hamiltonian& h, const AnsatzLayout& layout,
                    const ParameterVector& theta) {
  if (layout.num_qubits() != h.num_qubits()) {
    throw DimensionError("layout width differs from Hamiltonian width");
  }
  check_parameters(layout, theta);
}

}  // namespace

Pauli rotation_axis(GateKind kind) {
  switch (kind) {
    case GateKind::RX: return Pauli::X;
    case GateKind::RY: return Pauli::Y;
    case GateKind::RZ: return Pauli::Z;
    case GateKind::CZ: break;
  }
  throw ValidationError("CZ has no rotation axis");
}

Hamiltonian conjugate_rotation(const Hamiltonian& h, Pauli axis,
                               std::size_t qubit, double theta) {
  require_qubit(h, qubit);
  if (axis == Pauli::I) throw ValidationError("rotation axis must be X, Y or Z");
  const Pauli first = cyclic_next(axis, 1);
  const Pauli second = cyclic_next(axis, 2);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  std::vector<Hamiltonian::Term> out;
  out.reserve(2 * h.size());
  for (const auto& [p, coef] : h.terms()) {
    const Pauli f = p.at(qubit);
    if (f == first) {
      out.emplace_back(p, c * coef);
      out.emplace_back(p.with(qubit, second), s * coef);
    } else if (f == second) {
      out.emplace_back(p, c * coef);
      out.emplace_back(p.with(qubit, first), -s * coef);
    } else {
      out.emplace_back(p, coef);
    }
  }
  return Hamiltonian(h.num_qubits(), out).pruned();
}

std::pair<PauliString, int> cz_image(const PauliString& p, std::size_t q1,
                                     std::size_t q2) {
  const std::uint64_t a = std::uint64_t{1} << q1;
  const std::uint64_t b = std::uint64_t{1} << q2;
  const bool xa = p.x_bits() & a, xb = p.x_bits() & b;
  const bool za = p.z_bits() & a, zb = p.z_bits() & b;
  std::uint64_t z = p.z_bits();
  if (xb) z ^= a;
  if (xa) z ^= b;
  const int sign = (xa && xb && (za != zb)) ? -1 : 1;
  return {PauliString(p.num_qubits(), p.x_bits(), z), sign};
}

Hamiltonian conjugate_cz(const Hamiltonian& h, std::size_t q1, std::size_t q2) {
  require_qubit(h, q1);
  require_qubit(h, q2);
  if (q1 == q2) throw ValidationError("CZ qubits must be distinct");
  std::vector<Hamiltonian::Term> out;
  out.reserve(h.size());
  for (const auto& [p, coef] : h.terms()) {
    auto [image, sign] = cz_image(p, q1, q2);
    out.emplace_back(image, sign * coef);
  }
  return Hamiltonian(h.num_qubits(), out);
}

Hamiltonian apply_ansatz(const Hamiltonian& h, const AnsatzLayout& layout,
                         const ParameterVector& theta) {
  require_layout(h, layout, theta);
  Hamiltonian out = h;
  for (const auto& g : layout.gates()) {
    if (g.kind == GateKind::CZ) {
      out = conjugate_cz(out, g.qubits[0], g.qubits[1]);
    } else {
      out = conjugate_rotation(out, rotation_axis(g.kind), g.qubits[0],
                               theta[*g.slot]);
    }
  }
  return out;
}

Hamiltonian apply_ansatz_inverse(const Hamiltonian& h,
                                 const AnsatzLayout& layout,
                                 const ParameterVector& theta) {
  require_layout(h, layout, theta);
  Hamiltonian out = h;
  const auto& gates = layout.gates();
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    if (it->kind == GateKind::CZ) {
      out = conjugate_cz(out, it->qubits[0], it->qubits[1]);
    } else {
      out = conjugate_rotation(out, rotation_axis(it->kind), it->qubits[0],
                               -theta[*it->slot]);
    }
  }
  return out;
}

Eigen::MatrixXd build_encoded_v(const AnsatzLayout& layout,
                                const ParameterVector& theta) {
  const std::size_t n = layout.num_qubits();
  if (n > 3) throw CapacityError("explicit encoded map limited to n <= 3");
  check_parameters(layout, theta);
  const DenseOperator u = ansatz_unitary(layout, theta);
  const auto d = static_cast<Eigen::Index>(std::uint64_t{1} << (2 * n));
  const double dim = static_cast<double>(std::size_t{1} << n);
  std::vector<DenseOperator> paulis;
  paulis.reserve(static_cast<std::size_t>(d));
  for (Eigen::Index i = 0; i < d; ++i) {
    paulis.push_back(to_dense(PauliString::from_index(n, static_cast<std::uint64_t>(i))));
  }
  Eigen::MatrixXd v(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const DenseOperator row_op = u.adjoint() * paulis[static_cast<std::size_t>(i)] * u;
    for (Eigen::Index m = 0; m < d; ++m) {
      v(i, m) = (row_op * paulis[static_cast<std::size_t>(m)]).trace().real() / dim;
    }
  }
  return v;
}

CompiledAnsatz::CompiledAnsatz(const Hamiltonian& h, const AnsatzLayout& layout)
    : n_(h.num_qubits()), parameter_count_(layout.parameter_count()) {
  if (layout.num_qubits() != n_) {
    throw DimensionError("layout width differs from Hamiltonian width");
  }
  std::unordered_map<PauliString, std::uint32_t, PauliStringHash> index;
  auto index_of = [&](const PauliString& p) {
    auto [it, inserted] = index.try_emplace(p, static_cast<std::uint32_t>(basis_.size()));
    if (inserted) basis_.push_back(p);
    return it->second;
  };

  std::vector<std::uint32_t> active;
  for (const auto& [p, c] : h.terms()) active.push_back(index_of(p));
  for (const auto& [p, c] : h.terms()) initial_.push_back(c);

  std::vector<char> in_active;
  for (const auto& g : layout.gates()) {
    Step step;
    if (g.kind == GateKind::CZ) {
      step.rotation = false;
      std::vector<std::uint32_t> next;
      next.reserve(active.size());
      for (const auto idx : active) {
        auto [image, sign] = cz_image(basis_[idx], g.qubits[0], g.qubits[1]);
        const auto to = index_of(image);
        step.links.emplace_back(idx, to);
        step.signs.push_back(static_cast<std::int8_t>(sign));
        next.push_back(to);
      }
      active = std::move(next);
    } else {
      step.slot = *g.slot;
      const std::size_t q = g.qubits[0];
      const Pauli axis = rotation_axis(g.kind);
      const Pauli first = cyclic_next(axis, 1);
      const Pauli second = cyclic_next(axis, 2);
      in_active.assign(basis_.size(), 0);
      for (const auto idx : active) in_active[idx] = 1;
      const std::size_t before = active.size();
      for (std::size_t k = 0; k < before; ++k) {
        const auto idx = active[k];
        const Pauli f = basis_[idx].at(q);
        if (f == first) {
          const auto partner = index_of(basis_[idx].with(q, second));
          step.links.emplace_back(idx, partner);
          if (partner >= in_active.size()) in_active.resize(partner + 1, 0);
          if (!in_active[partner]) {
            in_active[partner] = 1;
            active.push_back(partner);
          }
        } else if (f == second) {
          const auto partner = index_of(basis_[idx].with(q, first));
          if (partner >= in_active.size()) in_active.resize(partner + 1, 0);
          // the pair is recorded from its `first` member when that is active
          if (!in_active[partner]) {
            in_active[partner] = 1;
            active.push_back(partner);
            step.links.emplace_back(partner, idx);
          }
        }
      }
    }
    steps_.push_back(std::move(step));
  }
}

std::vector<double> CompiledAnsatz::forward(const ParameterVector& theta) const {
  if (theta.size() != parameter_count_) {
    throw DimensionError("parameter vector length does not match layout");
  }
  std::vector<double> v(basis_.size(), 0.0);
  std::copy(initial_.begin(), initial_.end(), v.begin());
  std::vector<double> scratch;
  for (const auto& step : steps_) {
    if (step.rotation) {
      const double c = std::cos(theta[step.slot]);
      const double s = std::sin(theta[step.slot]);
      for (const auto& [b, cc] : step.links) {
        const double hb = v[b];
        const double hc = v[cc];
        v[b] = c * hb - s * hc;
        v[cc] = c * hc + s * hb;
      }
    } else {
      scratch.resize(step.links.size());
      for (std::size_t k = 0; k < step.links.size(); ++k) {
        scratch[k] = v[step.links[k].first];
        v[step.links[k].first] = 0.0;
      }
      for (std::size_t k = 0; k < step.links.size(); ++k) {
        v[step.links[k].second] = step.signs[k] * scratch[k];
      }
    }
  }
  return v;
}

std::vector<double> CompiledAnsatz::backward(const ParameterVector& theta,
                                             std::vector<double> h,
                                             std::vector<double> g) const {
  if (theta.size() != parameter_count_) {
    throw DimensionError("parameter vector length does not match layout");
  }
  if (h.size() != basis_.size() || g.size() != basis_.size()) {
    throw DimensionError("coefficient vectors must span the compiled basis");
  }
  std::vector<double> grad(parameter_count_, 0.0);
  std::vector<double> sh, sg;
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    const auto& step = *it;
    if (step.rotation) {
      const double c = std::cos(theta[step.slot]);
      const double s = std::sin(theta[step.slot]);
      double d = 0.0;
      for (const auto& [b, cc] : step.links) {
        const double hb = h[b], hc = h[cc];
        const double gb = g[b], gc = g[cc];
        // d h_B / d theta = -h_C, d h_C / d theta = h_B at the gate output
        d += gc * hb - gb * hc;
        h[b] = c * hb + s * hc;
        h[cc] = c * hc - s * hb;
        g[b] = c * gb + s * gc;
        g[cc] = c * gc - s * gb;
      }
      grad[step.slot] += d;
    } else {
      const std::size_t m = step.links.size();
      sh.resize(m);
      sg.resize(m);
      for (std::size_t k = 0; k < m; ++k) {
        const auto to = step.links[k].second;
        sh[k] = h[to];
        sg[k] = g[to];
        h[to] = 0.0;
        g[to] = 0.0;
      }
      for (std::size_t k = 0; k < m; ++k) {
        const auto from = step.links[k].first;
        h[from] = step.signs[k] * sh[k];
        g[from] = step.signs[k] * sg[k];
      }
    }
  }
  return grad;
}

Hamiltonian CompiledAnsatz::to_hamiltonian(std::span<const double> coefficients) const {
  if (coefficients.size() != basis_.size()) {
    throw DimensionError("coefficient vector must span the compiled basis");
  }
  std::vector<Hamiltonian::Term> terms;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (std::abs(coefficients[i]) >= kPruneThreshold) {
      terms.emplace_back(basis_[i], coefficients[i]);
    }
  }
  return Hamiltonian(n_, terms);
}

}  // namespace vqhe
