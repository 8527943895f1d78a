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

#include "vqhe/dense.hpp"

#include <bit>
#include <cmath>

#include "vqhe/errors.hpp"

namespace vqhe {

namespace {

// Reverses the qubit-indexed symplectic mask into basis-index bit order.
std::size_t basis_mask(std::uint64_t qubit_bits, std::size_t n) {
  std::size_t m = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if ((qubit_bits >> k) & 1) m |= std::size_t{1} << (n - 1 - k);
  }
  return m;
}

std::size_t bit_of(std::size_t n, std::size_t qubit) {
  return std::size_t{1} << (n - 1 - qubit);
}

void require_state(const StateVector& psi, std::size_t n) {
  if (static_cast<std::size_t>(psi.size()) != (std::size_t{1} << n)) {
    throw DimensionError("state dimension does not match qubit count");
  }
}

}  // namespace

void require_dense_capacity(std::size_t n, std::size_t limit) {
  if (n > limit) {
    throw CapacityError("dense simulation limited to " + std::to_string(limit) +
                        " qubits, got " + std::to_string(n));
  }
}

StateVector apply_pauli(const PauliString& p, const StateVector& psi) {
  const std::size_t n = p.num_qubits();
  require_dense_capacity(n, 30);
  require_state(psi, n);
  const std::size_t xm = basis_mask(p.x_bits(), n);
  const std::size_t zm = basis_mask(p.z_bits(), n);
  static const Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Complex yphase = kIPow[p.y_count() % 4];
  StateVector out(psi.size());
  // P|b> = i^{#Y} (-1)^{|b & z|} |b ^ x>
  for (std::size_t b = 0; b < static_cast<std::size_t>(psi.size()); ++b) {
    const double s = (std::popcount(b & zm) & 1) ? -1.0 : 1.0;
    out[static_cast<Eigen::Index>(b ^ xm)] = yphase * s * psi[static_cast<Eigen::Index>(b)];
  }
  return out;
}

double pauli_expectation(const PauliString& p, const StateVector& psi) {
  return psi.dot(apply_pauli(p, psi)).real();
}

DenseOperator to_dense(const PauliString& p) {
  const std::size_t n = p.num_qubits();
  require_dense_capacity(n);
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  DenseOperator m = DenseOperator::Zero(dim, dim);
  StateVector e = StateVector::Zero(dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    e.setZero();
    e[c] = 1.0;
    m.col(c) = apply_pauli(p, e);
  }
  return m;
}

DenseOperator to_dense(const Hamiltonian& h) {
  const std::size_t n = h.num_qubits();
  require_dense_capacity(n);
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  DenseOperator m = DenseOperator::Zero(dim, dim);
  static const Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const auto& [p, c] : h.terms()) {
    const std::size_t xm = basis_mask(p.x_bits(), n);
    const std::size_t zm = basis_mask(p.z_bits(), n);
    const Complex yphase = kIPow[p.y_count() % 4] * c;
    for (std::size_t b = 0; b < static_cast<std::size_t>(dim); ++b) {
      const double s = (std::popcount(b & zm) & 1) ? -1.0 : 1.0;
      m(static_cast<Eigen::Index>(b ^ xm), static_cast<Eigen::Index>(b)) += s * yphase;
    }
  }
  return m;
}

double expectation(const Hamiltonian& h, const StateVector& psi) {
  double e = 0.0;
  for (const auto& [p, c] : h.terms()) e += c * pauli_expectation(p, psi);
  return e;
}

Eigen::Matrix2cd rotation_matrix(GateKind kind, double theta) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  const Complex i(0, 1);
  Eigen::Matrix2cd m;
  switch (kind) {
    case GateKind::RX: m << c, -i * s, -i * s, c; break;
    case GateKind::RY: m << c, -s, s, c; break;
    case GateKind::RZ: m << std::exp(-i * (theta / 2)), 0, 0, std::exp(i * (theta / 2)); break;
    case GateKind::CZ: throw ValidationError("CZ has no rotation matrix");
  }
  return m;
}

void apply_single_qubit(StateVector& psi, std::size_t n, std::size_t qubit,
                        const Eigen::Matrix2cd& m) {
  require_state(psi, n);
  const std::size_t bit = bit_of(n, qubit);
  for (std::size_t b = 0; b < static_cast<std::size_t>(psi.size()); ++b) {
    if (b & bit) continue;
    const auto i0 = static_cast<Eigen::Index>(b);
    const auto i1 = static_cast<Eigen::Index>(b | bit);
    const Complex a0 = psi[i0];
    const Complex a1 = psi[i1];
    psi[i0] = m(0, 0) * a0 + m(0, 1) * a1;
    psi[i1] = m(1, 0) * a0 + m(1, 1) * a1;
  }
}

void apply_cz(StateVector& psi, std::size_t n, std::size_t q1, std::size_t q2) {
  require_state(psi, n);
  const std::size_t mask = bit_of(n, q1) | bit_of(n, q2);
  for (std::size_t b = 0; b < static_cast<std::size_t>(psi.size()); ++b) {
    if ((b & mask) == mask) psi[static_cast<Eigen::Index>(b)] *= -1.0;
  }
}

void apply_cnot(StateVector& psi, std::size_t n, std::size_t control,
                std::size_t target) {
  require_state(psi, n);
  const std::size_t cb = bit_of(n, control);
  const std::size_t tb = bit_of(n, target);
  for (std::size_t b = 0; b < static_cast<std::size_t>(psi.size()); ++b) {
    if ((b & cb) && !(b & tb)) {
      std::swap(psi[static_cast<Eigen::Index>(b)],
                psi[static_cast<Eigen::Index>(b | tb)]);
    }
  }
}

void apply_cswap(StateVector& psi, std::size_t n, std::size_t control,
                 std::size_t a, std::size_t b) {
  require_state(psi, n);
  const std::size_t cb = bit_of(n, control);
  const std::size_t ab = bit_of(n, a);
  const std::size_t bb = bit_of(n, b);
  for (std::size_t s = 0; s < static_cast<std::size_t>(psi.size()); ++s) {
    // visit each swapped pair once: control set, a=1, b=0
    if ((s & cb) && (s & ab) && !(s & bb)) {
      std::swap(psi[static_cast<Eigen::Index>(s)],
                psi[static_cast<Eigen::Index>((s & ~ab) | bb)]);
    }
  }
}

StateVector apply_ansatz_to_state(const AnsatzLayout& layout,
                                  const ParameterVector& theta,
                                  const StateVector& psi) {
  check_parameters(layout, theta);
  const std::size_t n = layout.num_qubits();
  StateVector out = psi;
  for (const auto& g : layout.gates()) {
    if (g.kind == GateKind::CZ) {
      apply_cz(out, n, g.qubits[0], g.qubits[1]);
    } else {
      apply_single_qubit(out, n, g.qubits[0], rotation_matrix(g.kind, theta[*g.slot]));
    }
  }
  return out;
}

DenseOperator ansatz_unitary(const AnsatzLayout& layout,
                             const ParameterVector& theta) {
  const std::size_t n = layout.num_qubits();
  require_dense_capacity(n);
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  DenseOperator u(dim, dim);
  StateVector e = StateVector::Zero(dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    e.setZero();
    e[c] = 1.0;
    u.col(c) = apply_ansatz_to_state(layout, theta, e);
  }
  return u;
}

StateVector haar_state(std::size_t n, std::mt19937_64& rng) {
  require_dense_capacity(n, 20);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  StateVector psi(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    psi[i] = Complex(re, im);
  }
  psi.normalize();
  return psi;
}

double spectral_norm(const DenseOperator& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<DenseOperator> svd(m);
  return svd.singularValues()(0);
}

}  // namespace vqhe
