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

#include "vqhe/pauli_string.hpp"

#include <bit>
#include <stdexcept>

#include "vqhe/errors.hpp"

namespace vqhe {

namespace {

std::uint64_t low_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void require_same_length(const PauliString& a, const PauliString& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw DimensionError("Pauli strings of length " +
                         std::to_string(a.num_qubits()) + " and " +
                         std::to_string(b.num_qubits()));
  }
}

// Digit of qubit k is (x, z) -> I=0, X=1, Y=2, Z=3.
std::uint8_t digit(std::uint64_t x, std::uint64_t z, std::size_t k) {
  const bool xb = (x >> k) & 1;
  const bool zb = (z >> k) & 1;
  if (!xb) return zb ? 3 : 0;
  return zb ? 2 : 1;
}

}  // namespace

char to_char(Pauli p) {
  static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
  return kChars[static_cast<int>(p)];
}

PauliString::PauliString(std::size_t n) : PauliString(n, 0, 0) {}

PauliString::PauliString(std::size_t n, std::uint64_t x_bits,
                         std::uint64_t z_bits)
    : x_(x_bits), z_(z_bits), n_(static_cast<std::uint32_t>(n)) {
  if (n == 0 || n > kMaxQubits) {
    throw CapacityError("Pauli string length must be in [1, 64], got " +
                        std::to_string(n));
  }
  if (((x_bits | z_bits) & ~low_mask(n)) != 0) {
    throw DimensionError("Pauli string bits set beyond qubit count");
  }
}

PauliString PauliString::from_label(std::string_view label) {
  if (label.empty() || label.size() > kMaxQubits) {
    throw ParseError(0, "Pauli label length must be in [1, 64]");
  }
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  for (std::size_t k = 0; k < label.size(); ++k) {
    const std::uint64_t bit = std::uint64_t{1} << k;
    switch (label[k]) {
      case 'I': break;
      case 'X': x |= bit; break;
      case 'Y': x |= bit; z |= bit; break;
      case 'Z': z |= bit; break;
      default:
        throw ParseError(0, std::string("bad Pauli character '") + label[k] +
                                "' in label '" + std::string(label) + "'");
    }
  }
  return PauliString(label.size(), x, z);
}

PauliString PauliString::from_index(std::size_t n, std::uint64_t index) {
  if (n == 0 || n > 32) {
    throw CapacityError("base-4 index requires 1 <= n <= 32");
  }
  if (n < 32 && (index >> (2 * n)) != 0) {
    throw DimensionError("index out of range for " + std::to_string(n) +
                         " qubits");
  }
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const auto d = (index >> (2 * (n - 1 - k))) & 3;
    const std::uint64_t bit = std::uint64_t{1} << k;
    if (d == 1 || d == 2) x |= bit;
    if (d == 2 || d == 3) z |= bit;
  }
  return PauliString(n, x, z);
}

Pauli PauliString::at(std::size_t qubit) const {
  if (qubit >= n_) throw DimensionError("qubit index out of range");
  return static_cast<Pauli>(digit(x_, z_, qubit));
}

PauliString PauliString::with(std::size_t qubit, Pauli p) const {
  if (qubit >= n_) throw DimensionError("qubit index out of range");
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  std::uint64_t x = x_ & ~bit;
  std::uint64_t z = z_ & ~bit;
  if (p == Pauli::X || p == Pauli::Y) x |= bit;
  if (p == Pauli::Z || p == Pauli::Y) z |= bit;
  return PauliString(n_, x, z);
}

std::string PauliString::label() const {
  std::string out(n_, 'I');
  for (std::size_t k = 0; k < n_; ++k) out[k] = to_char(at(k));
  return out;
}

std::uint64_t PauliString::index() const {
  if (n_ > 32) throw CapacityError("base-4 index requires n <= 32");
  std::uint64_t idx = 0;
  for (std::size_t k = 0; k < n_; ++k) idx = (idx << 2) | digit(x_, z_, k);
  return idx;
}

std::size_t PauliString::weight() const noexcept {
  return static_cast<std::size_t>(std::popcount(x_ | z_));
}

std::size_t PauliString::y_count() const noexcept {
  return static_cast<std::size_t>(std::popcount(x_ & z_));
}

bool operator<(const PauliString& a, const PauliString& b) noexcept {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  const std::uint64_t diff = (a.x_ ^ b.x_) | (a.z_ ^ b.z_);
  if (diff == 0) return false;
  const auto k = static_cast<std::size_t>(std::countr_zero(diff));
  return digit(a.x_, a.z_, k) < digit(b.x_, b.z_, k);
}

std::complex<double> SignedPauli::phase() const {
  switch (phase_exponent & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

int SignedPauli::sign() const {
  if (phase_exponent & 1) throw std::logic_error("phase is imaginary");
  return phase_exponent == 0 ? 1 : -1;
}

std::string SignedPauli::str() const {
  static constexpr const char* kPrefix[] = {"+", "+i", "-", "-i"};
  return kPrefix[phase_exponent & 3] + string.label();
}

SignedPauli pauli_product(const PauliString& a, const PauliString& b) {
  require_same_length(a, b);
  const std::uint64_t x1 = a.x_bits(), z1 = a.z_bits();
  const std::uint64_t x2 = b.x_bits(), z2 = b.z_bits();
  // XY = iZ, YZ = iX, ZX = iY; the reversed orders carry -i.
  const std::uint64_t ax = x1 & ~z1, ay = x1 & z1, az = ~x1 & z1;
  const std::uint64_t bx = x2 & ~z2, by = x2 & z2, bz = ~x2 & z2;
  const std::uint64_t forward = (ax & by) | (ay & bz) | (az & bx);
  const std::uint64_t backward = (ay & bx) | (az & by) | (ax & bz);
  const int k = std::popcount(forward) - std::popcount(backward);
  SignedPauli out{static_cast<std::uint8_t>(((k % 4) + 4) % 4),
                  PauliString(a.num_qubits(), x1 ^ x2, z1 ^ z2)};
  return out;
}

bool commutes(const PauliString& a, const PauliString& b) {
  require_same_length(a, b);
  const std::uint64_t anti =
      (a.x_bits() & b.z_bits()) ^ (a.z_bits() & b.x_bits());
  return (std::popcount(anti) & 1) == 0;
}

bool qubit_wise_commutes(const PauliString& a, const PauliString& b) {
  require_same_length(a, b);
  return ((a.x_bits() & b.z_bits()) ^ (a.z_bits() & b.x_bits())) == 0;
}

std::size_t PauliStringHash::operator()(const PauliString& p) const noexcept {
  std::uint64_t h = p.x_bits() * 0x9E3779B97F4A7C15ULL;
  h ^= (p.z_bits() + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2));
  h ^= p.num_qubits() * 0xC2B2AE3D27D4EB4FULL;
  return static_cast<std::size_t>(h ^ (h >> 31));
}

}  // namespace vqhe
