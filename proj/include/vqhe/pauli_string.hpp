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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace vqhe {

/// Single-qubit Pauli factor. Numeric values are the base-4 digits used by
/// `PauliString::index()`.
enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(Pauli p);

/// n-qubit tensor product of {I, X, Y, Z} in symplectic form.
///
/// Qubit k carries X iff bit k of `x_bits()` is set, Z iff bit k of
/// `z_bits()` is set, Y iff both. Qubit 0 is the leftmost character of the
/// label and the most significant base-4 digit of the index, with digit
/// values I=0, X=1, Y=2, Z=3. Strings therefore order identically by label,
/// by index, and by `operator<`.
class PauliString {
 public:
  static constexpr std::size_t kMaxQubits = 64;

  /// Identity on n qubits; 1 <= n <= kMaxQubits.
  explicit PauliString(std::size_t n);
  PauliString(std::size_t n, std::uint64_t x_bits, std::uint64_t z_bits);

  /// Parses a label over {I, X, Y, Z}; throws ParseError on bad characters.
  static PauliString from_label(std::string_view label);
  /// Inverse of `index()`; requires n <= 32 so the index fits 64 bits.
  static PauliString from_index(std::size_t n, std::uint64_t index);

  std::size_t num_qubits() const noexcept { return n_; }
  std::uint64_t x_bits() const noexcept { return x_; }
  std::uint64_t z_bits() const noexcept { return z_; }

  Pauli at(std::size_t qubit) const;
  PauliString with(std::size_t qubit, Pauli p) const;

  std::string label() const;
  std::uint64_t index() const;

  bool is_identity() const noexcept { return (x_ | z_) == 0; }
  /// Number of non-identity factors.
  std::size_t weight() const noexcept;
  std::size_t y_count() const noexcept;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend bool operator<(const PauliString& a, const PauliString& b) noexcept;

 private:
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  std::uint32_t n_ = 0;
};

/// Phase i^k, k in {0,1,2,3}, times a Pauli string.
struct SignedPauli {
  std::uint8_t phase_exponent = 0;
  PauliString string;

  std::complex<double> phase() const;
  /// Real sign when the phase is +-1; throws std::logic_error for +-i.
  int sign() const;
  std::string str() const;

  friend bool operator==(const SignedPauli&, const SignedPauli&) = default;
};

/// Matrix product a*b as phase and string.
SignedPauli pauli_product(const PauliString& a, const PauliString& b);

/// True iff a*b == b*a (even count of anticommuting positions).
bool commutes(const PauliString& a, const PauliString& b);

/// True iff the factors commute at every qubit position.
bool qubit_wise_commutes(const PauliString& a, const PauliString& b);

struct PauliStringHash {
  std::size_t operator()(const PauliString& p) const noexcept;
};

}  // namespace vqhe
