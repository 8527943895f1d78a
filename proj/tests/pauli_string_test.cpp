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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "vqhe/errors.hpp"

namespace vqhe {
namespace {

std::vector<PauliString> all_strings(std::size_t n) {
  std::vector<PauliString> out;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << (2 * n)); ++i) {
    out.push_back(PauliString::from_index(n, i));
  }
  return out;
}

TEST(PauliString, LabelsIndicesAndBitsRoundTrip) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& p : all_strings(n)) {
      EXPECT_EQ(PauliString::from_label(p.label()), p);
      EXPECT_EQ(PauliString::from_index(n, p.index()), p);
      EXPECT_EQ(PauliString(n, p.x_bits(), p.z_bits()), p);
    }
  }
  // qubit 0 is the most significant base-4 digit
  EXPECT_EQ(PauliString::from_label("XI").index(), 4u);
  EXPECT_EQ(PauliString::from_label("IZ").index(), 3u);
  EXPECT_EQ(PauliString::from_label("YX").index(), 9u);
}

TEST(PauliString, OrderingMatchesIndexOrder) {
  const auto strings = all_strings(2);
  for (std::size_t i = 0; i + 1 < strings.size(); ++i) {
    EXPECT_TRUE(strings[i] < strings[i + 1]);
    EXPECT_LT(strings[i].label(), strings[i + 1].label());
  }
}

TEST(PauliString, RejectsBadInput) {
  EXPECT_THROW(PauliString::from_label("XAZ"), ParseError);
  EXPECT_THROW(PauliString::from_label(""), ParseError);
  EXPECT_THROW(PauliString(0), CapacityError);
  EXPECT_THROW(PauliString(65), CapacityError);
  EXPECT_THROW(pauli_product(PauliString(1), PauliString(2)), DimensionError);
  EXPECT_THROW(commutes(PauliString(1), PauliString(2)), DimensionError);
}

TEST(PauliString, ProductSingleQubitAlgebra) {
  const auto xy = pauli_product(PauliString::from_label("X"), PauliString::from_label("Y"));
  EXPECT_EQ(xy.string.label(), "Z");
  EXPECT_EQ(xy.phase(), std::complex<double>(0, 1));
  const auto id = pauli_product(PauliString(3), PauliString::from_label("XYZ"));
  EXPECT_EQ(id.string.label(), "XYZ");
  EXPECT_EQ(id.sign(), 1);
}

TEST(PauliString, ProductMatchesDenseOracleExhaustively) {
  for (std::size_t n = 1; n <= 2; ++n) {
    for (const auto& a : all_strings(n)) {
      for (const auto& b : all_strings(n)) {
        const SignedPauli ab = pauli_product(a, b);
        const oracle::Mat expected = oracle::pauli(a.label()) * oracle::pauli(b.label());
        const oracle::Mat got = ab.phase() * oracle::pauli(ab.string.label());
        EXPECT_LT((expected - got).norm(), 1e-14) << a.label() << " * " << b.label();
      }
    }
  }
}

TEST(PauliString, ProductIsAssociative) {
  const auto strings = all_strings(2);
  for (const auto& a : strings) {
    for (const auto& b : strings) {
      for (std::size_t k = 0; k < strings.size(); k += 5) {
        const auto& c = strings[k];
        const auto ab = pauli_product(a, b);
        const auto left = pauli_product(ab.string, c);
        const auto bc = pauli_product(b, c);
        const auto right = pauli_product(a, bc.string);
        EXPECT_EQ(left.string, right.string);
        EXPECT_EQ((ab.phase_exponent + left.phase_exponent) % 4,
                  (bc.phase_exponent + right.phase_exponent) % 4);
      }
    }
  }
}

TEST(PauliString, CommutationMatchesDenseCommutator) {
  for (const auto& a : all_strings(2)) {
    for (const auto& b : all_strings(2)) {
      const oracle::Mat ma = oracle::pauli(a.label());
      const oracle::Mat mb = oracle::pauli(b.label());
      EXPECT_EQ(commutes(a, b), (ma * mb - mb * ma).norm() < 1e-12)
          << a.label() << " " << b.label();
    }
  }
  EXPECT_FALSE(commutes(PauliString::from_label("XI"), PauliString::from_label("ZZ")));
}

TEST(PauliString, QubitWiseCommutation) {
  EXPECT_TRUE(qubit_wise_commutes(PauliString::from_label("IX"), PauliString::from_label("ZX")));
  EXPECT_FALSE(qubit_wise_commutes(PauliString::from_label("XX"), PauliString::from_label("ZZ")));
  EXPECT_TRUE(commutes(PauliString::from_label("XX"), PauliString::from_label("ZZ")));
  // QWC implies general commutation
  for (const auto& a : all_strings(2)) {
    for (const auto& b : all_strings(2)) {
      if (qubit_wise_commutes(a, b)) EXPECT_TRUE(commutes(a, b));
    }
  }
}

TEST(PauliString, WideStrings) {
  std::string label(64, 'I');
  label[0] = 'X';
  label[63] = 'Y';
  const auto p = PauliString::from_label(label);
  EXPECT_EQ(p.label(), label);
  EXPECT_EQ(p.weight(), 2u);
  EXPECT_EQ(p.y_count(), 1u);
  const auto sq = pauli_product(p, p);
  EXPECT_TRUE(sq.string.is_identity());
  EXPECT_EQ(sq.sign(), 1);
}

}  // namespace
}  // namespace vqhe
