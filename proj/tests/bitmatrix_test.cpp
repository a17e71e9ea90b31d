// Copyright 2026 The gf2perm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gf2perm/bitmatrix.hpp"

#include <gtest/gtest.h>

#include <random>

namespace gf2perm {
namespace {

BitMatrix random_matrix(std::mt19937_64& rng, unsigned rows, unsigned cols) {
  BitMatrix m(rows, cols);
  for (unsigned i = 0; i < rows; ++i) {
    for (unsigned j = 0; j < cols; ++j) m.set(i, j, rng() & 1);
  }
  return m;
}

TEST(BitMatrix, IdentityHasFullRankAndTrivialKernel) {
  const BitMatrix id = BitMatrix::identity(7);
  EXPECT_EQ(id.rank(), 7u);
  EXPECT_TRUE(id.kernel().empty());
  EXPECT_EQ(id.apply(0b1011001), 0b1011001u);
}

TEST(BitMatrix, FromColumnsPlacesColumns) {
  const std::uint64_t cols[] = {0b01, 0b11, 0b10};
  const BitMatrix m = BitMatrix::from_columns(2, cols);
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m.cols(), 3u);
  EXPECT_EQ(m.column(1), 0b11u);
  EXPECT_EQ(m.apply(0b101), 0b11u);
}

TEST(BitMatrix, RankNullityOnRandomMatrices) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const unsigned r = 1 + rng() % 20;
    const unsigned c = 1 + rng() % 20;
    const BitMatrix m = random_matrix(rng, r, c);
    const auto ker = m.kernel();
    EXPECT_EQ(m.rank() + ker.size(), c);
    EXPECT_EQ(m.image().size(), m.rank());
    for (std::uint64_t v : ker) {
      EXPECT_NE(v, 0u);
      EXPECT_EQ(m.apply(v), 0u);
    }
    EXPECT_EQ(m.transpose().rank(), m.rank());
    EXPECT_EQ(m.transpose().transpose(), m);
  }
}

TEST(BitMatrix, InverseOfInvertible) {
  std::mt19937_64 rng(11);
  int inverted = 0;
  for (int t = 0; t < 100; ++t) {
    const BitMatrix m = random_matrix(rng, 12, 12);
    const auto inv = m.inverse();
    ASSERT_EQ(inv.has_value(), m.rank() == 12);
    if (inv) {
      ++inverted;
      EXPECT_EQ(*inv * m, BitMatrix::identity(12));
      EXPECT_EQ(m * *inv, BitMatrix::identity(12));
    }
  }
  EXPECT_GT(inverted, 0);
  EXPECT_FALSE(BitMatrix(3, 4).inverse().has_value());
}

TEST(BitMatrix, ProductMatchesApply) {
  std::mt19937_64 rng(3);
  const BitMatrix a = random_matrix(rng, 9, 13);
  const BitMatrix b = random_matrix(rng, 13, 5);
  for (std::uint64_t v = 0; v < 32; ++v) EXPECT_EQ((a * b).apply(v), a.apply(b.apply(v)));
  EXPECT_TRUE(BitMatrix(4, 4).is_zero());
}

}  // namespace
}  // namespace gf2perm
