// Copyright 2026 The hexmon Authors
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

#include "hexmon/bit_matrix.h"

#include <random>
#include <algorithm>
#include <numeric>
#include <set>

#include "gtest/gtest.h"

using namespace hexmon;

namespace {

BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& gen, double density = 0.5) {
  std::bernoulli_distribution bit(density);
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m.set(r, c, bit(gen));
    }
  }
  return m;
}

// Rank by enumerating the whole row span: |span| = 2^rank.
std::size_t brute_force_rank(const BitMatrix& m) {
  std::set<std::vector<std::uint64_t>> span;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << m.rows()); ++subset) {
    BitVector acc(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if ((subset >> r) & 1) {
        acc ^= m.row(r);
      }
    }
    span.insert(std::vector<std::uint64_t>(acc.words().begin(), acc.words().end()));
  }
  std::size_t rank = 0;
  while ((std::size_t{1} << rank) < span.size()) {
    ++rank;
  }
  return rank;
}

}  // namespace

TEST(bit_matrix, rank_matches_span_enumeration) {
  std::mt19937_64 gen(1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + gen() % 10;
    const std::size_t cols = 1 + gen() % 80;
    const BitMatrix m = random_matrix(rows, cols, gen, trial % 2 ? 0.5 : 0.15);
    ASSERT_EQ(rank(m), brute_force_rank(m));
  }
}

TEST(bit_matrix, rank_leaves_argument_untouched) {
  std::mt19937_64 gen(2);
  const BitMatrix m = random_matrix(8, 70, gen);
  const BitMatrix copy = m;
  rank(m);
  EXPECT_EQ(m, copy);
}

TEST(bit_matrix, identity_and_row_reduce) {
  BitMatrix id = BitMatrix::identity(70);
  EXPECT_EQ(rank(id), 70u);
  BitMatrix m(3, 4);
  m.set(0, 1, true);
  m.set(1, 1, true);
  m.set(1, 3, true);
  m.set(2, 3, true);
  EXPECT_EQ(row_reduce(m), 2u);
  EXPECT_TRUE(m.get(0, 1));
  EXPECT_FALSE(m.get(1, 1));
  EXPECT_FALSE(m.row(2).any());
}

TEST(bit_matrix, in_span_witness_is_exhaustively_correct) {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + gen() % 6;
    const std::size_t cols = 1 + gen() % 7;
    const BitMatrix m = random_matrix(rows, cols, gen);
    std::set<std::uint64_t> span;
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << rows); ++subset) {
      BitVector acc(cols);
      for (std::size_t r = 0; r < rows; ++r) {
        if ((subset >> r) & 1) {
          acc ^= m.row(r);
        }
      }
      span.insert(acc.words()[0]);
    }
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << cols); ++v) {
      BitVector target(cols);
      target.words()[0] = v;
      const auto witness = in_span(m, target);
      ASSERT_EQ(witness.has_value(), span.count(v) > 0);
      if (witness) {
        BitVector acc(cols);
        for (std::size_t i = 1; i < witness->size(); ++i) {
          ASSERT_LT((*witness)[i - 1], (*witness)[i]);
        }
        for (const std::size_t r : *witness) {
          acc ^= m.row(r);
        }
        ASSERT_EQ(acc, target);
      }
    }
  }
  EXPECT_THROW(in_span(BitMatrix(2, 3), BitVector(4)), DimensionError);
}

TEST(bit_matrix, echelon_by_column_order_respects_priority) {
  std::mt19937_64 gen(4);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t rows = 2 + gen() % 8;
    const std::size_t cols = 2 + gen() % 20;
    BitMatrix m = random_matrix(rows, cols, gen);
    const std::size_t expected_rank = rank(m);
    std::vector<std::size_t> order(cols);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), gen);
    const auto pivots = echelon_by_column_order(m, order);
    ASSERT_EQ(pivots.size(), expected_rank);
    std::vector<std::size_t> position(cols);
    for (std::size_t k = 0; k < cols; ++k) {
      position[order[k]] = k;
    }
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      ASSERT_TRUE(m.get(r, pivots[r]));
      for (std::size_t c = 0; c < cols; ++c) {
        if (position[c] < position[pivots[r]]) {
          ASSERT_FALSE(m.get(r, c));
        }
      }
    }
    for (std::size_t r = pivots.size(); r < rows; ++r) {
      ASSERT_FALSE(m.row(r).any());
    }
  }
}
