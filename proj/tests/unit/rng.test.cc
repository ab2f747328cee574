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

#include "hexmon/rng.h"

#include <cmath>
#include <set>
#include <vector>

#include "gtest/gtest.h"

using namespace hexmon;

TEST(rng, philox_known_answers) {
  using Block = std::array<std::uint32_t, 4>;
  EXPECT_EQ(philox4x32_10({0, 0, 0, 0}, {0, 0}), (Block{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u}));
  EXPECT_EQ(philox4x32_10({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}, {0xffffffffu, 0xffffffffu}),
            (Block{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu}));
  EXPECT_EQ(philox4x32_10({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}, {0xa4093822u, 0x299f31d0u}),
            (Block{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u}));
}

TEST(rng, streams_are_reproducible_and_distinct) {
  Rng a(5, 1, 2);
  Rng b(5, 1, 2);
  Rng c(5, 1, 3);
  Rng d(6, 1, 2);
  std::vector<std::uint64_t> va, vb, vc, vd;
  for (int i = 0; i < 16; ++i) {
    va.push_back(a.next_u64());
    vb.push_back(b.next_u64());
    vc.push_back(c.next_u64());
    vd.push_back(d.next_u64());
  }
  EXPECT_EQ(va, vb);
  EXPECT_NE(va, vc);
  EXPECT_NE(va, vd);
  EXPECT_EQ(a.blocks_consumed(), 8u);
}

TEST(rng, uniform_moments) {
  Rng rng(42);
  const int n = 200000;
  double sum = 0;
  double sum2 = 0;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
    sum2 += u * u;
  }
  // 6 sigma bands for mean 1/2 and second moment 1/3.
  EXPECT_NEAR(sum / n, 0.5, 6 * std::sqrt(1.0 / 12 / n));
  EXPECT_NEAR(sum2 / n, 1.0 / 3, 6 * std::sqrt(4.0 / 45 / n));
}

TEST(rng, below_is_unbiased) {
  Rng rng(3);
  const std::uint64_t k = 7;
  std::vector<int> counts(k, 0);
  const int n = 70000;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t v = rng.below(k);
    ASSERT_LT(v, k);
    ++counts[v];
  }
  // Pearson chi-square with 6 degrees of freedom; 22.46 is the 0.999 quantile.
  double chi2 = 0;
  for (const int c : counts) {
    chi2 += (c - n / 7.0) * (c - n / 7.0) / (n / 7.0);
  }
  EXPECT_LT(chi2, 22.46);
  EXPECT_THROW(rng.below(0), std::invalid_argument);
}

TEST(rng, bits_are_balanced) {
  Rng rng(9);
  int ones = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    ones += rng.next_bit();
  }
  EXPECT_NEAR(ones, n / 2, 6 * std::sqrt(n / 4.0));
}

TEST(rng, mix64_spreads_small_seeds) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    seen.insert(mix64(s));
  }
  EXPECT_EQ(seen.size(), 1000u);
}
