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

#ifndef HEXMON_RNG_H
#define HEXMON_RNG_H

#include <array>
#include <cstdint>

namespace hexmon {

/// Philox4x32-10 block function.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter, std::array<std::uint32_t, 2> key);

/// SplitMix64 finalizer, used to spread user seeds over the Philox key space.
std::uint64_t mix64(std::uint64_t x);

/// Counter-based random stream. A stream is fully determined by (seed, domain_a,
/// domain_b); the two domain words separate e.g. parameter points and samples.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint32_t domain_a = 0, std::uint32_t domain_b = 0);

  std::uint64_t next_u64();
  /// One bit; consumes bits from a 64-bit buffer so each call costs one bit of stream.
  bool next_bit();
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();
  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);

  std::uint64_t blocks_consumed() const { return block_; }

 private:
  void refill();

  std::array<std::uint32_t, 2> key_{};
  std::uint32_t domain_a_;
  std::uint32_t domain_b_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  unsigned buffered_words_ = 0;
  std::uint64_t bit_buffer_ = 0;
  unsigned bits_left_ = 0;
};

}  // namespace hexmon

#endif  // HEXMON_RNG_H
