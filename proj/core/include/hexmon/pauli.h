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

#ifndef HEXMON_PAULI_H
#define HEXMON_PAULI_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hexmon {

/// Raised when two objects that must agree on a qubit or column count do not.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a Pauli product that must be Hermitian picked up a factor of +-i.
class PhaseError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for_bits(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Fixed-length packed bit string. Bits past size() are always zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t num_bits) : size_(num_bits), words_(words_for_bits(num_bits), 0) {}

  std::size_t size() const { return size_; }
  std::size_t num_words() const { return words_.size(); }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  void set(std::size_t i, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits); }

  std::span<std::uint64_t> words() { return words_; }
  std::span<const std::uint64_t> words() const { return words_; }

  bool any() const;
  std::size_t popcount() const;
  /// Indices of set bits, ascending.
  std::vector<std::size_t> ones() const;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  BitVector& operator|=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }
  /// Complement within size().
  BitVector operator~() const;

  bool operator==(const BitVector& other) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Hermitian Pauli operator on n qubits: sign * (x) sigma(x_j, z_j), with the
/// qubit encoding I=(0,0), X=(1,0), Z=(0,1), Y=(1,1).
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(std::size_t num_qubits) : xs_(num_qubits), zs_(num_qubits) {}

  /// Parses strings such as "+XIZY", "-ZZ" or "X_Y" ('_' and 'I' are identity).
  static PauliOperator from_string(std::string_view text);
  /// Pauli with the given letter on each listed qubit and identity elsewhere.
  static PauliOperator from_letters(std::size_t num_qubits, std::span<const std::size_t> qubits,
                                    std::string_view letters);

  std::size_t num_qubits() const { return xs_.size(); }
  const BitVector& x_mask() const { return xs_; }
  const BitVector& z_mask() const { return zs_; }
  BitVector& x_mask() { return xs_; }
  BitVector& z_mask() { return zs_; }

  bool negative() const { return negative_; }
  int sign() const { return negative_ ? -1 : 1; }
  void set_negative(bool negative) { negative_ = negative; }
  void set_sign(int sign) { negative_ = sign < 0; }

  char letter(std::size_t qubit) const;
  void set_letter(std::size_t qubit, char letter);
  /// Qubits with a non-identity letter.
  std::vector<std::size_t> support() const;
  std::size_t weight() const;
  bool is_identity() const { return !xs_.any() && !zs_.any(); }

  std::string str() const;

  bool operator==(const PauliOperator& other) const = default;

 private:
  BitVector xs_;
  BitVector zs_;
  bool negative_ = false;
};

/// True iff the symplectic product of a and b is odd, i.e. {a, b} = 0.
bool anticommutes(const PauliOperator& a, const PauliOperator& b);

/// Product a*b. When `imaginary` is set the true product is i * op (op carries the
/// remaining real sign); callers that need a Hermitian result must reject it.
struct PauliProduct {
  PauliOperator op;
  bool imaginary = false;
};

PauliProduct multiply(const PauliOperator& a, const PauliOperator& b);

/// a*b for operands whose product is known to be Hermitian; throws PhaseError otherwise.
PauliOperator multiply_hermitian(const PauliOperator& a, const PauliOperator& b);

namespace detail {

/// In-place right multiplication (x1,z1) <- (x1,z1) * (x2,z2) over packed words.
/// Returns the exponent k (mod 4) of the phase i^k picked up by the letters.
inline unsigned mul_words_log_i(std::uint64_t* x1, std::uint64_t* z1, const std::uint64_t* x2,
                                const std::uint64_t* z2, std::size_t num_words) {
  // Per-bit mod-4 counters of +-i factors; cnt1 is the low bit, cnt2 the high bit.
  std::uint64_t cnt1 = 0;
  std::uint64_t cnt2 = 0;
  for (std::size_t w = 0; w < num_words; ++w) {
    const std::uint64_t old_x1 = x1[w];
    const std::uint64_t old_z1 = z1[w];
    const std::uint64_t new_x1 = old_x1 ^ x2[w];
    const std::uint64_t new_z1 = old_z1 ^ z2[w];
    x1[w] = new_x1;
    z1[w] = new_z1;
    const std::uint64_t x1z2 = old_x1 & z2[w];
    const std::uint64_t anti = (x2[w] & old_z1) ^ x1z2;
    // A factor of -i appears exactly where new_x1 ^ new_z1 ^ x1z2 is set.
    cnt2 ^= (cnt1 ^ new_x1 ^ new_z1 ^ x1z2) & anti;
    cnt1 ^= anti;
  }
  return (static_cast<unsigned>(std::popcount(cnt1)) + 2u * static_cast<unsigned>(std::popcount(cnt2))) & 3u;
}

/// Parity of the symplectic product over packed words.
inline bool anticommute_words(const std::uint64_t* x1, const std::uint64_t* z1, const std::uint64_t* x2,
                              const std::uint64_t* z2, std::size_t num_words) {
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < num_words; ++w) {
    acc ^= (x1[w] & z2[w]) ^ (z1[w] & x2[w]);
  }
  return std::popcount(acc) & 1;
}

}  // namespace detail

}  // namespace hexmon

#endif  // HEXMON_PAULI_H
