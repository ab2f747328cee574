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

#ifndef HEXMON_BIT_MATRIX_H
#define HEXMON_BIT_MATRIX_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hexmon/pauli.h"

namespace hexmon {

/// Dense GF(2) matrix with rows packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(words_for_bits(cols)), data_(rows * stride_, 0) {}

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(std::span<const BitVector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  bool get(std::size_t r, std::size_t c) const { return (row_words(r)[c / kWordBits] >> (c % kWordBits)) & 1u; }
  void set(std::size_t r, std::size_t c, bool value);

  std::uint64_t* row_words(std::size_t r) { return data_.data() + r * stride_; }
  const std::uint64_t* row_words(std::size_t r) const { return data_.data() + r * stride_; }

  BitVector row(std::size_t r) const;
  void set_row(std::size_t r, const BitVector& v);
  /// row(dst) ^= row(src)
  void xor_row(std::size_t dst, std::size_t src);
  void swap_rows(std::size_t a, std::size_t b);
  void append_row(const BitVector& v);

  bool operator==(const BitMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> data_;
};

/// GF(2) rank. The argument is taken by value; the caller's matrix is untouched.
std::size_t rank(BitMatrix m);

/// Reduces m in place to row echelon form, pivoting on the first nonzero column
/// scanning left to right. Returns the rank; rows [0, rank) hold the pivots.
std::size_t row_reduce(BitMatrix& m);

/// If v is a GF(2) combination of the rows of m, returns the ascending list of
/// row indices whose XOR equals v. Throws DimensionError if v.size() != m.cols().
std::optional<std::vector<std::size_t>> in_span(const BitMatrix& m, const BitVector& v);

/// Echelon form with respect to an arbitrary column priority: columns are visited
/// in `column_order`, and each row that receives a pivot has no set bits in
/// columns visited earlier. Returns the pivot column for each pivot row found,
/// in discovery order. m is modified in place.
std::vector<std::size_t> echelon_by_column_order(BitMatrix& m, std::span<const std::size_t> column_order);

}  // namespace hexmon

#endif  // HEXMON_BIT_MATRIX_H
