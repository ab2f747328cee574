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

#include <algorithm>
#include <string>

namespace hexmon {

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.set(i, i, true);
  }
  return m;
}

BitMatrix BitMatrix::from_rows(std::span<const BitVector> rows, std::size_t cols) {
  BitMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    m.set_row(r, rows[r]);
  }
  return m;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
  std::uint64_t& word = row_words(r)[c / kWordBits];
  word = value ? (word | mask) : (word & ~mask);
}

BitVector BitMatrix::row(std::size_t r) const {
  BitVector v(cols_);
  std::copy_n(row_words(r), stride_, v.words().begin());
  return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
  if (v.size() != cols_) {
    throw DimensionError("set_row: vector has " + std::to_string(v.size()) + " bits, matrix has " +
                         std::to_string(cols_) + " columns");
  }
  std::copy(v.words().begin(), v.words().end(), row_words(r));
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src) {
  std::uint64_t* d = row_words(dst);
  const std::uint64_t* s = row_words(src);
  for (std::size_t w = 0; w < stride_; ++w) {
    d[w] ^= s[w];
  }
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a != b) {
    std::swap_ranges(row_words(a), row_words(a) + stride_, row_words(b));
  }
}

void BitMatrix::append_row(const BitVector& v) {
  if (v.size() != cols_) {
    throw DimensionError("append_row: vector has " + std::to_string(v.size()) + " bits, matrix has " +
                         std::to_string(cols_) + " columns");
  }
  data_.insert(data_.end(), v.words().begin(), v.words().end());
  ++rows_;
}

std::size_t row_reduce(BitMatrix& m) {
  std::size_t pivot_row = 0;
  for (std::size_t w = 0; w < m.stride() && pivot_row < m.rows(); ++w) {
    for (std::size_t bit = 0; bit < kWordBits && pivot_row < m.rows(); ++bit) {
      const std::uint64_t mask = std::uint64_t{1} << bit;
      std::size_t found = m.rows();
      for (std::size_t r = pivot_row; r < m.rows(); ++r) {
        if (m.row_words(r)[w] & mask) {
          found = r;
          break;
        }
      }
      if (found == m.rows()) {
        continue;
      }
      m.swap_rows(pivot_row, found);
      const std::uint64_t* p = m.row_words(pivot_row);
      for (std::size_t r = pivot_row + 1; r < m.rows(); ++r) {
        std::uint64_t* row = m.row_words(r);
        if (row[w] & mask) {
          for (std::size_t k = w; k < m.stride(); ++k) {
            row[k] ^= p[k];
          }
        }
      }
      ++pivot_row;
    }
  }
  return pivot_row;
}

std::size_t rank(BitMatrix m) { return row_reduce(m); }

std::optional<std::vector<std::size_t>> in_span(const BitMatrix& m, const BitVector& v) {
  if (v.size() != m.cols()) {
    throw DimensionError("in_span: vector has " + std::to_string(v.size()) + " bits, matrix has " +
                         std::to_string(m.cols()) + " columns");
  }
  // Eliminate on [m | history] so every reduced row remembers which original rows it combines.
  const std::size_t rows = m.rows();
  const std::size_t data_words = m.stride();
  const std::size_t hist_words = words_for_bits(rows);
  const std::size_t stride = data_words + hist_words;
  std::vector<std::uint64_t> work(rows * stride, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    std::copy_n(m.row_words(r), data_words, work.data() + r * stride);
    work[r * stride + data_words + r / kWordBits] |= std::uint64_t{1} << (r % kWordBits);
  }
  std::vector<std::uint64_t> target(stride, 0);
  std::copy(v.words().begin(), v.words().end(), target.begin());

  std::size_t pivot_row = 0;
  for (std::size_t w = 0; w < data_words; ++w) {
    for (std::size_t bit = 0; bit < kWordBits; ++bit) {
      const std::uint64_t mask = std::uint64_t{1} << bit;
      std::size_t found = rows;
      for (std::size_t r = pivot_row; r < rows; ++r) {
        if (work[r * stride + w] & mask) {
          found = r;
          break;
        }
      }
      if (found == rows) {
        if (target[w] & mask) {
          // Column with no pivot remains set in the target: not in the span.
          return std::nullopt;
        }
        continue;
      }
      if (found != pivot_row) {
        std::swap_ranges(work.begin() + static_cast<std::ptrdiff_t>(found * stride),
                         work.begin() + static_cast<std::ptrdiff_t>((found + 1) * stride),
                         work.begin() + static_cast<std::ptrdiff_t>(pivot_row * stride));
      }
      const std::uint64_t* p = work.data() + pivot_row * stride;
      for (std::size_t r = pivot_row + 1; r < rows; ++r) {
        std::uint64_t* row = work.data() + r * stride;
        if (row[w] & mask) {
          for (std::size_t k = w; k < stride; ++k) {
            row[k] ^= p[k];
          }
        }
      }
      if (target[w] & mask) {
        for (std::size_t k = w; k < stride; ++k) {
          target[k] ^= p[k];
        }
      }
      ++pivot_row;
    }
  }
  std::vector<std::size_t> witness;
  for (std::size_t r = 0; r < rows; ++r) {
    if ((target[data_words + r / kWordBits] >> (r % kWordBits)) & 1u) {
      witness.push_back(r);
    }
  }
  return witness;
}

std::vector<std::size_t> echelon_by_column_order(BitMatrix& m, std::span<const std::size_t> column_order) {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (const std::size_t c : column_order) {
    if (pivot_row == m.rows()) {
      break;
    }
    if (c >= m.cols()) {
      throw DimensionError("echelon_by_column_order: column " + std::to_string(c) + " out of range");
    }
    const std::size_t w = c / kWordBits;
    const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
    std::size_t found = m.rows();
    for (std::size_t r = pivot_row; r < m.rows(); ++r) {
      if (m.row_words(r)[w] & mask) {
        found = r;
        break;
      }
    }
    if (found == m.rows()) {
      continue;
    }
    m.swap_rows(pivot_row, found);
    for (std::size_t r = pivot_row + 1; r < m.rows(); ++r) {
      if (m.row_words(r)[w] & mask) {
        m.xor_row(r, pivot_row);
      }
    }
    pivots.push_back(c);
    ++pivot_row;
  }
  return pivots;
}

}  // namespace hexmon
