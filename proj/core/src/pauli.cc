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

#include "hexmon/pauli.h"

#include <sstream>

namespace hexmon {

bool BitVector::any() const {
  for (auto w : words_) {
    if (w) {
      return true;
    }
  }
  return false;
}

std::size_t BitVector::popcount() const {
  std::size_t total = 0;
  for (auto w : words_) {
    total += static_cast<std::size_t>(std::popcount(w));
  }
  return total;
}

std::vector<std::size_t> BitVector::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

namespace {

void require_same_size(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) {
    throw DimensionError("bit vector size mismatch: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
}

}  // namespace

BitVector& BitVector::operator^=(const BitVector& other) {
  require_same_size(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] ^= other.words_[w];
  }
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  require_same_size(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] &= other.words_[w];
  }
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  require_same_size(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] |= other.words_[w];
  }
  return *this;
}

BitVector BitVector::operator~() const {
  BitVector out(size_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    out.words_[w] = ~words_[w];
  }
  if (size_ % kWordBits != 0 && !out.words_.empty()) {
    out.words_.back() &= (std::uint64_t{1} << (size_ % kWordBits)) - 1;
  }
  return out;
}

PauliOperator PauliOperator::from_string(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  PauliOperator op(text.size());
  for (std::size_t q = 0; q < text.size(); ++q) {
    op.set_letter(q, text[q]);
  }
  op.negative_ = negative;
  return op;
}

PauliOperator PauliOperator::from_letters(std::size_t num_qubits, std::span<const std::size_t> qubits,
                                          std::string_view letters) {
  if (qubits.size() != letters.size()) {
    throw DimensionError("from_letters: " + std::to_string(qubits.size()) + " qubits but " +
                         std::to_string(letters.size()) + " letters");
  }
  PauliOperator op(num_qubits);
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] >= num_qubits) {
      throw DimensionError("from_letters: qubit " + std::to_string(qubits[i]) + " out of range");
    }
    op.set_letter(qubits[i], letters[i]);
  }
  return op;
}

char PauliOperator::letter(std::size_t qubit) const {
  static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
  return kLetters[static_cast<int>(xs_.get(qubit)) | (static_cast<int>(zs_.get(qubit)) << 1)];
}

void PauliOperator::set_letter(std::size_t qubit, char letter) {
  switch (letter) {
    case 'I':
    case '_':
      xs_.set(qubit, false);
      zs_.set(qubit, false);
      break;
    case 'X':
      xs_.set(qubit, true);
      zs_.set(qubit, false);
      break;
    case 'Y':
      xs_.set(qubit, true);
      zs_.set(qubit, true);
      break;
    case 'Z':
      xs_.set(qubit, false);
      zs_.set(qubit, true);
      break;
    default:
      throw std::invalid_argument(std::string("unknown Pauli letter '") + letter + "'");
  }
}

std::vector<std::size_t> PauliOperator::support() const { return (xs_ | zs_).ones(); }

std::size_t PauliOperator::weight() const { return (xs_ | zs_).popcount(); }

std::string PauliOperator::str() const {
  std::string out;
  out.reserve(num_qubits() + 1);
  out.push_back(negative_ ? '-' : '+');
  for (std::size_t q = 0; q < num_qubits(); ++q) {
    const char c = letter(q);
    out.push_back(c == 'I' ? '_' : c);
  }
  return out;
}

bool anticommutes(const PauliOperator& a, const PauliOperator& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw DimensionError("anticommutes: operands act on " + std::to_string(a.num_qubits()) + " and " +
                         std::to_string(b.num_qubits()) + " qubits");
  }
  return detail::anticommute_words(a.x_mask().words().data(), a.z_mask().words().data(),
                                   b.x_mask().words().data(), b.z_mask().words().data(),
                                   a.x_mask().num_words());
}

PauliProduct multiply(const PauliOperator& a, const PauliOperator& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw DimensionError("multiply: operands act on " + std::to_string(a.num_qubits()) + " and " +
                         std::to_string(b.num_qubits()) + " qubits");
  }
  PauliProduct out{a, false};
  const unsigned log_i = detail::mul_words_log_i(out.op.x_mask().words().data(), out.op.z_mask().words().data(),
                                                 b.x_mask().words().data(), b.z_mask().words().data(),
                                                 b.x_mask().num_words());
  // Total phase: (-1)^(sa+sb) * i^log_i.
  bool negative = a.negative() != b.negative();
  if (log_i >= 2) {
    negative = !negative;
  }
  out.op.set_negative(negative);
  out.imaginary = (log_i & 1u) != 0;
  return out;
}

PauliOperator multiply_hermitian(const PauliOperator& a, const PauliOperator& b) {
  auto product = multiply(a, b);
  if (product.imaginary) {
    throw PhaseError("product " + a.str() + " * " + b.str() + " is not Hermitian");
  }
  return std::move(product.op);
}

}  // namespace hexmon
