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

#ifndef HEXMON_TESTS_TEST_UTIL_H
#define HEXMON_TESTS_TEST_UTIL_H

#include <complex>
#include <cstdint>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "hexmon/pauli.h"

namespace hexmon::test_util {

/// Pauli matrix built as an explicit Kronecker product, independent of the
/// library's bit-twiddling. Qubit 0 is the least significant tensor factor.
inline Eigen::MatrixXcd kron_pauli(const PauliOperator& op) {
  using C = std::complex<double>;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (std::size_t q = 0; q < op.num_qubits(); ++q) {
    Eigen::Matrix2cd m;
    switch (op.letter(q)) {
      case 'X':
        m << 0, 1, 1, 0;
        break;
      case 'Y':
        m << 0, C(0, -1), C(0, 1), 0;
        break;
      case 'Z':
        m << 1, 0, 0, -1;
        break;
      default:
        m << 1, 0, 0, 1;
    }
    Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        next.block(a * out.rows(), b * out.cols(), out.rows(), out.cols()) = m(a, b) * out;
      }
    }
    out = next;
  }
  return op.negative() ? Eigen::MatrixXcd(-out) : out;
}

inline PauliOperator random_pauli(std::size_t n, std::mt19937_64& gen, bool allow_identity = true) {
  static constexpr char kLetters[] = "IXYZ";
  while (true) {
    PauliOperator op(n);
    for (std::size_t q = 0; q < n; ++q) {
      op.set_letter(q, kLetters[gen() % 4]);
    }
    op.set_negative(gen() & 1);
    if (allow_identity || !op.is_identity()) {
      return op;
    }
  }
}

inline BitVector mask_from_string(const std::string& bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    v.set(i, bits[i] == '1');
  }
  return v;
}

}  // namespace hexmon::test_util

#endif  // HEXMON_TESTS_TEST_UTIL_H
