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

#include <random>

#include "gtest/gtest.h"
#include "test_util.h"

using namespace hexmon;

TEST(pauli, string_round_trip) {
  const PauliOperator p = PauliOperator::from_string("-XIZY");
  EXPECT_EQ(p.num_qubits(), 4u);
  EXPECT_TRUE(p.negative());
  EXPECT_EQ(p.letter(0), 'X');
  EXPECT_EQ(p.letter(1), 'I');
  EXPECT_EQ(p.letter(2), 'Z');
  EXPECT_EQ(p.letter(3), 'Y');
  EXPECT_EQ(p.str(), "-X_ZY");
  EXPECT_EQ(PauliOperator::from_string("X_Z").str(), "+X_Z");
  EXPECT_EQ(p.weight(), 3u);
  EXPECT_EQ(p.support(), (std::vector<std::size_t>{0, 2, 3}));
}

TEST(pauli, from_string_rejects_garbage) {
  EXPECT_THROW(PauliOperator::from_string("XQ"), std::invalid_argument);
}

TEST(pauli, from_letters) {
  const std::vector<std::size_t> qubits{4, 1};
  const PauliOperator p = PauliOperator::from_letters(6, qubits, "YX");
  EXPECT_EQ(p.str(), "+_X__Y_");
  EXPECT_THROW(PauliOperator::from_letters(6, qubits, "Y"), std::invalid_argument);
}

TEST(pauli, anticommutation_single_qubit) {
  const auto x = PauliOperator::from_string("X");
  const auto y = PauliOperator::from_string("Y");
  const auto z = PauliOperator::from_string("Z");
  EXPECT_TRUE(anticommutes(x, y));
  EXPECT_TRUE(anticommutes(y, z));
  EXPECT_TRUE(anticommutes(z, x));
  EXPECT_FALSE(anticommutes(x, x));
  EXPECT_FALSE(anticommutes(PauliOperator::from_string("XX"), PauliOperator::from_string("ZZ")));
}

TEST(pauli, multiply_single_qubit_table) {
  auto prod = multiply(PauliOperator::from_string("X"), PauliOperator::from_string("Y"));
  EXPECT_EQ(prod.op.str(), "+Z");
  EXPECT_TRUE(prod.imaginary);
  prod = multiply(PauliOperator::from_string("Y"), PauliOperator::from_string("X"));
  EXPECT_EQ(prod.op.str(), "-Z");
  EXPECT_TRUE(prod.imaginary);
  prod = multiply(PauliOperator::from_string("Z"), PauliOperator::from_string("Z"));
  EXPECT_EQ(prod.op.str(), "+_");
  EXPECT_FALSE(prod.imaginary);
  EXPECT_EQ(multiply_hermitian(PauliOperator::from_string("XX"), PauliOperator::from_string("ZZ")).str(), "-YY");
  EXPECT_THROW(multiply_hermitian(PauliOperator::from_string("X"), PauliOperator::from_string("Z")), PhaseError);
}

TEST(pauli, multiply_matches_matrix_product) {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const PauliOperator a = test_util::random_pauli(n, gen);
    const PauliOperator b = test_util::random_pauli(n, gen);
    const PauliProduct prod = multiply(a, b);
    Eigen::MatrixXcd expected = test_util::kron_pauli(a) * test_util::kron_pauli(b);
    Eigen::MatrixXcd got = test_util::kron_pauli(prod.op);
    if (prod.imaginary) {
      got *= std::complex<double>(0, 1);
    }
    ASSERT_LT((expected - got).cwiseAbs().maxCoeff(), 1e-12) << a.str() << " * " << b.str();
    const Eigen::MatrixXcd ab = test_util::kron_pauli(a) * test_util::kron_pauli(b);
    const Eigen::MatrixXcd ba = test_util::kron_pauli(b) * test_util::kron_pauli(a);
    ASSERT_EQ(anticommutes(a, b), (ab + ba).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST(pauli, multiply_across_word_boundaries) {
  // Phase counters must accumulate correctly over several 64-bit words.
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 200;
    const PauliOperator a = test_util::random_pauli(n, gen);
    const PauliOperator b = test_util::random_pauli(n, gen);
    const PauliProduct prod = multiply(a, b);
    // Reference: accumulate single-qubit phases one letter at a time.
    int log_i = 0;
    for (std::size_t q = 0; q < n; ++q) {
      PauliOperator aq(1);
      PauliOperator bq(1);
      aq.set_letter(0, a.letter(q));
      bq.set_letter(0, b.letter(q));
      const PauliProduct one = multiply(aq, bq);
      ASSERT_EQ(prod.op.letter(q), one.op.letter(0));
      log_i += (one.op.negative() ? 2 : 0) + (one.imaginary ? 1 : 0);
    }
    log_i += (a.negative() ? 2 : 0) + (b.negative() ? 2 : 0);
    const int got = (prod.op.negative() ? 2 : 0) + (prod.imaginary ? 1 : 0);
    ASSERT_EQ(((log_i % 4) + 4) % 4, got);
  }
}

TEST(pauli, bit_vector_ops) {
  BitVector v(130);
  v.set(0, true);
  v.set(64, true);
  v.set(129, true);
  EXPECT_EQ(v.popcount(), 3u);
  EXPECT_EQ(v.ones(), (std::vector<std::size_t>{0, 64, 129}));
  v.flip(64);
  EXPECT_FALSE(v.get(64));
  BitVector w(130);
  w.set(129, true);
  v ^= w;
  EXPECT_EQ(v.ones(), (std::vector<std::size_t>{0}));
  EXPECT_TRUE(v.any());
  EXPECT_EQ((~BitVector(3)).popcount(), 3u);
}
