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

#include "hexmon/dense_reference.h"

#include <cmath>

#include "gtest/gtest.h"
#include "test_util.h"

using namespace hexmon;

TEST(dense_reference, pauli_matrix_matches_kronecker_oracle) {
  std::mt19937_64 gen(1);
  for (int trial = 0; trial < 50; ++trial) {
    const PauliOperator op = test_util::random_pauli(4, gen);
    EXPECT_LT((DenseReference::pauli_matrix(op) - test_util::kron_pauli(op)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(dense_reference, bell_pair) {
  DenseReference d = DenseReference::computational_basis_state(2);
  d.hadamard(0);
  d.cnot(0, 1);
  EXPECT_NEAR(d.expectation(PauliOperator::from_string("XX")), 1.0, 1e-12);
  EXPECT_NEAR(d.expectation(PauliOperator::from_string("-YY")), 1.0, 1e-12);
  EXPECT_NEAR(d.entropy_bits(test_util::mask_from_string("10")), 1.0, 1e-12);
  EXPECT_NEAR(d.entropy_bits(), 0.0, 1e-12);
  EXPECT_NEAR(d.project(PauliOperator::from_string("Z_"), -1), 0.5, 1e-12);
  EXPECT_NEAR(d.expectation(PauliOperator::from_string("_Z")), -1.0, 1e-12);
  EXPECT_THROW(d.project(PauliOperator::from_string("_Z"), 1), std::domain_error);
}

TEST(dense_reference, mixed_and_generator_states) {
  const DenseReference m = DenseReference::maximally_mixed(3);
  EXPECT_NEAR(m.entropy_bits(), 3.0, 1e-12);
  const std::vector<PauliOperator> gens = {PauliOperator::from_string("XX_"), PauliOperator::from_string("-ZZ_")};
  const DenseReference g = DenseReference::from_generators(3, gens);
  EXPECT_NEAR(g.entropy_bits(), 1.0, 1e-12);
  EXPECT_NEAR(g.expectation(PauliOperator::from_string("-YY_")), -1.0, 1e-12);
  EXPECT_NEAR(g.expectation(PauliOperator::from_string("-ZZ_")), 1.0, 1e-12);
}

TEST(dense_reference, gates_and_phase) {
  DenseReference d = DenseReference::computational_basis_state(1);
  d.hadamard(0);
  d.phase(0);
  EXPECT_NEAR(d.expectation(PauliOperator::from_string("Y")), 1.0, 1e-12);
  d.phase_dagger(0);
  EXPECT_NEAR(d.expectation(PauliOperator::from_string("X")), 1.0, 1e-12);
  d.hadamard(0);
  d.pauli_x(0);
  EXPECT_NEAR(d.expectation(PauliOperator::from_string("Z")), -1.0, 1e-12);
}
