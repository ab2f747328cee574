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

#include "hexmon/tableau.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "hexmon/dense_reference.h"
#include "test_util.h"

using namespace hexmon;

namespace {

void apply_random_gate(StabilizerState& s, DenseReference& d, std::mt19937_64& gen) {
  const std::size_t n = s.num_qubits();
  const std::size_t a = gen() % n;
  switch (gen() % (n > 1 ? 5 : 4)) {
    case 0:
      s.hadamard(a);
      d.hadamard(a);
      break;
    case 1:
      s.phase(a);
      d.phase(a);
      break;
    case 2:
      s.phase_dagger(a);
      d.phase_dagger(a);
      break;
    case 3:
      s.pauli_x(a);
      d.pauli_x(a);
      break;
    default: {
      std::size_t b = gen() % (n - 1);
      b += b >= a;
      s.cnot(a, b);
      d.cnot(a, b);
    }
  }
}

void expect_same_state(const StabilizerState& s, const DenseReference& d) {
  ASSERT_EQ(s.check_invariants(), std::nullopt);
  for (const PauliOperator& g : s.generators()) {
    ASSERT_NEAR(d.expectation(g), 1.0, 1e-9) << g.str();
  }
  ASSERT_NEAR(d.entropy_bits(), static_cast<double>(s.entropy_bits()), 1e-9);
}

}  // namespace

TEST(tableau, basis_and_mixed_states) {
  const StabilizerState zero = StabilizerState::computational_basis_state(3);
  EXPECT_TRUE(zero.is_pure());
  EXPECT_EQ(zero.generator(1).str(), "+_Z_");
  const StabilizerState mixed = StabilizerState::maximally_mixed(3);
  EXPECT_EQ(mixed.num_generators(), 0u);
  EXPECT_EQ(mixed.num_logical_pairs(), 3u);
  EXPECT_EQ(mixed.entropy_bits(), 3u);
}

TEST(tableau, gate_conjugation_matches_dense) {
  // Every single- and two-qubit gate, applied to every two-qubit Pauli generator.
  const char* letters = "IXYZ";
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      if (a == 0 && b == 0) {
        continue;
      }
      for (int gate = 0; gate < 6; ++gate) {
        for (const bool negative : {false, true}) {
          PauliOperator p(2);
          p.set_letter(0, letters[a]);
          p.set_letter(1, letters[b]);
          p.set_negative(negative);
          const std::vector<PauliOperator> gens{p};
          StabilizerState s = StabilizerState::from_generators(2, gens);
          DenseReference d = DenseReference::from_generators(2, gens);
          switch (gate) {
            case 0: s.hadamard(0); d.hadamard(0); break;
            case 1: s.phase(1); d.phase(1); break;
            case 2: s.phase_dagger(0); d.phase_dagger(0); break;
            case 3: s.cnot(0, 1); d.cnot(0, 1); break;
            case 4: s.cnot(1, 0); d.cnot(1, 0); break;
            default: s.pauli_x(1); d.pauli_x(1);
          }
          ASSERT_EQ(s.num_generators(), 1u);
          ASSERT_NEAR(d.expectation(s.generator(0)), 1.0, 1e-12) << p.str() << " gate " << gate;
        }
      }
    }
  }
}

TEST(tableau, random_sequences_match_dense_reference) {
  std::mt19937_64 gen(2024);
  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const bool start_mixed = trial % 3 == 0;
    StabilizerState s = start_mixed ? StabilizerState::maximally_mixed(n) : StabilizerState::computational_basis_state(n);
    DenseReference d = start_mixed ? DenseReference::maximally_mixed(n) : DenseReference::computational_basis_state(n);
    for (int step = 0; step < 40; ++step) {
      if (gen() % 2) {
        apply_random_gate(s, d, gen);
      } else {
        const PauliOperator op = test_util::random_pauli(n, gen, false);
        const double e = d.expectation(op);
        const MeasurementResult r = s.measure(op, rng);
        if (r.deterministic) {
          ASSERT_EQ(r.which, MeasurementCase::kInGroup);
          ASSERT_NEAR(e, r.value, 1e-9) << op.str();
        } else {
          ASSERT_NEAR(e, 0.0, 1e-9) << op.str();
          ASSERT_NEAR(d.project(op, r.value), 0.5, 1e-9);
        }
      }
      expect_same_state(s, d);
      if (::testing::Test::HasFatalFailure()) {
        return;
      }
    }
    ASSERT_LT(d.distance(DenseReference::from_generators(n, s.generators())), 1e-9);
  }
}

TEST(tableau, measurement_cases) {
  Rng rng(1);
  StabilizerState s = StabilizerState::maximally_mixed(2);
  EXPECT_EQ(s.measure(PauliOperator::from_string("ZZ"), rng).which, MeasurementCase::kIndependent);
  EXPECT_EQ(s.entropy_bits(), 1u);
  EXPECT_EQ(s.measure(PauliOperator::from_string("XX"), rng).which, MeasurementCase::kIndependent);
  EXPECT_TRUE(s.is_pure());
  const MeasurementResult yy = s.measure(PauliOperator::from_string("YY"), rng);
  EXPECT_EQ(yy.which, MeasurementCase::kInGroup);
  EXPECT_TRUE(yy.deterministic);
  EXPECT_EQ(s.measure(PauliOperator::from_string("ZI"), rng).which, MeasurementCase::kAnticommuting);
}

TEST(tableau, in_group_sign_is_resolved) {
  Rng rng(1);
  StabilizerState s = StabilizerState::computational_basis_state(2);
  s.hadamard(0);
  s.cnot(0, 1);
  // Bell state |00> + |11>: XX = +1, ZZ = +1, YY = -1.
  EXPECT_EQ(s.measure(PauliOperator::from_string("XX"), rng).value, 1);
  EXPECT_EQ(s.measure(PauliOperator::from_string("ZZ"), rng).value, 1);
  EXPECT_EQ(s.measure(PauliOperator::from_string("YY"), rng).value, -1);
  EXPECT_EQ(s.measure(PauliOperator::from_string("-YY"), rng).value, 1);
  const MeasurementResult unresolved = s.measure(PauliOperator::from_string("YY"), rng, {.resolve_sign = false});
  EXPECT_TRUE(unresolved.deterministic);
  EXPECT_EQ(unresolved.value, 0);
}

TEST(tableau, forced_outcomes) {
  Rng rng(5);
  StabilizerState s = StabilizerState::computational_basis_state(3);
  const std::uint64_t before = rng.blocks_consumed();
  EXPECT_EQ(s.measure(PauliOperator::from_string("XII"), rng, {.forced = -1}).value, -1);
  EXPECT_EQ(s.measure(PauliOperator::from_string("XII"), rng).value, -1);
  EXPECT_EQ(rng.blocks_consumed(), before);
  EXPECT_THROW(s.measure(PauliOperator::from_string("XII"), rng, {.forced = 1}), PostselectionError);
  StabilizerState m = StabilizerState::maximally_mixed(2);
  EXPECT_EQ(m.measure(PauliOperator::from_string("ZZ"), rng, {.forced = -1}).value, -1);
  EXPECT_EQ(m.generator(0).str(), "-ZZ");
}

TEST(tableau, from_generators_validation) {
  const std::vector<PauliOperator> anti{PauliOperator::from_string("XI"), PauliOperator::from_string("ZI")};
  EXPECT_THROW(StabilizerState::from_generators(2, anti), std::invalid_argument);
  const std::vector<PauliOperator> conflict{PauliOperator::from_string("ZZ"), PauliOperator::from_string("ZI"),
                                            PauliOperator::from_string("-IZ")};
  EXPECT_THROW(StabilizerState::from_generators(2, conflict), std::invalid_argument);
  const std::vector<PauliOperator> dependent{PauliOperator::from_string("ZZ"), PauliOperator::from_string("ZI"),
                                             PauliOperator::from_string("IZ")};
  EXPECT_EQ(StabilizerState::from_generators(2, dependent).num_generators(), 2u);
}

TEST(tableau, subsystem_entropy_matches_dense) {
  std::mt19937_64 gen(99);
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 7;
    StabilizerState s = StabilizerState::computational_basis_state(n);
    DenseReference d = DenseReference::computational_basis_state(n);
    for (int step = 0; step < 30; ++step) {
      apply_random_gate(s, d, gen);
    }
    for (int r = 0; r < 10; ++r) {
      BitVector region(n);
      for (std::size_t q = 0; q < n; ++q) {
        region.set(q, gen() & 1);
      }
      ASSERT_NEAR(d.entropy_bits(region), static_cast<double>(s.subsystem_entropy_bits(region)), 1e-8);
    }
  }
  EXPECT_THROW(StabilizerState::maximally_mixed(2).subsystem_entropy_bits(BitVector(2)), UnsupportedStateError);
}

TEST(tableau, prefix_entropies_match_rank_formula) {
  std::mt19937_64 gen(5);
  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 20 + 9 * trial;
    StabilizerState s = StabilizerState::computational_basis_state(n);
    for (int step = 0; step < 400; ++step) {
      s.measure(test_util::random_pauli(n, gen, false), rng);
    }
    const std::vector<std::size_t> prefix = s.prefix_entropies_bits();
    ASSERT_EQ(prefix.size(), n + 1);
    const BitMatrix m = s.generator_matrix();
    for (std::size_t x = 0; x <= n; ++x) {
      // Independent formula: rank of the generators restricted to [0, x), minus x.
      BitMatrix restricted(m.rows(), 2 * x);
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t q = 0; q < x; ++q) {
          restricted.set(r, q, m.get(r, q));
          restricted.set(r, x + q, m.get(r, n + q));
        }
      }
      ASSERT_EQ(prefix[x], rank(restricted) - x) << "n=" << n << " x=" << x;
    }
  }
}

TEST(tableau, canonical_generators_identify_states) {
  const std::vector<PauliOperator> a{PauliOperator::from_string("XX"), PauliOperator::from_string("ZZ")};
  const std::vector<PauliOperator> b{PauliOperator::from_string("-YY"), PauliOperator::from_string("XX")};
  const std::vector<PauliOperator> c{PauliOperator::from_string("YY"), PauliOperator::from_string("XX")};
  const auto ca = StabilizerState::from_generators(2, a).canonical_generators();
  EXPECT_EQ(ca, StabilizerState::from_generators(2, b).canonical_generators());
  EXPECT_NE(ca, StabilizerState::from_generators(2, c).canonical_generators());
}

TEST(tableau, stabilizers_within_region) {
  StabilizerState s = StabilizerState::computational_basis_state(4);
  s.hadamard(0);
  s.cnot(0, 1);
  s.hadamard(2);
  s.cnot(2, 3);
  s.cnot(1, 2);
  const BitVector first_two = test_util::mask_from_string("1100");
  const auto inside = s.stabilizers_within(first_two);
  ASSERT_EQ(inside.size(), 1u);
  EXPECT_EQ(inside[0].str(), "+ZZ__");
  EXPECT_EQ(s.subsystem_entropy_bits(first_two), 1u);
}

TEST(tableau, dump_lists_generators) {
  StabilizerState s = StabilizerState::computational_basis_state(2);
  s.hadamard(1);
  EXPECT_EQ(s.dump(), "+Z_\n+_X\n");
}
