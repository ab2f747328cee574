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

#include "hexmon/observables.h"

#include <cmath>

#include "gtest/gtest.h"

using namespace hexmon;

TEST(observables, product_state_is_unentangled) {
  const HoneycombLattice lattice = HoneycombLattice::build(8);
  const StabilizerState s = StabilizerState::computational_basis_state(lattice.num_qubits());
  for (const std::size_t v : entropy_arc(s, lattice)) {
    EXPECT_EQ(v, 0u);
  }
  EXPECT_EQ(tmi(s, lattice), 0);
  EXPECT_EQ(tee(s, lattice), 0);
}

TEST(observables, arc_matches_region_and_complement_entropy) {
  ProtocolConfig config;
  config.L = 8;
  config.probs = ProbabilityVector::isotropic(0.5);
  config.sweeps_total = 10;
  config.seed = 9;
  const HoneycombLattice lattice = HoneycombLattice::build(8);
  const Trajectory traj = evolve_to_steady_state(config);
  const auto arc = entropy_arc(traj.state, lattice);
  ASSERT_EQ(arc.size(), 9u);
  EXPECT_EQ(arc.front(), 0u);
  EXPECT_EQ(arc.back(), 0u);
  for (std::size_t l = 0; l <= 8; ++l) {
    EXPECT_EQ(arc[l], traj.state.subsystem_entropy_bits(cylinder_region(lattice, l).qubits)) << l;
    // Pure state: the complementary cylinder carries the same entropy.
    EXPECT_EQ(arc[l], traj.state.subsystem_entropy_bits(~cylinder_region(lattice, l).qubits)) << l;
  }
  EXPECT_GT(arc[4], 0u);
}

TEST(observables, arc_on_ancilla_register) {
  ProtocolConfig config;
  config.L = 4;
  config.probs = ProbabilityVector::isotropic(0.3);
  config.sweeps_total = 5;
  config.mode = CircuitMode::kAncilla;
  const Trajectory traj = evolve_to_steady_state(config);
  const HoneycombLattice lattice = HoneycombLattice::build(4);
  const auto arc = entropy_arc(traj.state, lattice);
  for (std::size_t l = 0; l <= 4; ++l) {
    const BitVector region = embed(cylinder_region(lattice, l).qubits, traj.state.num_qubits());
    EXPECT_EQ(arc[l], traj.state.subsystem_entropy_bits(region));
  }
}

TEST(observables, tmi_and_tee_match_region_entropies) {
  ProtocolConfig config;
  config.L = 12;
  config.probs = ProbabilityVector::isotropic(0.8);
  config.sweeps_total = 20;
  config.seed = 3;
  const HoneycombLattice lattice = HoneycombLattice::build(12);
  const Trajectory traj = evolve_to_steady_state(config);
  auto s = [&](const BitVector& r) { return static_cast<int>(traj.state.subsystem_entropy_bits(r)); };
  const auto t = tmi_regions(lattice);
  const BitVector &a = t[0].qubits, &b = t[1].qubits, &c = t[2].qubits;
  EXPECT_EQ(tmi(traj.state, lattice), s(a) + s(b) + s(c) - s(a | b) - s(b | c) - s(a | c) + s(a | b | c));
  const auto k = tee_regions(lattice);
  const BitVector &x = k[0].qubits, &y = k[1].qubits, &z = k[2].qubits;
  EXPECT_EQ(tee(traj.state, lattice), -(s(x) + s(y) + s(z) - s(x | y) - s(y | z) - s(x | z) + s(x | y | z)));
}

TEST(observables, purification_is_monotone) {
  ProtocolConfig config;
  config.L = 4;
  config.probs = ProbabilityVector::isotropic(0.4);
  config.sweeps_total = 30;
  const auto traj = purification_trajectory(config);
  ASSERT_EQ(traj.size(), 31u);
  EXPECT_EQ(traj[0], 17u);
  for (std::size_t t = 1; t < traj.size(); ++t) {
    EXPECT_LE(traj[t], traj[t - 1]);
  }
}

TEST(observables, average_columns) {
  const std::vector<std::vector<double>> rows = {{1, 4}, {3, 4}, {5, 4}};
  const auto avg = average_columns(rows);
  ASSERT_EQ(avg.size(), 2u);
  EXPECT_DOUBLE_EQ(avg[0].mean, 3.0);
  EXPECT_DOUBLE_EQ(avg[0].stderr, 2.0 / std::sqrt(3.0));
  EXPECT_DOUBLE_EQ(avg[1].stderr, 0.0);
  EXPECT_DOUBLE_EQ(avg[1].x, 1.0);
}
