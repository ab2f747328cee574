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

#include <cmath>
#include <sstream>

#include "hexmon/dense_reference.h"
#include "hexmon/lattice.h"
#include "hexmon/runner.h"
#include "hexmon/special_functions.h"
#include "hexmon/tableau.h"

namespace hexmon {

namespace {

PauliOperator random_pauli(std::size_t n, Rng& rng) {
  static constexpr char kLetters[] = "IXYZ";
  while (true) {
    PauliOperator op(n);
    for (std::size_t q = 0; q < n; ++q) {
      op.set_letter(q, kLetters[rng.below(4)]);
    }
    op.set_negative(rng.next_bit());
    if (!op.is_identity()) {
      return op;
    }
  }
}

// Random gate and measurement sequences on pure and mixed starts, compared
// against the density-matrix simulator after every step.
CheckResult dense_equivalence() {
  CheckResult out{"dense_equivalence", true, ""};
  Rng rng(20260101);
  std::size_t steps = 0;
  for (std::size_t trial = 0; trial < 60 && out.passed; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const bool mixed = trial % 3 == 0;
    StabilizerState s = mixed ? StabilizerState::maximally_mixed(n) : StabilizerState::computational_basis_state(n);
    DenseReference d = mixed ? DenseReference::maximally_mixed(n) : DenseReference::computational_basis_state(n);
    for (int step = 0; step < 30 && out.passed; ++step, ++steps) {
      const std::size_t a = rng.below(n);
      const std::size_t b = (a + 1 + rng.below(n - 1)) % n;
      std::ostringstream what;
      switch (rng.below(5)) {
        case 0:
          s.hadamard(a);
          d.hadamard(a);
          break;
        case 1:
          s.phase(a);
          d.phase(a);
          break;
        case 2:
          s.cnot(a, b);
          d.cnot(a, b);
          break;
        default: {
          const PauliOperator op = random_pauli(n, rng);
          const MeasurementResult r = s.measure(op, rng);
          double prob = 0;
          try {
            prob = d.project(op, r.value);
          } catch (const std::domain_error&) {
            prob = 0;
          }
          const double expect = r.deterministic ? 1.0 : 0.5;
          if (std::abs(prob - expect) > 1e-9) {
            out.passed = false;
            what << "measuring " << op.str() << " gave " << r.value << " with dense probability " << prob
                 << ", expected " << expect;
            out.detail = what.str();
          }
        }
      }
      for (const auto& g : s.generators()) {
        if (out.passed && std::abs(d.expectation(g) - 1.0) > 1e-9) {
          out.passed = false;
          out.detail = "generator " + g.str() + " is not stabilized by the dense state";
        }
      }
      if (out.passed && std::abs(d.entropy_bits() - static_cast<double>(s.entropy_bits())) > 1e-9) {
        out.passed = false;
        out.detail = "entropy mismatch";
      }
    }
  }
  if (out.passed) {
    out.detail = "60 sequences, " + std::to_string(steps) + " steps on 2..6 qubits";
  }
  return out;
}

CheckResult modular_identity(const char* name, double (*f)(double)) {
  CheckResult out{name, true, ""};
  double worst = 0;
  for (int k = 0; k <= 200; ++k) {
    const double t = 0.05 * std::pow(400.0, k / 200.0);
    const double lhs = f(1.0 / t);
    const double rhs = std::sqrt(t) * f(t);
    worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
  }
  out.passed = worst <= 1e-10;
  std::ostringstream msg;
  msg << "max relative deviation " << worst << " on t in [0.05, 20] (tolerance 1e-10)";
  out.detail = msg.str();
  return out;
}

CheckResult lifshitz_symmetry() {
  CheckResult out{"lifshitz_symmetry", true, ""};
  double worst = 0;
  for (const double lambda : {0.5, 2.63, 3.8, 10.0}) {
    for (int k = 1; k < 50; ++k) {
      const double x = k / 100.0;
      worst = std::max(worst, std::abs(lifshitz_J(x, lambda) - lifshitz_J(1 - x, lambda)));
    }
  }
  out.passed = worst <= 1e-12;
  std::ostringstream msg;
  msg << "max |J(x) - J(1-x)| = " << worst;
  out.detail = msg.str();
  return out;
}

CheckResult plaquette_commutation(PlaquetteConvention convention) {
  CheckResult out{"plaquette_commutation", true, ""};
  const HoneycombLattice lat = HoneycombLattice::build(4, convention);
  const std::size_t nq = lat.plaquettes().size();
  for (std::size_t q = 0; q < nq && out.passed; ++q) {
    const PauliOperator v = plaquette_V(lat, q);
    for (std::size_t r = 0; r < nq; ++r) {
      if (anticommutes(v, plaquette_W(lat, r))) {
        out.passed = false;
        out.detail = "[V_" + std::to_string(q) + ", W_" + std::to_string(r) + "] != 0";
        break;
      }
    }
  }
  for (std::size_t r = 0; r < nq && out.passed; ++r) {
    for (const Bond& bond : lat.bonds()) {
      if (anticommutes(bond_check(lat, bond), plaquette_W(lat, r))) {
        out.passed = false;
        out.detail = "a bond check anticommutes with W_" + std::to_string(r);
        break;
      }
    }
  }
  if (out.passed) {
    out.detail = "V and K commute with every W at L=4";
  }
  return out;
}

CheckResult graph_shapes() {
  CheckResult out{"frustration_graph_shapes", true, ""};
  const HoneycombLattice lat = HoneycombLattice::build(6);
  std::ostringstream bad;
  const std::vector<OperatorType> bonds = {OperatorType::kKx, OperatorType::kKy, OperatorType::kKz};
  const FrustrationGraph kagome = frustration_graph(lat, bonds);
  for (const auto& adj : kagome.adjacency) {
    if (adj.size() != 4) {
      bad << "bond graph degree " << adj.size() << " != 4; ";
      break;
    }
  }
  if (kagome.num_edges() != 216 || kagome.is_bipartite()) {
    bad << "bond graph must have 216 edges and odd cycles; ";
  }
  const std::vector<OperatorType> chain_types = {OperatorType::kKz, OperatorType::kV};
  const FrustrationGraph chains = frustration_graph(lat, chain_types);
  for (const auto& adj : chains.adjacency) {
    if (adj.size() != 2) {
      bad << "{Kz, V} degree " << adj.size() << " != 2; ";
      break;
    }
  }
  if (!chains.is_bipartite()) {
    bad << "{Kz, V} graph is not bipartite; ";
  }
  const std::vector<OperatorType> only_v = {OperatorType::kV};
  const FrustrationGraph plaquettes = frustration_graph(lat, only_v);
  if (plaquettes.num_edges() != 0 || plaquettes.num_components() != 36) {
    bad << "V operators must mutually commute; ";
  }
  out.detail = bad.str();
  out.passed = out.detail.empty();
  if (out.passed) {
    out.detail = "Kagome bond graph, {Kz,V} chains and commuting V at L=6";
  }
  return out;
}

}  // namespace

std::vector<CheckResult> run_selfcheck(PlaquetteConvention convention) {
  std::vector<CheckResult> out;
  out.push_back(dense_equivalence());
  out.push_back(modular_identity("theta3_modular_identity", &theta3));
  out.push_back(modular_identity("eta_modular_identity", &dedekind_eta));
  out.push_back(lifshitz_symmetry());
  out.push_back(plaquette_commutation(convention));
  out.push_back(graph_shapes());
  return out;
}

}  // namespace hexmon
