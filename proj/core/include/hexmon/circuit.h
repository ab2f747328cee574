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

#ifndef HEXMON_CIRCUIT_H
#define HEXMON_CIRCUIT_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hexmon/lattice.h"
#include "hexmon/rng.h"
#include "hexmon/tableau.h"

namespace hexmon {

/// Measurement probabilities (p, p_x, p_y, p_z) for V and the three bond checks.
struct ProbabilityVector {
  double p = 0;
  double px = 0;
  double py = 0;
  double pz = 0;

  /// Validates non-negativity and normalizes to unit sum.
  static ProbabilityVector make(double p, double px, double py, double pz);
  /// p_x = p_y = p_z = (1 - p) / 3.
  static ProbabilityVector isotropic(double p);
  /// p_x = p_y = 0, p_z = 1 - p.
  static ProbabilityVector edge_z(double p);

  std::array<double, 4> as_array() const { return {p, px, py, pz}; }
  std::string str() const;
  bool operator==(const ProbabilityVector&) const = default;
};

enum class CircuitMode { kDirect, kAncilla };

const char* circuit_mode_name(CircuitMode mode);
CircuitMode parse_circuit_mode(const std::string& name);

std::size_t default_sweeps(std::size_t L);

struct ProtocolConfig {
  std::size_t L = 12;
  ProbabilityVector probs = ProbabilityVector::isotropic(0.0);
  std::size_t sweeps_total = 0;  // 0 selects default_sweeps(L)
  std::uint64_t seed = 1;
  std::uint32_t stream_a = 0;  // RNG domain words; the runner uses (point, sample)
  std::uint32_t stream_b = 0;
  CircuitMode mode = CircuitMode::kDirect;
  bool force_plus_flux = false;  // postselect W_q = +1 during preparation
  std::size_t audit_every = 1;   // half-cut entropy logged every this many sweeps; 0 = never

  std::size_t sweeps() const { return sweeps_total ? sweeps_total : default_sweeps(L); }
};

enum class OperatorKind { kBondX = 0, kBondY = 1, kBondZ = 2, kV = 3, kW = 4 };

/// Precomputed check operators for one lattice, sized for a register of
/// `register_qubits` >= 2L^2 qubits (extra qubits are ancillas).
class OperatorCatalog {
 public:
  explicit OperatorCatalog(const HoneycombLattice& lattice, std::size_t register_qubits = 0);

  const HoneycombLattice& lattice() const { return lattice_; }
  const PauliOperator& get(OperatorKind kind, std::size_t location) const;
  std::size_t count(OperatorKind kind) const;

 private:
  HoneycombLattice lattice_;
  std::array<std::vector<PauliOperator>, 5> ops_;
};

/// Heavy-hexagon register: 2L^2 physical qubits, then one ancilla per bond
/// (3L^2), then one per plaquette (L^2).
class AncillaLayout {
 public:
  explicit AncillaLayout(const HoneycombLattice& lattice);

  std::size_t num_physical() const { return physical_; }
  std::size_t num_qubits() const { return physical_ + bonds_ + plaquettes_; }
  std::size_t bond_ancilla(std::size_t bond_index) const { return physical_ + bond_index; }
  std::size_t plaquette_ancilla(std::size_t q) const { return physical_ + bonds_ + q; }
  std::size_t ancilla_for(OperatorKind kind, std::size_t location) const;
  BitVector physical_mask() const;

 private:
  std::size_t physical_;
  std::size_t bonds_;
  std::size_t plaquettes_;
};

struct AncillaStats {
  std::size_t two_qubit_gates = 0;
  std::size_t single_qubit_gates = 0;
  std::size_t ancilla_measurements = 0;
};

/// Raised when an ancilla is not in |0> at the start of a coupling round.
class AncillaStateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Applies the physical-to-ancilla coupling for one qubit: the two-qubit
/// Clifford exp(-i pi/4 (1 - P)(1 - X_a)) with P in {X, Y, Z} acting on `physical`.
void apply_ancilla_coupling(StabilizerState& state, std::size_t physical, char letter, std::size_t ancilla,
                            AncillaStats* stats = nullptr);

/// Measures a check through its ancilla: couples every qubit of the operator's
/// support (in `coupling_order` if given, a permutation of the support
/// positions), measures the ancilla in Z and resets it to |0>.
MeasurementResult measure_via_ancilla(StabilizerState& state, const AncillaLayout& layout,
                                      const OperatorCatalog& physical_ops, OperatorKind kind, std::size_t location,
                                      Rng& rng, const MeasureOptions& options = {},
                                      std::span<const std::size_t> coupling_order = {}, AncillaStats* stats = nullptr);

/// Pads a Pauli on the physical qubits to `num_qubits` with identities.
PauliOperator embed(const PauliOperator& op, std::size_t num_qubits);
/// Drops qubits >= num_qubits (which must carry identity).
PauliOperator truncate(const PauliOperator& op, std::size_t num_qubits);
BitVector embed(const BitVector& mask, std::size_t num_bits);

struct PreparedState {
  StabilizerState state;
  std::vector<int> flux_outcomes;  // W_q outcomes, one per plaquette
};

/// |up...up> followed by one measurement of every W_q.
PreparedState prepare_flux_free_pure(const HoneycombLattice& lattice, Rng& rng, bool force_plus = false);
/// Mixed state stabilized by W_q = +1 for q < L^2 - 1 (entropy L^2 + 1 bits).
StabilizerState prepare_flux_free_mixed(const HoneycombLattice& lattice);

struct SweepStats {
  std::array<std::size_t, 4> type_counts{};  // V, Kx, Ky, Kz
  std::size_t random_outcomes = 0;
  std::size_t deterministic_outcomes = 0;

  SweepStats& operator+=(const SweepStats& other);
};

/// Executes one sweep of L^2 microsteps. Each microstep draws the operator
/// type from `probs` and then a uniform location of that type.
class SweepEngine {
 public:
  SweepEngine(const HoneycombLattice& lattice, CircuitMode mode);

  const HoneycombLattice& lattice() const { return catalog_.lattice(); }
  CircuitMode mode() const { return mode_; }
  std::size_t register_qubits() const;

  /// Fresh register in the flux-free pure state (ancillas, if any, in |0>).
  PreparedState prepare_pure(Rng& rng, bool force_plus) const;
  /// Register holding the flux-free maximally mixed state.
  StabilizerState prepare_mixed() const;

  SweepStats sweep(StabilizerState& state, const ProbabilityVector& probs, Rng& rng) const;
  MeasurementResult measure(StabilizerState& state, OperatorKind kind, std::size_t location, Rng& rng,
                            const MeasureOptions& options = {}) const;

 private:
  OperatorCatalog catalog_;
  CircuitMode mode_;
  AncillaLayout layout_;
};

struct Trajectory {
  StabilizerState state;
  std::vector<int> flux_outcomes;
  /// (sweep, S(L/2) in bits) for audited sweeps.
  std::vector<std::pair<std::size_t, std::size_t>> half_cut_log;
  SweepStats stats;
};

Trajectory evolve_to_steady_state(const ProtocolConfig& config);
/// Same, reusing an engine built for config.L and config.mode.
Trajectory evolve_to_steady_state(const ProtocolConfig& config, const SweepEngine& engine);

}  // namespace hexmon

#endif  // HEXMON_CIRCUIT_H
