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

#ifndef HEXMON_TABLEAU_H
#define HEXMON_TABLEAU_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hexmon/bit_matrix.h"
#include "hexmon/pauli.h"
#include "hexmon/rng.h"

namespace hexmon {

/// A forced (postselected) outcome contradicts a deterministic measurement.
class PostselectionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Operation requires a pure state but the state is mixed.
class UnsupportedStateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class MeasurementCase {
  kAnticommuting,  // op anticommutes with a generator; random outcome, k unchanged
  kInGroup,        // op is (up to sign) in the stabilizer group; deterministic
  kIndependent,    // op commutes with the group but is not in it; random, k grows by one
};

struct MeasureOptions {
  /// Postselect this outcome (+1 or -1). Random cases then consume no randomness.
  std::optional<int> forced;
  /// When false, deterministic outcomes are reported with value 0 and the
  /// span solve that recovers their sign is skipped.
  bool resolve_sign = true;
};

struct MeasurementResult {
  int value = 0;  // +1, -1, or 0 for an unresolved deterministic outcome
  bool deterministic = false;
  MeasurementCase which = MeasurementCase::kInGroup;
};

enum class GateKind { kHadamard, kPhase, kCnot };

struct CliffordGate {
  GateKind kind;
  std::size_t a;
  std::size_t b = 0;

  static CliffordGate hadamard(std::size_t q) { return {GateKind::kHadamard, q}; }
  static CliffordGate phase(std::size_t q) { return {GateKind::kPhase, q}; }
  static CliffordGate cnot(std::size_t control, std::size_t target) { return {GateKind::kCnot, control, target}; }
};

/// Stabilizer group of k <= n commuting, independent generators on n qubits.
///
/// No destabilizers are stored. Deterministic outcome signs are recovered with a
/// GF(2) span solve over the generator matrix. Mixed states (k < n) additionally
/// carry n-k symplectic pairs of logical operators, which is what separates an
/// in-group measurement from an independent one without a rank computation.
class StabilizerState {
 public:
  /// |0...0>, stabilized by +Z_j on every qubit.
  static StabilizerState computational_basis_state(std::size_t num_qubits);
  /// Maximally mixed state: no generators, every qubit logical.
  static StabilizerState maximally_mixed(std::size_t num_qubits);
  /// State stabilized by the given signed Paulis. They must commute; dependent
  /// entries are dropped if consistent and rejected if their signs conflict.
  static StabilizerState from_generators(std::size_t num_qubits, std::span<const PauliOperator> generators);

  std::size_t num_qubits() const { return n_; }
  std::size_t num_generators() const { return signs_.size(); }
  std::size_t num_logical_pairs() const { return logicals_.size() / (2 * stride_) / 2; }
  bool is_pure() const { return num_generators() == n_; }
  /// Von Neumann entropy of the whole state in bits, n - k.
  std::size_t entropy_bits() const { return n_ - num_generators(); }

  PauliOperator generator(std::size_t i) const;
  std::vector<PauliOperator> generators() const;
  /// k x 2n matrix with columns [x_0..x_{n-1} | z_0..z_{n-1}].
  BitMatrix generator_matrix() const;

  MeasurementResult measure(const PauliOperator& op, Rng& rng, const MeasureOptions& options = {});

  void apply(const CliffordGate& gate);
  void hadamard(std::size_t q);
  void phase(std::size_t q);
  void phase_dagger(std::size_t q);
  void cnot(std::size_t control, std::size_t target);
  void pauli_x(std::size_t q);

  /// S_A in bits for a pure state: rank of the generators restricted to A, minus |A|.
  std::size_t subsystem_entropy_bits(const BitVector& region) const;

  /// For qubit order 0..n-1, entry x is the entropy of the prefix [0, x),
  /// x = 0..n, from a single echelon reduction. Pure states only.
  std::vector<std::size_t> prefix_entropies_bits() const;

  /// Reduced row echelon generators (qubit-major, x before z), with signs.
  /// Two states are equal iff their canonical generators are equal.
  std::vector<PauliOperator> canonical_generators() const;
  /// Canonical generators of the subgroup supported inside `region`.
  std::vector<PauliOperator> stabilizers_within(const BitVector& region) const;

  /// Empty when the generators commute, are independent and the logical
  /// pairs are consistent; otherwise a description of the first violation.
  std::optional<std::string> check_invariants() const;

  /// One signed Pauli string per line, e.g. "+XZ_Y".
  std::string dump() const;

 private:
  explicit StabilizerState(std::size_t num_qubits);

  std::uint64_t* gen_x(std::size_t r) { return gens_.data() + r * 2 * stride_; }
  std::uint64_t* gen_z(std::size_t r) { return gens_.data() + r * 2 * stride_ + stride_; }
  const std::uint64_t* gen_x(std::size_t r) const { return gens_.data() + r * 2 * stride_; }
  const std::uint64_t* gen_z(std::size_t r) const { return gens_.data() + r * 2 * stride_ + stride_; }
  std::uint64_t* log_x(std::size_t r) { return logicals_.data() + r * 2 * stride_; }
  std::uint64_t* log_z(std::size_t r) { return logicals_.data() + r * 2 * stride_ + stride_; }
  std::size_t num_logical_rows() const { return logicals_.size() / (2 * stride_); }

  void append_generator(const PauliOperator& op, bool negative);
  void overwrite_generator(std::size_t r, const PauliOperator& op, bool negative);
  void remove_logical_pair(std::size_t pair);
  int resolve_in_group_sign(const PauliOperator& op) const;

  template <typename RowFn>
  void for_each_row(RowFn&& fn);

  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> gens_;  // row r: [x words | z words]
  std::vector<std::uint8_t> signs_;  // 1 = negative
  // Rows 2j and 2j+1 form an anticommuting pair; both commute with everything else.
  std::vector<std::uint64_t> logicals_;

  // Scratch reused across measurements.
  std::vector<std::uint32_t> support_words_;
  std::vector<std::uint32_t> hits_;
};

/// Reduced row echelon form of a set of commuting Paulis under the given qubit
/// priority (x before z on each qubit). Zero rows are dropped; signs are tracked.
std::vector<PauliOperator> canonicalize(std::vector<PauliOperator> rows, std::span<const std::size_t> qubit_order);

}  // namespace hexmon

#endif  // HEXMON_TABLEAU_H
