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

#include "hexmon/circuit.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hexmon {

ProbabilityVector ProbabilityVector::make(double p, double px, double py, double pz) {
  for (const double v : {p, px, py, pz}) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("ProbabilityVector: entries must be finite and non-negative");
    }
  }
  const double total = p + px + py + pz;
  if (!(total > 0.0)) {
    throw std::invalid_argument("ProbabilityVector: entries sum to zero");
  }
  if (std::abs(total - 1.0) < 1e-12) {
    return {p, px, py, pz};
  }
  return {p / total, px / total, py / total, pz / total};
}

ProbabilityVector ProbabilityVector::isotropic(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("isotropic: p must lie in [0, 1]");
  }
  const double bond = (1.0 - p) / 3.0;
  return make(p, bond, bond, bond);
}

ProbabilityVector ProbabilityVector::edge_z(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("edge_z: p must lie in [0, 1]");
  }
  return make(p, 0.0, 0.0, 1.0 - p);
}

std::string ProbabilityVector::str() const {
  std::ostringstream out;
  out << "(p=" << p << ", px=" << px << ", py=" << py << ", pz=" << pz << ")";
  return out.str();
}

const char* circuit_mode_name(CircuitMode mode) { return mode == CircuitMode::kDirect ? "direct" : "ancilla"; }

CircuitMode parse_circuit_mode(const std::string& name) {
  if (name == "direct") {
    return CircuitMode::kDirect;
  }
  if (name == "ancilla") {
    return CircuitMode::kAncilla;
  }
  throw std::invalid_argument("unknown circuit mode '" + name + "' (expected direct or ancilla)");
}

std::size_t default_sweeps(std::size_t L) { return std::max<std::size_t>(50, 4 * L); }

OperatorCatalog::OperatorCatalog(const HoneycombLattice& lattice, std::size_t register_qubits) : lattice_(lattice) {
  const std::size_t n = register_qubits ? register_qubits : lattice.num_qubits();
  if (n < lattice.num_qubits()) {
    throw DimensionError("OperatorCatalog: register smaller than the lattice");
  }
  for (const BondColor color : {BondColor::kX, BondColor::kY, BondColor::kZ}) {
    auto& out = ops_[static_cast<std::size_t>(color)];
    for (const Bond& bond : lattice.bonds_of_color(color)) {
      out.push_back(embed(bond_check(lattice, bond), n));
    }
  }
  for (std::size_t q = 0; q < lattice.plaquettes().size(); ++q) {
    ops_[static_cast<std::size_t>(OperatorKind::kV)].push_back(embed(plaquette_V(lattice, q), n));
    ops_[static_cast<std::size_t>(OperatorKind::kW)].push_back(embed(plaquette_W(lattice, q), n));
  }
}

const PauliOperator& OperatorCatalog::get(OperatorKind kind, std::size_t location) const {
  return ops_.at(static_cast<std::size_t>(kind)).at(location);
}

std::size_t OperatorCatalog::count(OperatorKind kind) const { return ops_.at(static_cast<std::size_t>(kind)).size(); }

AncillaLayout::AncillaLayout(const HoneycombLattice& lattice)
    : physical_(lattice.num_qubits()), bonds_(lattice.bonds().size()), plaquettes_(lattice.plaquettes().size()) {}

std::size_t AncillaLayout::ancilla_for(OperatorKind kind, std::size_t location) const {
  const std::size_t per_color = plaquettes_;
  switch (kind) {
    case OperatorKind::kBondX:
    case OperatorKind::kBondY:
    case OperatorKind::kBondZ:
      if (location >= per_color) {
        throw std::out_of_range("ancilla_for: bond location out of range");
      }
      return bond_ancilla(static_cast<std::size_t>(kind) * per_color + location);
    case OperatorKind::kV:
    case OperatorKind::kW:
      if (location >= plaquettes_) {
        throw std::out_of_range("ancilla_for: plaquette location out of range");
      }
      return plaquette_ancilla(location);
  }
  throw std::invalid_argument("ancilla_for: unknown operator kind");
}

BitVector AncillaLayout::physical_mask() const {
  BitVector mask(num_qubits());
  for (std::size_t q = 0; q < physical_; ++q) {
    mask.set(q, true);
  }
  return mask;
}

PauliOperator embed(const PauliOperator& op, std::size_t num_qubits) {
  if (num_qubits < op.num_qubits()) {
    throw DimensionError("embed: target register is smaller than the operator");
  }
  if (num_qubits == op.num_qubits()) {
    return op;
  }
  PauliOperator out(num_qubits);
  std::copy(op.x_mask().words().begin(), op.x_mask().words().end(), out.x_mask().words().begin());
  std::copy(op.z_mask().words().begin(), op.z_mask().words().end(), out.z_mask().words().begin());
  out.set_negative(op.negative());
  return out;
}

PauliOperator truncate(const PauliOperator& op, std::size_t num_qubits) {
  PauliOperator out(num_qubits);
  for (const std::size_t q : op.support()) {
    if (q >= num_qubits) {
      throw DimensionError("truncate: operator " + op.str() + " acts beyond qubit " + std::to_string(num_qubits));
    }
    out.set_letter(q, op.letter(q));
  }
  out.set_negative(op.negative());
  return out;
}

BitVector embed(const BitVector& mask, std::size_t num_bits) {
  if (num_bits < mask.size()) {
    throw DimensionError("embed: target is smaller than the mask");
  }
  BitVector out(num_bits);
  std::copy(mask.words().begin(), mask.words().end(), out.words().begin());
  return out;
}

void apply_ancilla_coupling(StabilizerState& state, std::size_t physical, char letter, std::size_t ancilla,
                            AncillaStats* stats) {
  // Conjugating CNOT(physical -> ancilla) by a basis change U with U Z U^dag = P
  // turns the control condition Z = -1 into P = -1.
  std::size_t singles = 0;
  switch (letter) {
    case 'Z':
      state.cnot(physical, ancilla);
      break;
    case 'X':
      state.hadamard(physical);
      state.cnot(physical, ancilla);
      state.hadamard(physical);
      singles = 2;
      break;
    case 'Y':
      state.phase_dagger(physical);
      state.hadamard(physical);
      state.cnot(physical, ancilla);
      state.hadamard(physical);
      state.phase(physical);
      singles = 4;
      break;
    default:
      throw std::invalid_argument(std::string("apply_ancilla_coupling: bad letter '") + letter + "'");
  }
  if (stats) {
    ++stats->two_qubit_gates;
    stats->single_qubit_gates += singles;
  }
}

namespace {

// +1 iff +Z_a is in the stabilizer group, -1 for -Z_a, 0 if Z_a is not in it.
int ancilla_z_value(const StabilizerState& state, std::size_t ancilla) {
  const std::size_t n = state.num_qubits();
  PauliOperator z(n);
  z.set_letter(ancilla, 'Z');
  for (std::size_t r = 0; r < state.num_generators(); ++r) {
    const PauliOperator g = state.generator(r);
    if (g.x_mask().get(ancilla)) {
      return 0;
    }
  }
  // The reset normally leaves +-Z_a as a literal generator.
  for (std::size_t r = 0; r < state.num_generators(); ++r) {
    const PauliOperator g = state.generator(r);
    if (g.z_mask().get(ancilla) && g.weight() == 1) {
      return g.sign();
    }
  }
  StabilizerState probe = state;
  Rng unused(0);
  const MeasurementResult result = probe.measure(z, unused);
  return result.which == MeasurementCase::kInGroup ? result.value : 0;
}

}  // namespace

MeasurementResult measure_via_ancilla(StabilizerState& state, const AncillaLayout& layout,
                                      const OperatorCatalog& physical_ops, OperatorKind kind, std::size_t location,
                                      Rng& rng, const MeasureOptions& options,
                                      std::span<const std::size_t> coupling_order, AncillaStats* stats) {
  if (state.num_qubits() != layout.num_qubits()) {
    throw DimensionError("measure_via_ancilla: state does not live on the ancilla register");
  }
  const std::size_t ancilla = layout.ancilla_for(kind, location);
  if (ancilla_z_value(state, ancilla) != 1) {
    throw AncillaStateError("measure_via_ancilla: ancilla " + std::to_string(ancilla) + " is not in |0>");
  }
  const PauliOperator& op = physical_ops.get(kind, location);
  const std::vector<std::size_t> support = op.support();
  std::vector<std::size_t> order(support.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (!coupling_order.empty()) {
    std::vector<std::size_t> sorted(coupling_order.begin(), coupling_order.end());
    std::sort(sorted.begin(), sorted.end());
    if (sorted != order) {
      throw std::invalid_argument("measure_via_ancilla: coupling_order is not a permutation of the support");
    }
    order.assign(coupling_order.begin(), coupling_order.end());
  }
  for (const std::size_t k : order) {
    const std::size_t q = support[k];
    if (q >= layout.num_physical()) {
      throw DimensionError("measure_via_ancilla: operator touches a non-physical qubit");
    }
    apply_ancilla_coupling(state, q, op.letter(q), ancilla, stats);
  }
  PauliOperator z(state.num_qubits());
  z.set_letter(ancilla, 'Z');
  MeasureOptions ancilla_options = options;
  if (ancilla_options.forced && op.negative()) {
    ancilla_options.forced = -*ancilla_options.forced;
  }
  ancilla_options.resolve_sign = true;
  MeasurementResult result = state.measure(z, rng, ancilla_options);
  if (stats) {
    ++stats->ancilla_measurements;
  }
  if (result.value < 0) {
    state.pauli_x(ancilla);
  }
  result.value *= op.sign();
  return result;
}

PreparedState prepare_flux_free_pure(const HoneycombLattice& lattice, Rng& rng, bool force_plus) {
  PreparedState out{StabilizerState::computational_basis_state(lattice.num_qubits()), {}};
  out.flux_outcomes.reserve(lattice.plaquettes().size());
  for (std::size_t q = 0; q < lattice.plaquettes().size(); ++q) {
    MeasureOptions options;
    if (force_plus && q + 1 < lattice.plaquettes().size()) {
      options.forced = 1;
    }
    out.flux_outcomes.push_back(out.state.measure(plaquette_W(lattice, q), rng, options).value);
  }
  return out;
}

StabilizerState prepare_flux_free_mixed(const HoneycombLattice& lattice) {
  StabilizerState state = StabilizerState::maximally_mixed(lattice.num_qubits());
  Rng unused(0);
  for (std::size_t q = 0; q + 1 < lattice.plaquettes().size(); ++q) {
    state.measure(plaquette_W(lattice, q), unused, {.forced = 1});
  }
  return state;
}

SweepStats& SweepStats::operator+=(const SweepStats& other) {
  for (std::size_t t = 0; t < type_counts.size(); ++t) {
    type_counts[t] += other.type_counts[t];
  }
  random_outcomes += other.random_outcomes;
  deterministic_outcomes += other.deterministic_outcomes;
  return *this;
}

SweepEngine::SweepEngine(const HoneycombLattice& lattice, CircuitMode mode)
    : catalog_(lattice, mode == CircuitMode::kDirect ? lattice.num_qubits() : AncillaLayout(lattice).num_qubits()),
      mode_(mode),
      layout_(lattice) {}

std::size_t SweepEngine::register_qubits() const {
  return mode_ == CircuitMode::kDirect ? layout_.num_physical() : layout_.num_qubits();
}

MeasurementResult SweepEngine::measure(StabilizerState& state, OperatorKind kind, std::size_t location, Rng& rng,
                                       const MeasureOptions& options) const {
  if (mode_ == CircuitMode::kDirect) {
    return state.measure(catalog_.get(kind, location), rng, options);
  }
  // The catalog is sized for the full register; physical support is what matters.
  return measure_via_ancilla(state, layout_, catalog_, kind, location, rng, options);
}

PreparedState SweepEngine::prepare_pure(Rng& rng, bool force_plus) const {
  PreparedState out{StabilizerState::computational_basis_state(register_qubits()), {}};
  const std::size_t plaquettes = catalog_.count(OperatorKind::kW);
  for (std::size_t q = 0; q < plaquettes; ++q) {
    MeasureOptions options;
    if (force_plus && q + 1 < plaquettes) {
      options.forced = 1;
    }
    out.flux_outcomes.push_back(measure(out.state, OperatorKind::kW, q, rng, options).value);
  }
  return out;
}

StabilizerState SweepEngine::prepare_mixed() const {
  const std::size_t n = register_qubits();
  StabilizerState state = StabilizerState::maximally_mixed(n);
  Rng unused(0);
  // Ancillas start in |0>.
  for (std::size_t a = layout_.num_physical(); a < n; ++a) {
    PauliOperator z(n);
    z.set_letter(a, 'Z');
    state.measure(z, unused, {.forced = 1});
  }
  const std::size_t plaquettes = catalog_.count(OperatorKind::kW);
  for (std::size_t q = 0; q + 1 < plaquettes; ++q) {
    measure(state, OperatorKind::kW, q, unused, {.forced = 1});
  }
  return state;
}

SweepStats SweepEngine::sweep(StabilizerState& state, const ProbabilityVector& probs, Rng& rng) const {
  SweepStats stats;
  const std::size_t steps = lattice().num_cells();
  const std::size_t locations = lattice().num_cells();
  const double c_v = probs.p;
  const double c_x = c_v + probs.px;
  const double c_y = c_x + probs.py;
  const MeasureOptions options{.forced = std::nullopt, .resolve_sign = false};
  for (std::size_t step = 0; step < steps; ++step) {
    const double u = rng.uniform();
    OperatorKind kind;
    std::size_t type_slot;
    // Zero-probability types are never drawn, even at u == cumulative edge.
    if (u < c_v) {
      kind = OperatorKind::kV;
      type_slot = 0;
    } else if (u < c_x) {
      kind = OperatorKind::kBondX;
      type_slot = 1;
    } else if (u < c_y) {
      kind = OperatorKind::kBondY;
      type_slot = 2;
    } else if (probs.pz > 0.0) {
      kind = OperatorKind::kBondZ;
      type_slot = 3;
    } else if (probs.py > 0.0) {
      kind = OperatorKind::kBondY;
      type_slot = 2;
    } else if (probs.px > 0.0) {
      kind = OperatorKind::kBondX;
      type_slot = 1;
    } else {
      kind = OperatorKind::kV;
      type_slot = 0;
    }
    const std::size_t location = rng.below(locations);
    ++stats.type_counts[type_slot];
    const MeasurementResult result = measure(state, kind, location, rng, options);
    if (result.deterministic) {
      ++stats.deterministic_outcomes;
    } else {
      ++stats.random_outcomes;
    }
  }
  return stats;
}

Trajectory evolve_to_steady_state(const ProtocolConfig& config) {
  const SweepEngine engine(HoneycombLattice::build(config.L), config.mode);
  return evolve_to_steady_state(config, engine);
}

Trajectory evolve_to_steady_state(const ProtocolConfig& config, const SweepEngine& engine) {
  if (engine.lattice().linear_size() != config.L || engine.mode() != config.mode) {
    throw std::invalid_argument("evolve_to_steady_state: engine does not match the config");
  }
  Rng rng(config.seed, config.stream_a, config.stream_b);
  PreparedState prepared = engine.prepare_pure(rng, config.force_plus_flux);
  Trajectory out{std::move(prepared.state), std::move(prepared.flux_outcomes), {}, {}};
  const BitVector half = embed(cylinder_region(engine.lattice(), config.L / 2).qubits, out.state.num_qubits());
  const std::size_t total = config.sweeps();
  for (std::size_t t = 1; t <= total; ++t) {
    out.stats += engine.sweep(out.state, config.probs, rng);
    if (config.audit_every && (t % config.audit_every == 0 || t == total)) {
      out.half_cut_log.emplace_back(t, out.state.subsystem_entropy_bits(half));
    }
  }
  return out;
}

}  // namespace hexmon
