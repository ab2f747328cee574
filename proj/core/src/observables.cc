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
#include <stdexcept>

namespace hexmon {

namespace {

int region_entropy(const StabilizerState& state, const BitVector& mask) {
  return static_cast<int>(state.subsystem_entropy_bits(embed(mask, state.num_qubits())));
}

BitVector union_of(const BitVector& a, const BitVector& b) {
  BitVector out = a;
  out |= b;
  return out;
}

}  // namespace

std::vector<std::size_t> entropy_arc(const StabilizerState& state, const HoneycombLattice& lattice) {
  if (state.num_qubits() < lattice.num_qubits()) {
    throw DimensionError("entropy_arc: state is smaller than the lattice");
  }
  const std::vector<std::size_t> prefix = state.prefix_entropies_bits();
  const std::size_t L = lattice.linear_size();
  std::vector<std::size_t> out(L + 1);
  for (std::size_t l = 0; l <= L; ++l) {
    out[l] = prefix[2 * L * l];
  }
  return out;
}

int tmi(const StabilizerState& state, const HoneycombLattice& lattice) {
  const auto r = tmi_regions(lattice);
  const BitVector& a = r[0].qubits;
  const BitVector& b = r[1].qubits;
  const BitVector& c = r[2].qubits;
  const BitVector& d = r[3].qubits;
  // S_ABC = S_D and S_AC = S_BD on a pure state; the direct forms are used anyway.
  return region_entropy(state, a) + region_entropy(state, b) + region_entropy(state, c) -
         region_entropy(state, union_of(a, b)) - region_entropy(state, union_of(b, c)) -
         region_entropy(state, union_of(a, c)) + region_entropy(state, d);
}

int tee(const StabilizerState& state, const HoneycombLattice& lattice) {
  const auto r = tee_regions(lattice);
  const BitVector& a = r[0].qubits;
  const BitVector& b = r[1].qubits;
  const BitVector& c = r[2].qubits;
  const int kp = region_entropy(state, a) + region_entropy(state, b) + region_entropy(state, c) -
                 region_entropy(state, union_of(a, b)) - region_entropy(state, union_of(b, c)) -
                 region_entropy(state, union_of(a, c)) + region_entropy(state, union_of(union_of(a, b), c));
  return -kp;
}

std::vector<std::size_t> purification_trajectory(const ProtocolConfig& config, const SweepEngine& engine) {
  if (engine.lattice().linear_size() != config.L || engine.mode() != config.mode) {
    throw std::invalid_argument("purification_trajectory: engine does not match the config");
  }
  Rng rng(config.seed, config.stream_a, config.stream_b);
  StabilizerState state = engine.prepare_mixed();
  std::vector<std::size_t> out;
  out.reserve(config.sweeps() + 1);
  out.push_back(state.entropy_bits());
  for (std::size_t t = 0; t < config.sweeps(); ++t) {
    engine.sweep(state, config.probs, rng);
    out.push_back(state.entropy_bits());
  }
  return out;
}

std::vector<std::size_t> purification_trajectory(const ProtocolConfig& config) {
  const SweepEngine engine(HoneycombLattice::build(config.L), config.mode);
  return purification_trajectory(config, engine);
}

std::vector<CurvePoint> average_columns(const std::vector<std::vector<double>>& samples) {
  if (samples.empty()) {
    return {};
  }
  const std::size_t cols = samples.front().size();
  const double n = static_cast<double>(samples.size());
  std::vector<CurvePoint> out(cols);
  for (std::size_t k = 0; k < cols; ++k) {
    double sum = 0;
    for (const auto& row : samples) {
      if (row.size() != cols) {
        throw DimensionError("average_columns: ragged sample rows");
      }
      sum += row[k];
    }
    const double mean = sum / n;
    double ss = 0;
    for (const auto& row : samples) {
      ss += (row[k] - mean) * (row[k] - mean);
    }
    out[k].x = static_cast<double>(k);
    out[k].mean = mean;
    out[k].stderr = samples.size() > 1 ? std::sqrt(ss / (n - 1)) / std::sqrt(n) : 0.0;
  }
  return out;
}

}  // namespace hexmon
