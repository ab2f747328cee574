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

#ifndef HEXMON_OBSERVABLES_H
#define HEXMON_OBSERVABLES_H

#include <cstddef>
#include <vector>

#include "hexmon/circuit.h"
#include "hexmon/lattice.h"
#include "hexmon/tableau.h"

namespace hexmon {

struct CurvePoint {
  double x = 0;  // cut position l or time t
  double mean = 0;
  double stderr = 0;
};

/// Ensemble-averaged S(l) for l = 0..L, in bits.
struct EntropyCurve {
  std::size_t L = 0;
  std::vector<CurvePoint> points;
};

/// Ensemble-averaged entropy of the mixed state after t sweeps, t = 0..T, in bits.
struct PurificationCurve {
  std::size_t L = 0;
  std::vector<CurvePoint> points;
};

/// S(l) for cylinder_region(l), l = 0..L, from one echelon reduction. The
/// state may live on a register extended by ancillas in a product state.
std::vector<std::size_t> entropy_arc(const StabilizerState& state, const HoneycombLattice& lattice);

/// Tripartite mutual information over tmi_regions, in bits. Pure states only.
int tmi(const StabilizerState& state, const HoneycombLattice& lattice);

/// Topological entanglement entropy gamma over tee_regions, in bits; the
/// Kitaev-Preskill combination is negated so topological phases give gamma > 0.
int tee(const StabilizerState& state, const HoneycombLattice& lattice);

/// Entropy of a flux-free maximally mixed start after each of config.sweeps()
/// sweeps; entry t is the entropy after t sweeps (entry 0 is L^2 + 1).
std::vector<std::size_t> purification_trajectory(const ProtocolConfig& config, const SweepEngine& engine);
std::vector<std::size_t> purification_trajectory(const ProtocolConfig& config);

/// Mean and standard error (sample sd / sqrt(n)) of each column of per-sample rows.
std::vector<CurvePoint> average_columns(const std::vector<std::vector<double>>& samples);

}  // namespace hexmon

#endif  // HEXMON_OBSERVABLES_H
