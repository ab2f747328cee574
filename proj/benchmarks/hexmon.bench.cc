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

#include "benchmark/benchmark.h"
#include "hexmon/bit_matrix.h"
#include "hexmon/circuit.h"
#include "hexmon/observables.h"

using namespace hexmon;

namespace {

StabilizerState steady_state(std::size_t L, double p) {
  ProtocolConfig config;
  config.L = L;
  config.probs = ProbabilityVector::isotropic(p);
  config.sweeps_total = 20;
  config.audit_every = 0;
  return evolve_to_steady_state(config).state;
}

}  // namespace

static void BM_sweep(benchmark::State& state) {
  const auto L = static_cast<std::size_t>(state.range(0));
  const SweepEngine engine(HoneycombLattice::build(L), CircuitMode::kDirect);
  Rng rng(1);
  StabilizerState s = engine.prepare_pure(rng, false).state;
  const ProbabilityVector probs = ProbabilityVector::isotropic(0.683);
  for (auto _ : state) {
    benchmark::DoNotOptimize(engine.sweep(s, probs, rng));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(L * L));
}
BENCHMARK(BM_sweep)->Arg(12)->Arg(24)->Arg(36)->Unit(benchmark::kMillisecond);

static void BM_ancilla_sweep(benchmark::State& state) {
  const auto L = static_cast<std::size_t>(state.range(0));
  const SweepEngine engine(HoneycombLattice::build(L), CircuitMode::kAncilla);
  Rng rng(1);
  StabilizerState s = engine.prepare_pure(rng, false).state;
  const ProbabilityVector probs = ProbabilityVector::isotropic(0.683);
  for (auto _ : state) {
    benchmark::DoNotOptimize(engine.sweep(s, probs, rng));
  }
}
BENCHMARK(BM_ancilla_sweep)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  BitMatrix m(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < 2 * n; ++c) {
      m.set(r, c, rng.next_bit());
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank(m));
  }
}
BENCHMARK(BM_rank)->Arg(288)->Arg(1152)->Arg(2592)->Unit(benchmark::kMillisecond);

static void BM_entropy_arc(benchmark::State& state) {
  const auto L = static_cast<std::size_t>(state.range(0));
  const HoneycombLattice lattice = HoneycombLattice::build(L);
  const StabilizerState s = steady_state(L, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(entropy_arc(s, lattice));
  }
}
BENCHMARK(BM_entropy_arc)->Arg(12)->Arg(24)->Arg(36)->Unit(benchmark::kMillisecond);

static void BM_tmi(benchmark::State& state) {
  const auto L = static_cast<std::size_t>(state.range(0));
  const HoneycombLattice lattice = HoneycombLattice::build(L);
  const StabilizerState s = steady_state(L, 0.683);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tmi(s, lattice));
  }
}
BENCHMARK(BM_tmi)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
