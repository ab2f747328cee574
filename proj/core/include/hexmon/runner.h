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

#ifndef HEXMON_RUNNER_H
#define HEXMON_RUNNER_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hexmon/analysis.h"
#include "hexmon/circuit.h"

namespace hexmon {

/// Raised for malformed experiment or fit configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a CSV does not have the aggregate-record columns.
class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ExperimentKind { kArc, kTmiScan, kTeeScan, kPurify, kPhaseCut };

const char* experiment_kind_name(ExperimentKind kind);
ExperimentKind parse_experiment_kind(std::string_view name);

/// Point on a named one-parameter line:
///   isotropic     (p, (1-p)/3, (1-p)/3, (1-p)/3)
///   edge_z        (p, 0, 0, 1-p)
///   bottom_plane  (0, (1-s)/2, (1-s)/2, s), parameter s = p_z
ProbabilityVector line_point(std::string_view line, double parameter);

/// Probability points of an experiment: a named line sampled at explicit
/// parameter values or on an inclusive [start, stop] grid, or an explicit list.
struct ProbabilitySpec {
  std::string line;  // empty for an explicit list
  std::vector<double> values;
  std::optional<double> start, stop, step;
  std::vector<ProbabilityVector> points;  // explicit list

  std::vector<ProbabilityVector> expand() const;
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kArc;
  std::vector<std::size_t> L_list = {12};
  ProbabilitySpec probs;
  std::size_t n_samples = 100;
  std::uint64_t seed = 1;
  std::size_t sweeps_total = 0;  // 0 selects default_sweeps(L)
  CircuitMode mode = CircuitMode::kDirect;
  std::string output;  // CSV path; relative paths resolve against HEXMON_OUTPUT_DIR
  std::size_t threads = 1;
  bool tee_histogram = false;
  std::size_t audit_every = 0;  // > 0 adds half_cut_audit rows

  /// Throws ConfigError on an invalid combination.
  void validate() const;
};

/// Parses a JSON object; keys mirror the CLI flags. Unknown keys are rejected.
ExperimentConfig config_from_json(std::string_view text);
std::string config_to_json(const ExperimentConfig& config);

struct AggregateRecord {
  std::size_t L = 0;
  ProbabilityVector probs;
  std::string observable;
  long long index = 0;
  double mean = 0;
  double stderr = 0;
  std::size_t n_samples = 0;
};

inline constexpr std::string_view kCsvHeader = "L,p,px,py,pz,observable,index,mean,stderr,n_samples";

std::string format_csv(const std::vector<AggregateRecord>& records);
/// `source` names the input in error messages.
std::vector<AggregateRecord> parse_csv(std::string_view text, std::string_view source = "<csv>");

/// Called after each finished (L, point) with (done, total).
using ProgressFn = std::function<void(std::size_t, std::size_t)>;

/// Runs every (L, point) of the experiment. Sample s of point k uses the RNG
/// stream (seed, k, s); point ordinals run over L_list outer, points inner.
/// Output does not depend on config.threads.
std::vector<AggregateRecord> run_experiment(const ExperimentConfig& config, const ProgressFn& progress = {});

/// Applies HEXMON_OUTPUT_DIR to a relative path and defaults to "<kind>.csv".
std::string resolve_output_path(const ExperimentConfig& config);

struct RunFiles {
  std::string csv;
  std::string metadata;  // "<csv>.json"
};

RunFiles write_run_outputs(const ExperimentConfig& config, const std::vector<AggregateRecord>& records,
                           double wall_seconds);

/// Ordered flat key-value record, serialized as one JSON object.
class FlatRecord {
 public:
  using Value = std::variant<double, long long, std::string>;

  void set(std::string key, Value value);
  const Value& get(std::string_view key) const;
  double number(std::string_view key) const;
  const std::vector<std::pair<std::string, Value>>& entries() const { return entries_; }
  std::string to_json() const;

 private:
  std::vector<std::pair<std::string, Value>> entries_;
};

enum class FitKind { kPageAnsatz, kCftCollapse, kLifshitz, kTmiCrossing };

const char* fit_kind_name(FitKind kind);
FitKind parse_fit_kind(std::string_view name);

struct FitRequest {
  FitKind kind = FitKind::kPageAnsatz;
  std::vector<std::string> inputs;
  FitWindow window;
  std::optional<std::size_t> L;  // restricts the rows used; lifshitz defaults to the largest L
  std::optional<double> p;       // restricts rows to this V probability
  std::string scan_parameter = "p";  // tmi-crossing abscissa: one of p, px, py, pz
  LifshitzOptions lifshitz;
  CrossingOptions crossing;
};

/// 64-bit FNV-1a over the concatenated input bytes, as "fnv1a64:<16 hex digits>".
std::string input_digest(const std::vector<std::string>& contents);

FlatRecord run_fit(const FitRequest& request);
/// Same, on already loaded CSV texts (parallel to request.inputs).
FlatRecord run_fit(const FitRequest& request, const std::vector<std::string>& contents);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Embedded oracle suite: dense-simulation equivalence, theta/eta modular
/// identities, lattice commutation and frustration-graph shapes.
std::vector<CheckResult> run_selfcheck(PlaquetteConvention convention = PlaquetteConvention::kStandard);

}  // namespace hexmon

#endif  // HEXMON_RUNNER_H
