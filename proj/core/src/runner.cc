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

#include "hexmon/runner.h"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <numbers>
#include <sstream>
#include <thread>

#include "hexmon/observables.h"
#include "hexmon/special_functions.h"
#include "json.hpp"

namespace hexmon {

using json = nlohmann::ordered_json;

const char* experiment_kind_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kArc:
      return "arc";
    case ExperimentKind::kTmiScan:
      return "tmi_scan";
    case ExperimentKind::kTeeScan:
      return "tee_scan";
    case ExperimentKind::kPurify:
      return "purify";
    case ExperimentKind::kPhaseCut:
      return "phase_cut";
  }
  return "?";
}

ExperimentKind parse_experiment_kind(std::string_view name) {
  for (const auto kind : {ExperimentKind::kArc, ExperimentKind::kTmiScan, ExperimentKind::kTeeScan,
                          ExperimentKind::kPurify, ExperimentKind::kPhaseCut}) {
    if (name == experiment_kind_name(kind)) {
      return kind;
    }
  }
  throw ConfigError("unknown experiment kind '" + std::string(name) +
                    "' (expected arc, tmi_scan, tee_scan, purify or phase_cut)");
}

ProbabilityVector line_point(std::string_view line, double parameter) {
  if (!(parameter >= 0.0 && parameter <= 1.0)) {
    throw ConfigError("line parameter must lie in [0, 1], got " + std::to_string(parameter));
  }
  if (line == "isotropic") {
    return ProbabilityVector::isotropic(parameter);
  }
  if (line == "edge_z") {
    return ProbabilityVector::edge_z(parameter);
  }
  if (line == "bottom_plane") {
    const double r = (1.0 - parameter) / 2.0;
    return ProbabilityVector::make(0.0, r, r, parameter);
  }
  throw ConfigError("unknown line '" + std::string(line) + "' (expected isotropic, edge_z or bottom_plane)");
}

std::vector<ProbabilityVector> ProbabilitySpec::expand() const {
  if (line.empty()) {
    if (!values.empty() || start || stop || step) {
      throw ConfigError("probability values or a grid need a named line");
    }
    if (points.empty()) {
      throw ConfigError("no probability points given");
    }
    std::vector<ProbabilityVector> out;
    for (const auto& pt : points) {
      out.push_back(ProbabilityVector::make(pt.p, pt.px, pt.py, pt.pz));
    }
    return out;
  }
  if (!points.empty()) {
    throw ConfigError("give either a named line or explicit points, not both");
  }
  std::vector<double> params = values;
  if (start || stop || step) {
    if (!(start && stop && step)) {
      throw ConfigError("a grid needs start, stop and step");
    }
    if (!(*step > 0) || *stop < *start) {
      throw ConfigError("grid needs step > 0 and stop >= start");
    }
    const double span = (*stop - *start) / *step;
    const double count = std::round(span);
    if (std::abs(span - count) > 1e-9 * std::max(1.0, span)) {
      throw ConfigError("grid step does not divide [start, stop]");
    }
    for (long long k = 0; k <= static_cast<long long>(count); ++k) {
      params.push_back(*start + static_cast<double>(k) * *step);
    }
  }
  if (params.empty()) {
    throw ConfigError("line '" + line + "' has no parameter values");
  }
  std::vector<ProbabilityVector> out;
  for (const double v : params) {
    out.push_back(line_point(line, v));
  }
  return out;
}

void ExperimentConfig::validate() const {
  if (L_list.empty()) {
    throw ConfigError("L list is empty");
  }
  for (const std::size_t L : L_list) {
    if (L < 2) {
      throw ConfigError("L must be at least 2, got " + std::to_string(L));
    }
    if ((kind == ExperimentKind::kTmiScan) && L % 4) {
      throw ConfigError("tmi_scan needs L divisible by 4, got " + std::to_string(L));
    }
    if ((kind == ExperimentKind::kTeeScan || kind == ExperimentKind::kPhaseCut) && L < 6) {
      throw ConfigError("tee needs L >= 6, got " + std::to_string(L));
    }
  }
  if (n_samples < 1 || n_samples > 0xffffffffu) {
    throw ConfigError("samples must lie in [1, 2^32)");
  }
  if (threads < 1) {
    throw ConfigError("threads must be at least 1");
  }
  const auto points = probs.expand();
  if (points.size() * L_list.size() > 0xffffffffu) {
    throw ConfigError("too many (L, point) pairs");
  }
  if (tee_histogram && kind != ExperimentKind::kTeeScan) {
    throw ConfigError("tee_histogram applies to tee_scan only");
  }
}

namespace {

template <typename T>
T take(const json& obj, const char* key) {
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config key '") + key + "': " + e.what());
  }
}

json probs_to_json(const ProbabilitySpec& spec) {
  json out = json::object();
  if (!spec.line.empty()) {
    out["line"] = spec.line;
  }
  if (!spec.values.empty()) {
    out["values"] = spec.values;
  }
  if (spec.start) {
    out["start"] = *spec.start;
  }
  if (spec.stop) {
    out["stop"] = *spec.stop;
  }
  if (spec.step) {
    out["step"] = *spec.step;
  }
  if (!spec.points.empty()) {
    json pts = json::array();
    for (const auto& p : spec.points) {
      pts.push_back({p.p, p.px, p.py, p.pz});
    }
    out["points"] = pts;
  }
  return out;
}

ProbabilitySpec probs_from_json(const json& obj) {
  if (!obj.is_object()) {
    throw ConfigError("'probs' must be an object");
  }
  ProbabilitySpec spec;
  for (const auto& [key, value] : obj.items()) {
    if (key == "line") {
      spec.line = take<std::string>(obj, "line");
    } else if (key == "values") {
      spec.values = take<std::vector<double>>(obj, "values");
    } else if (key == "start") {
      spec.start = take<double>(obj, "start");
    } else if (key == "stop") {
      spec.stop = take<double>(obj, "stop");
    } else if (key == "step") {
      spec.step = take<double>(obj, "step");
    } else if (key == "points") {
      for (const auto& row : value) {
        const auto v = row.get<std::vector<double>>();
        if (v.size() != 4) {
          throw ConfigError("each explicit point needs [p, px, py, pz]");
        }
        spec.points.push_back({v[0], v[1], v[2], v[3]});
      }
    } else {
      throw ConfigError("unknown key 'probs." + key + "'");
    }
  }
  return spec;
}

}  // namespace

ExperimentConfig config_from_json(std::string_view text) {
  json obj;
  try {
    obj = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!obj.is_object()) {
    throw ConfigError("config must be a JSON object");
  }
  ExperimentConfig config;
  for (const auto& [key, value] : obj.items()) {
    if (key == "experiment") {
      config.kind = parse_experiment_kind(take<std::string>(obj, "experiment"));
    } else if (key == "L") {
      config.L_list = value.is_array() ? take<std::vector<std::size_t>>(obj, "L")
                                       : std::vector<std::size_t>{take<std::size_t>(obj, "L")};
    } else if (key == "probs") {
      config.probs = probs_from_json(value);
    } else if (key == "samples") {
      config.n_samples = take<std::size_t>(obj, "samples");
    } else if (key == "seed") {
      config.seed = take<std::uint64_t>(obj, "seed");
    } else if (key == "sweeps") {
      config.sweeps_total = take<std::size_t>(obj, "sweeps");
    } else if (key == "mode") {
      config.mode = parse_circuit_mode(take<std::string>(obj, "mode"));
    } else if (key == "output") {
      config.output = take<std::string>(obj, "output");
    } else if (key == "threads") {
      config.threads = take<std::size_t>(obj, "threads");
    } else if (key == "tee_histogram") {
      config.tee_histogram = take<bool>(obj, "tee_histogram");
    } else if (key == "audit_every") {
      config.audit_every = take<std::size_t>(obj, "audit_every");
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  return config;
}

std::string config_to_json(const ExperimentConfig& config) {
  json obj;
  obj["experiment"] = experiment_kind_name(config.kind);
  obj["L"] = config.L_list;
  obj["probs"] = probs_to_json(config.probs);
  obj["samples"] = config.n_samples;
  obj["seed"] = config.seed;
  obj["sweeps"] = config.sweeps_total;
  obj["mode"] = circuit_mode_name(config.mode);
  obj["output"] = config.output;
  obj["threads"] = config.threads;
  obj["tee_histogram"] = config.tee_histogram;
  obj["audit_every"] = config.audit_every;
  return obj.dump(2);
}

namespace {

void append_double(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = line.find(sep, start);
    out.push_back(line.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (end == std::string_view::npos) {
      return out;
    }
    start = end + 1;
  }
}

}  // namespace

std::string format_csv(const std::vector<AggregateRecord>& records) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : records) {
    out += std::to_string(r.L);
    for (const double v : r.probs.as_array()) {
      out += ',';
      append_double(out, v);
    }
    out += ',';
    out += r.observable;
    out += ',';
    out += std::to_string(r.index);
    out += ',';
    append_double(out, r.mean);
    out += ',';
    append_double(out, r.stderr);
    out += ',';
    out += std::to_string(r.n_samples);
    out += '\n';
  }
  return out;
}

std::vector<AggregateRecord> parse_csv(std::string_view text, std::string_view source) {
  const std::string where(source);
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) {
    throw SchemaError(where + ": empty file, expected header '" + std::string(kCsvHeader) + "'");
  }
  if (!line.empty() && line.back() == '\r') {
    line.pop_back();
  }
  const auto header = split(line, ',');
  const auto expected = split(kCsvHeader, ',');
  for (const auto& col : expected) {
    if (std::find(header.begin(), header.end(), col) == header.end()) {
      throw SchemaError(where + ": missing column '" + std::string(col) + "'");
    }
  }
  if (header != expected) {
    throw SchemaError(where + ": columns must be exactly '" + std::string(kCsvHeader) + "'");
  }
  std::vector<AggregateRecord> out;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    const auto cells = split(line, ',');
    if (cells.size() != expected.size()) {
      throw SchemaError(where + ":" + std::to_string(lineno) + ": expected " + std::to_string(expected.size()) +
                        " fields, got " + std::to_string(cells.size()));
    }
    try {
      AggregateRecord r;
      r.L = std::stoull(std::string(cells[0]));
      r.probs = {std::stod(std::string(cells[1])), std::stod(std::string(cells[2])), std::stod(std::string(cells[3])),
                 std::stod(std::string(cells[4]))};
      r.observable = std::string(cells[5]);
      r.index = std::stoll(std::string(cells[6]));
      r.mean = std::stod(std::string(cells[7]));
      r.stderr = std::stod(std::string(cells[8]));
      r.n_samples = std::stoull(std::string(cells[9]));
      out.push_back(std::move(r));
    } catch (const std::logic_error&) {
      throw SchemaError(where + ":" + std::to_string(lineno) + ": unparsable field in '" + line + "'");
    }
  }
  return out;
}

namespace {

struct Column {
  std::string observable;
  long long index;
};

// Observable columns of one sample for a given point, in output order.
std::vector<Column> columns_for(const ExperimentConfig& config, std::size_t L, std::size_t scan_index) {
  std::vector<Column> cols;
  const auto scan = static_cast<long long>(scan_index);
  const std::size_t sweeps = config.sweeps_total ? config.sweeps_total : default_sweeps(L);
  switch (config.kind) {
    case ExperimentKind::kArc:
      for (std::size_t l = 0; l <= L; ++l) {
        cols.push_back({"S", static_cast<long long>(l)});
      }
      break;
    case ExperimentKind::kTmiScan:
      cols.push_back({"tmi", scan});
      break;
    case ExperimentKind::kTeeScan:
      cols.push_back({"tee", scan});
      break;
    case ExperimentKind::kPurify:
      for (std::size_t t = 0; t <= sweeps; ++t) {
        cols.push_back({"purify", static_cast<long long>(t)});
      }
      return cols;
    case ExperimentKind::kPhaseCut:
      cols.push_back({"half_cut", scan});
      if (L % 4 == 0) {
        cols.push_back({"tmi", scan});
      }
      cols.push_back({"tee", scan});
      break;
  }
  if (config.audit_every) {
    for (std::size_t t = config.audit_every; t <= sweeps; t += config.audit_every) {
      cols.push_back({"half_cut_audit", static_cast<long long>(t)});
    }
    if (sweeps % config.audit_every) {
      cols.push_back({"half_cut_audit", static_cast<long long>(sweeps)});
    }
  }
  return cols;
}

std::vector<double> run_sample(const ExperimentConfig& config, const SweepEngine& engine, const ProtocolConfig& protocol) {
  const HoneycombLattice& lattice = engine.lattice();
  std::vector<double> row;
  if (config.kind == ExperimentKind::kPurify) {
    for (const std::size_t s : purification_trajectory(protocol, engine)) {
      row.push_back(static_cast<double>(s));
    }
    return row;
  }
  const Trajectory traj = evolve_to_steady_state(protocol, engine);
  switch (config.kind) {
    case ExperimentKind::kArc:
      for (const std::size_t s : entropy_arc(traj.state, lattice)) {
        row.push_back(static_cast<double>(s));
      }
      break;
    case ExperimentKind::kTmiScan:
      row.push_back(tmi(traj.state, lattice));
      break;
    case ExperimentKind::kTeeScan:
      row.push_back(tee(traj.state, lattice));
      break;
    case ExperimentKind::kPhaseCut: {
      const auto arc = entropy_arc(traj.state, lattice);
      row.push_back(static_cast<double>(arc[protocol.L / 2]));
      if (protocol.L % 4 == 0) {
        row.push_back(tmi(traj.state, lattice));
      }
      row.push_back(tee(traj.state, lattice));
      break;
    }
    case ExperimentKind::kPurify:
      break;
  }
  for (const auto& [t, s] : traj.half_cut_log) {
    row.push_back(static_cast<double>(s));
  }
  return row;
}

}  // namespace

std::vector<AggregateRecord> run_experiment(const ExperimentConfig& config, const ProgressFn& progress) {
  config.validate();
  const auto points = config.probs.expand();
  const std::size_t total = points.size() * config.L_list.size();
  std::vector<AggregateRecord> out;
  std::size_t ordinal = 0;
  for (const std::size_t L : config.L_list) {
    const SweepEngine engine(HoneycombLattice::build(L), config.mode);
    for (std::size_t k = 0; k < points.size(); ++k, ++ordinal) {
      ProtocolConfig base;
      base.L = L;
      base.probs = points[k];
      base.sweeps_total = config.sweeps_total;
      base.seed = config.seed;
      base.stream_a = static_cast<std::uint32_t>(ordinal);
      base.mode = config.mode;
      base.audit_every = config.kind == ExperimentKind::kPurify ? 0 : config.audit_every;
      const std::vector<Column> cols = columns_for(config, L, k);

      std::vector<std::vector<double>> samples(config.n_samples);
      const std::size_t workers = std::min(config.threads, config.n_samples);
      std::vector<std::exception_ptr> errors(workers);
      auto work = [&](std::size_t w) {
        try {
          for (std::size_t s = w; s < config.n_samples; s += workers) {
            ProtocolConfig protocol = base;
            protocol.stream_b = static_cast<std::uint32_t>(s);
            samples[s] = run_sample(config, engine, protocol);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      };
      if (workers == 1) {
        work(0);
      } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
          pool.emplace_back(work, w);
        }
        for (auto& t : pool) {
          t.join();
        }
      }
      for (const auto& e : errors) {
        if (e) {
          std::rethrow_exception(e);
        }
      }
      const auto avg = average_columns(samples);
      if (avg.size() != cols.size()) {
        throw std::logic_error("run_experiment: sample width does not match the column layout");
      }
      for (std::size_t c = 0; c < cols.size(); ++c) {
        out.push_back({L, points[k], cols[c].observable, cols[c].index, avg[c].mean, avg[c].stderr, config.n_samples});
      }
      if (config.tee_histogram) {
        std::map<long long, std::size_t> counts;
        for (const auto& row : samples) {
          ++counts[std::llround(row[0])];
        }
        const double n = static_cast<double>(config.n_samples);
        for (const auto& [gamma, count] : counts) {
          const double f = static_cast<double>(count) / n;
          out.push_back({L, points[k], "tee_hist", gamma, f, std::sqrt(f * (1 - f) / n), config.n_samples});
        }
      }
      if (progress) {
        progress(ordinal + 1, total);
      }
    }
  }
  return out;
}

std::string resolve_output_path(const ExperimentConfig& config) {
  std::filesystem::path path = config.output.empty() ? std::string(experiment_kind_name(config.kind)) + ".csv"
                                                     : config.output;
  if (path.is_relative()) {
    if (const char* dir = std::getenv("HEXMON_OUTPUT_DIR"); dir && *dir) {
      path = std::filesystem::path(dir) / path;
    }
  }
  return path.string();
}

namespace {

void write_file(const std::string& path, const std::string& content) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) {
    std::filesystem::create_directories(p.parent_path());
  }
  std::ofstream out(path, std::ios::binary);
  out << content;
  out.close();
  if (!out) {
    throw std::runtime_error("cannot write '" + path + "'");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::string input_digest(const std::vector<std::string>& contents) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& text : contents) {
    for (const unsigned char ch : text) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016" PRIx64, h);
  return buf;
}

RunFiles write_run_outputs(const ExperimentConfig& config, const std::vector<AggregateRecord>& records,
                           double wall_seconds) {
  RunFiles files;
  files.csv = resolve_output_path(config);
  files.metadata = files.csv + ".json";
  const std::string csv = format_csv(records);
  write_file(files.csv, csv);
  json meta;
  meta["config"] = json::parse(config_to_json(config));
  meta["version"] = HEXMON_VERSION;
  meta["wall_seconds"] = wall_seconds;
  meta["csv"] = files.csv;
  meta["rows"] = records.size();
  meta["csv_digest"] = input_digest({csv});
  write_file(files.metadata, meta.dump(2) + "\n");
  return files;
}

void FlatRecord::set(std::string key, Value value) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  entries_.emplace_back(std::move(key), std::move(value));
}

const FlatRecord::Value& FlatRecord::get(std::string_view key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) {
      return v;
    }
  }
  throw std::out_of_range("no key '" + std::string(key) + "' in fit record");
}

double FlatRecord::number(std::string_view key) const {
  const Value& v = get(key);
  if (const auto* d = std::get_if<double>(&v)) {
    return *d;
  }
  if (const auto* i = std::get_if<long long>(&v)) {
    return static_cast<double>(*i);
  }
  throw std::invalid_argument("fit record key '" + std::string(key) + "' is not numeric");
}

std::string FlatRecord::to_json() const {
  json obj = json::object();
  for (const auto& [k, v] : entries_) {
    std::visit([&](const auto& x) { obj[k] = x; }, v);
  }
  return obj.dump(2);
}

const char* fit_kind_name(FitKind kind) {
  switch (kind) {
    case FitKind::kPageAnsatz:
      return "page-ansatz";
    case FitKind::kCftCollapse:
      return "cft-collapse";
    case FitKind::kLifshitz:
      return "lifshitz";
    case FitKind::kTmiCrossing:
      return "tmi-crossing";
  }
  return "?";
}

FitKind parse_fit_kind(std::string_view name) {
  for (const auto kind : {FitKind::kPageAnsatz, FitKind::kCftCollapse, FitKind::kLifshitz, FitKind::kTmiCrossing}) {
    if (name == fit_kind_name(kind)) {
      return kind;
    }
  }
  throw ConfigError("unknown fit '" + std::string(name) +
                    "' (expected page-ansatz, cft-collapse, lifshitz or tmi-crossing)");
}

namespace {

std::string join_sizes(const std::vector<std::size_t>& sizes) {
  std::string out;
  for (const std::size_t L : sizes) {
    out += (out.empty() ? "" : ",") + std::to_string(L);
  }
  return out;
}

// Arc curves keyed by L, all at a single probability point.
std::map<std::size_t, EntropyCurve> collect_curves(const std::vector<AggregateRecord>& rows, ProbabilityVector* probs) {
  std::map<std::size_t, EntropyCurve> curves;
  std::optional<ProbabilityVector> point;
  for (const auto& r : rows) {
    if (point && !(*point == r.probs)) {
      throw ConfigError("arc rows span several probability points (" + point->str() + " and " + r.probs.str() +
                        "); select one with --p");
    }
    point = r.probs;
    auto& curve = curves[r.L];
    curve.L = r.L;
    curve.points.push_back({static_cast<double>(r.index), r.mean, r.stderr});
  }
  for (auto& [L, curve] : curves) {
    std::sort(curve.points.begin(), curve.points.end(),
              [](const CurvePoint& a, const CurvePoint& b) { return a.x < b.x; });
  }
  if (curves.empty()) {
    throw ConfigError("no arc rows (observable S) match the selection");
  }
  *probs = *point;
  return curves;
}

double scan_value(const ProbabilityVector& probs, const std::string& parameter) {
  if (parameter == "p") {
    return probs.p;
  }
  if (parameter == "px") {
    return probs.px;
  }
  if (parameter == "py") {
    return probs.py;
  }
  if (parameter == "pz") {
    return probs.pz;
  }
  throw ConfigError("scan parameter must be p, px, py or pz, got '" + parameter + "'");
}

}  // namespace

FlatRecord run_fit(const FitRequest& request) {
  std::vector<std::string> contents;
  for (const auto& path : request.inputs) {
    contents.push_back(read_file(path));
  }
  return run_fit(request, contents);
}

FlatRecord run_fit(const FitRequest& request, const std::vector<std::string>& contents) {
  if (contents.empty()) {
    throw ConfigError("fit needs at least one input CSV");
  }
  const std::string wanted = request.kind == FitKind::kTmiCrossing ? "tmi" : "S";
  std::vector<AggregateRecord> rows;
  std::string names;
  for (std::size_t k = 0; k < contents.size(); ++k) {
    const std::string name = k < request.inputs.size() ? request.inputs[k] : "<input " + std::to_string(k) + ">";
    names += (names.empty() ? "" : ";") + name;
    for (auto& r : parse_csv(contents[k], name)) {
      if (r.observable != wanted) {
        continue;
      }
      if (request.p && std::abs(r.probs.p - *request.p) > 1e-12) {
        continue;
      }
      if (request.L && r.L != *request.L && request.kind != FitKind::kLifshitz) {
        continue;
      }
      rows.push_back(std::move(r));
    }
  }

  FlatRecord rec;
  rec.set("fit", std::string(fit_kind_name(request.kind)));
  rec.set("version", std::string(HEXMON_VERSION));
  rec.set("inputs", names);
  rec.set("input_digest", input_digest(contents));
  auto set_probs = [&](const ProbabilityVector& probs) {
    rec.set("p", probs.p);
    rec.set("px", probs.px);
    rec.set("py", probs.py);
    rec.set("pz", probs.pz);
  };

  switch (request.kind) {
    case FitKind::kPageAnsatz:
    case FitKind::kCftCollapse: {
      ProbabilityVector probs;
      const auto curves = collect_curves(rows, &probs);
      std::vector<EntropyCurve> list;
      std::vector<std::size_t> sizes;
      for (const auto& [L, curve] : curves) {
        list.push_back(curve);
        sizes.push_back(L);
      }
      set_probs(probs);
      rec.set("L_values", join_sizes(sizes));
      rec.set("window_l_min", static_cast<long long>(request.window.l_min));
      if (request.kind == FitKind::kPageAnsatz) {
        const PageAnsatzFit fit = fit_page_ansatz(list, request.window);
        for (std::size_t k = 0; k < 5; ++k) {
          rec.set(kPageParameterNames[k], fit.coefficients[k]);
          rec.set(std::string(kPageParameterNames[k]) + "_stderr", fit.stderrs[k]);
        }
        rec.set("residual_norm", fit.residual_norm);
        rec.set("reduced_chi2", fit.reduced_chi2);
        rec.set("num_points", static_cast<long long>(fit.num_points));
      } else {
        const CftFit fit = fit_cft_collapse(list, request.window);
        rec.set("c", fit.c);
        rec.set("c_stderr", fit.c_stderr);
        rec.set("residual_norm", fit.residual_norm);
        rec.set("num_points", static_cast<long long>(fit.num_points));
      }
      break;
    }
    case FitKind::kLifshitz: {
      ProbabilityVector probs;
      const auto curves = collect_curves(rows, &probs);
      const std::size_t L = request.L ? *request.L : curves.rbegin()->first;
      const auto it = curves.find(L);
      if (it == curves.end()) {
        throw ConfigError("no arc rows at L=" + std::to_string(L));
      }
      const LifshitzFit fit = fit_lifshitz(it->second, request.window, request.lifshitz);
      const LnSineFit sine = fit_ln_sine(it->second, request.window);
      set_probs(probs);
      rec.set("L", static_cast<long long>(L));
      rec.set("window_l_min", static_cast<long long>(request.window.l_min));
      rec.set("beta", fit.beta);
      rec.set("lambda", fit.lambda);
      rec.set("a", fit.a);
      rec.set("residual_norm", fit.residual_norm);
      rec.set("beta_over_ln2", fit.beta / std::numbers::ln2);
      rec.set("lambda_over_ln2", fit.lambda / std::numbers::ln2);
      rec.set("ln_sine_k", sine.k);
      rec.set("ln_sine_residual_norm", sine.residual_norm);
      const double x = 0.01;
      const double lead = -std::numbers::pi / (24.0 * x);
      rec.set("asymptote_rel_dev_x0.01", std::abs(lifshitz_J(x, fit.lambda) / lead - 1.0));
      break;
    }
    case FitKind::kTmiCrossing: {
      std::vector<TmiPoint> data;
      std::vector<std::size_t> sizes;
      for (const auto& r : rows) {
        data.push_back({r.L, scan_value(r.probs, request.scan_parameter), r.mean, r.stderr});
        if (std::find(sizes.begin(), sizes.end(), r.L) == sizes.end()) {
          sizes.push_back(r.L);
        }
      }
      std::sort(sizes.begin(), sizes.end());
      const CrossingResult res = tmi_crossing(data, request.crossing);
      rec.set("scan_parameter", request.scan_parameter);
      rec.set("L_values", join_sizes(sizes));
      rec.set("p_c", res.p_c);
      rec.set("p_c_stderr", res.p_c_stderr);
      rec.set("nu_inverse", res.nu_inverse);
      rec.set("collapse_cost", res.collapse_cost);
      rec.set("num_crossings", static_cast<long long>(res.crossings.size()));
      for (const auto& c : res.crossings) {
        const std::string key = "crossing_" + std::to_string(c.L1) + "_" + std::to_string(c.L2);
        rec.set(key, c.p);
        rec.set(key + "_stderr", c.stderr);
      }
      break;
    }
  }
  return rec;
}

}  // namespace hexmon
