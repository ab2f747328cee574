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

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hexmon/lattice.h"
#include "hexmon/runner.h"

using namespace hexmon;

namespace {

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    throw std::runtime_error("cannot write '" + path + "'");
  }
}

ProbabilityVector parse_point(const std::string& text) {
  std::vector<double> v;
  std::stringstream in(text);
  std::string cell;
  while (std::getline(in, cell, ',')) {
    v.push_back(std::stod(cell));
  }
  if (v.size() != 4) {
    throw ConfigError("--point needs p,px,py,pz, got '" + text + "'");
  }
  return {v[0], v[1], v[2], v[3]};
}

OperatorType parse_operator_type(const std::string& name) {
  for (const auto t : {OperatorType::kKx, OperatorType::kKy, OperatorType::kKz, OperatorType::kV}) {
    if (name == operator_type_name(t)) {
      return t;
    }
  }
  throw ConfigError("unknown operator type '" + name + "' (expected Kx, Ky, Kz or V)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hexmon: monitored Kitaev honeycomb circuits on a stabilizer simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", HEXMON_VERSION);

  // run
  CLI::App* run = app.add_subcommand("run", "Sample an experiment and write CSV plus a JSON sidecar");
  std::string config_path;
  std::string experiment;
  std::vector<std::size_t> L_list;
  std::string line;
  std::vector<double> p_values;
  double p_start = 0, p_stop = 0, p_step = 0;
  std::vector<std::string> points;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t sweeps = 0;
  std::string mode;
  std::string output;
  std::size_t threads = 0;
  bool tee_histogram = false;
  std::size_t audit_every = 0;
  bool quiet = false;
  run->add_option("--config", config_path, "JSON config file; flags override its fields")->check(CLI::ExistingFile);
  run->add_option("--experiment", experiment, "arc, tmi_scan, tee_scan, purify or phase_cut");
  run->add_option("--L", L_list, "Linear sizes")->delimiter(',');
  run->add_option("--line", line, "isotropic, edge_z or bottom_plane");
  run->add_option("--p", p_values, "Line parameter values")->delimiter(',');
  run->add_option("--p-start", p_start, "Line grid start");
  run->add_option("--p-stop", p_stop, "Line grid stop (inclusive)");
  run->add_option("--p-step", p_step, "Line grid step");
  run->add_option("--point", points, "Explicit point p,px,py,pz (repeatable)");
  run->add_option("--samples", samples, "Trajectories per point");
  run->add_option("--seed", seed, "Master seed");
  run->add_option("--sweeps", sweeps, "Sweeps per trajectory (0: max(50, 4L))");
  run->add_option("--mode", mode, "direct or ancilla");
  run->add_option("--output", output, "CSV path (relative to $HEXMON_OUTPUT_DIR if set)");
  run->add_option("--threads", threads, "Worker threads");
  run->add_flag("--tee-histogram", tee_histogram, "Also emit the per-sample gamma histogram");
  run->add_option("--audit-every", audit_every, "Log S(L/2) every this many sweeps");
  run->add_flag("--quiet", quiet, "No progress output");

  // fit
  CLI::App* fit = app.add_subcommand("fit", "Fit stored CSVs and write a flat JSON record");
  std::string fit_kind;
  std::vector<std::string> fit_inputs;
  std::string fit_output;
  std::size_t l_min = 2;
  std::size_t fit_L = 0;
  double fit_p = 0;
  std::string scan_parameter = "p";
  LifshitzOptions lifshitz;
  fit->add_option("kind", fit_kind, "page-ansatz, cft-collapse, lifshitz or tmi-crossing")->required();
  fit->add_option("--input,-i", fit_inputs, "Input CSV (repeatable)")->required()->check(CLI::ExistingFile);
  fit->add_option("--output,-o", fit_output, "JSON output path (default stdout)");
  fit->add_option("--l-min", l_min, "Fit window l_min <= l <= L - l_min");
  CLI::Option* fit_L_opt = fit->add_option("--L", fit_L, "Use only this size");
  CLI::Option* fit_p_opt = fit->add_option("--p", fit_p, "Use only rows at this V probability");
  fit->add_option("--scan-parameter", scan_parameter, "tmi-crossing abscissa: p, px, py or pz");
  fit->add_option("--lambda-min", lifshitz.lambda_min, "Lifshitz scan lower end");
  fit->add_option("--lambda-max", lifshitz.lambda_max, "Lifshitz scan upper end");
  fit->add_option("--lambda-grid", lifshitz.grid_points, "Lifshitz log-grid points");

  // selfcheck
  CLI::App* selfcheck = app.add_subcommand("selfcheck", "Run the embedded oracle suite");
  bool tamper = false;
  selfcheck->add_flag("--tamper-plaquette-convention", tamper)->group("");

  // graph
  CLI::App* graph = app.add_subcommand("graph", "Emit the frustration graph of the selected operators");
  std::size_t graph_L = 6;
  std::vector<std::string> graph_types = {"Kx", "Ky", "Kz", "V"};
  std::string graph_output;
  graph->add_option("--L", graph_L, "Linear size");
  graph->add_option("--types", graph_types, "Operator types among Kx, Ky, Kz, V")->delimiter(',');
  graph->add_option("--output,-o", graph_output, "Output path (default stdout)");

  // regions
  CLI::App* regions = app.add_subcommand("regions", "Emit region site lists or the lattice geometry");
  std::size_t regions_L = 12;
  std::string regions_kind = "tmi";
  std::size_t regions_l = 1;
  std::string regions_output;
  regions->add_option("--L", regions_L, "Linear size");
  regions->add_option("--kind", regions_kind, "tmi, tee, cylinder or lattice");
  regions->add_option("--l", regions_l, "Cylinder width for --kind cylinder");
  regions->add_option("--output,-o", regions_output, "Output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      ExperimentConfig config = config_path.empty() ? ExperimentConfig{} : config_from_json(read_text(config_path));
      if (run->count("--experiment")) {
        config.kind = parse_experiment_kind(experiment);
      }
      if (run->count("--L")) {
        config.L_list = L_list;
      }
      const bool line_flags = run->count("--line") || run->count("--p") || run->count("--p-start") ||
                              run->count("--p-stop") || run->count("--p-step");
      if (line_flags || run->count("--point")) {
        ProbabilitySpec spec;
        if (line_flags) {
          spec.line = run->count("--line") ? line : config.probs.line;
          spec.values = p_values;
          if (run->count("--p-start") || run->count("--p-stop") || run->count("--p-step")) {
            spec.start = p_start;
            spec.stop = p_stop;
            spec.step = p_step;
          }
        }
        for (const auto& pt : points) {
          spec.points.push_back(parse_point(pt));
        }
        config.probs = spec;
      }
      if (run->count("--samples")) {
        config.n_samples = samples;
      }
      if (run->count("--seed")) {
        config.seed = seed;
      }
      if (run->count("--sweeps")) {
        config.sweeps_total = sweeps;
      }
      if (run->count("--mode")) {
        config.mode = parse_circuit_mode(mode);
      }
      if (run->count("--output")) {
        config.output = output;
      }
      if (run->count("--threads")) {
        config.threads = threads;
      }
      if (run->count("--tee-histogram")) {
        config.tee_histogram = tee_histogram;
      }
      if (run->count("--audit-every")) {
        config.audit_every = audit_every;
      }
      if (config.probs.line.empty() && config.probs.points.empty()) {
        throw ConfigError("no probability points: give --line with --p or a grid, or --point");
      }
      config.validate();
      const auto start = std::chrono::steady_clock::now();
      const auto records = run_experiment(config, [&](std::size_t done, std::size_t total) {
        if (!quiet) {
          std::cerr << "\r[" << done << "/" << total << "] points" << (done == total ? "\n" : "") << std::flush;
        }
      });
      const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      const RunFiles files = write_run_outputs(config, records, wall);
      if (!quiet) {
        std::cerr << "wrote " << files.csv << " and " << files.metadata << "\n";
      }
      return 0;
    }
    if (fit->parsed()) {
      FitRequest request;
      request.kind = parse_fit_kind(fit_kind);
      request.inputs = fit_inputs;
      request.window.l_min = l_min;
      if (fit_L_opt->count()) {
        request.L = fit_L;
      }
      if (fit_p_opt->count()) {
        request.p = fit_p;
      }
      request.scan_parameter = scan_parameter;
      request.lifshitz = lifshitz;
      emit(run_fit(request).to_json() + "\n", fit_output);
      return 0;
    }
    if (selfcheck->parsed()) {
      const auto results =
          run_selfcheck(tamper ? PlaquetteConvention::kRotated : PlaquetteConvention::kStandard);
      bool ok = true;
      for (const auto& r : results) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
        ok &= r.passed;
      }
      std::cout << (ok ? "selfcheck passed" : "selfcheck FAILED") << "\n";
      return ok ? 0 : 1;
    }
    if (graph->parsed()) {
      std::vector<OperatorType> types;
      for (const auto& t : graph_types) {
        types.push_back(parse_operator_type(t));
      }
      emit(frustration_graph(HoneycombLattice::build(graph_L), types).dump(), graph_output);
      return 0;
    }
    if (regions->parsed()) {
      const HoneycombLattice lattice = HoneycombLattice::build(regions_L);
      std::string text;
      if (regions_kind == "tmi") {
        const auto r = tmi_regions(lattice);
        text = dump_regions(r);
      } else if (regions_kind == "tee") {
        const auto r = tee_regions(lattice);
        text = dump_regions(r);
      } else if (regions_kind == "cylinder") {
        const Region r = cylinder_region(lattice, regions_l);
        text = dump_regions(std::span<const Region>(&r, 1));
      } else if (regions_kind == "lattice") {
        text = lattice.dump();
      } else {
        throw ConfigError("unknown region kind '" + regions_kind + "' (expected tmi, tee, cylinder or lattice)");
      }
      emit(text, regions_output);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
