// Copyright 2026 the qcontrol authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qcontrol/classify.hpp"
#include "qcontrol/optimizer.hpp"
#include "qcontrol/reachability.hpp"
#include "qcontrol/report.hpp"
#include "qcontrol/spec_file.hpp"
#include "qcontrol/version.hpp"

namespace {

using namespace qcontrol;

struct GlobalOpts {
  std::string format = "human";
  std::uint64_t seed = 0;
  double tolerance_scale = 1.0;
  std::string out_path;
};

struct LoadedSpec {
  SystemSpec spec;
  std::string path;
  std::string digest;
};

LoadedSpec load_with_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("cannot open spec file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string bytes = buf.str();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
  return {parse_system_spec(doc, path), path, fnv1a_digest(bytes)};
}

AnalysisReport make_report(const std::string& command, const LoadedSpec& loaded,
                           const GlobalOpts& g) {
  AnalysisReport report;
  report.command = command;
  report.input_path = loaded.path;
  report.input_digest = loaded.digest;
  report.system_label = loaded.spec.system.label;
  report.seed = g.seed;
  report.tolerance_scale = g.tolerance_scale;
  return report;
}

void emit(const AnalysisReport& report, const GlobalOpts& g) {
  const std::string rendered =
      g.format == "machine" ? report.to_json().dump(2) + "\n" : report.to_human();
  std::cout << rendered;
  if (!g.out_path.empty()) {
    std::ofstream out(g.out_path);
    if (!out) {
      throw ValidationError("cannot write report to '" + g.out_path + "'");
    }
    out << rendered;
  }
}

const DensityMatrix& resolve_state(const SystemSpec& spec, const std::string& name) {
  const auto it = spec.states.find(name);
  if (it == spec.states.end()) {
    std::string available;
    for (const auto& [n, s] : spec.states) {
      available += (available.empty() ? "" : ", ") + n;
    }
    throw ValidationError("unknown state '" + name + "'; available states: " +
                          (available.empty() ? "(none)" : available));
  }
  return it->second;
}

const HermitianMatrix& resolve_observable(const SystemSpec& spec, const std::string& name) {
  const auto it = spec.observables.find(name);
  if (it == spec.observables.end()) {
    std::string available;
    for (const auto& [n, o] : spec.observables) {
      available += (available.empty() ? "" : ", ") + n;
    }
    throw ValidationError("unknown observable '" + name + "'; available observables: " +
                          (available.empty() ? "(none)" : available));
  }
  return it->second;
}

AnalysisReport::Algebra analyze_algebra(const ControlSystem& system, double tolerance_scale) {
  ClosureOptions copts;
  copts.tolerance_scale = tolerance_scale;
  const LieAlgebraBasis basis = generate_dynamical_algebra(system, copts);
  AlgebraClass cls = classify_algebra(basis);
  AnalysisReport::Algebra a;
  a.dimension = cls.dim;
  a.contains_identity = basis.contains_identity;
  a.tolerance_warning = basis.tolerance_warning;
  a.tag = cls.tag;
  a.class_notes = cls.notes;
  a.verdict = controllability_verdict(cls, system.dim);
  a.form = std::move(cls.form);
  return a;
}

int run(int argc, char** argv) {
  CLI::App app{"qcontrol: controllability analysis of bilinear quantum control systems"};
  app.set_version_flag("--version", std::string("qcontrol ") + kVersion);
  app.fallthrough();
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--format", g.format, "Report format")
      ->check(CLI::IsMember({"human", "machine"}));
  app.add_option("--seed", g.seed, "Seed for randomized searches");
  app.add_option("--tolerance-scale", g.tolerance_scale,
                 "Multiplier on the closure rank tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", g.out_path, "Also write the report to this file");

  // classify
  auto* classify_cmd =
      app.add_subcommand("classify", "Dynamical Lie algebra, type and controllability");
  std::string classify_file;
  classify_cmd->add_option("file", classify_file, "System spec file")->required();

  // reach
  auto* reach_cmd = app.add_subcommand("reach", "Decide reachability between two named states");
  std::string reach_file, reach_from, reach_to;
  int reach_restarts = 20;
  reach_cmd->add_option("file", reach_file, "System spec file")->required();
  reach_cmd->add_option("--from", reach_from, "Initial state name")->required();
  reach_cmd->add_option("--to", reach_to, "Target state name")->required();
  reach_cmd->add_option("--restarts", reach_restarts, "Orbit-search restarts");

  // optimize
  auto* opt_cmd =
      app.add_subcommand("optimize", "Maximize an observable; compare against the bounds");
  std::string opt_file, opt_obs, opt_from, opt_pulse_out;
  OptimizerOptions oopts;
  int orbit_restarts = 20;
  opt_cmd->add_option("file", opt_file, "System spec file")->required();
  opt_cmd->add_option("--observable", opt_obs, "Observable name")->required();
  opt_cmd->add_option("--from", opt_from, "Initial state name")->required();
  opt_cmd->add_option("--steps", oopts.steps, "Pulse steps K");
  opt_cmd->add_option("--duration", oopts.duration, "Pulse duration T");
  opt_cmd->add_option("--restarts", oopts.restarts, "Pulse optimizer restarts");
  opt_cmd->add_option("--max-iters", oopts.max_iters, "Iteration cap per restart");
  opt_cmd->add_option("--orbit-restarts", orbit_restarts, "Orbit-bound restarts");
  opt_cmd->add_option("--pulse-out", opt_pulse_out, "Write the best pulse here");

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "Propagate a pulse file");
  std::string sim_file, sim_pulse, sim_state;
  bool sim_show_unitary = false;
  sim_cmd->add_option("file", sim_file, "System spec file")->required();
  sim_cmd->add_option("--pulse", sim_pulse, "Pulse file")->required();
  sim_cmd->add_option("--state", sim_state, "Initial state name");
  sim_cmd->add_flag("--show-unitary", sim_show_unitary, "Include the final unitary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (classify_cmd->parsed()) {
    const LoadedSpec loaded = load_with_digest(classify_file);
    AnalysisReport report = make_report("classify", loaded, g);
    report.algebra = analyze_algebra(loaded.spec.system, g.tolerance_scale);
    emit(report, g);
    return 0;
  }

  if (reach_cmd->parsed()) {
    const LoadedSpec loaded = load_with_digest(reach_file);
    const DensityMatrix& r0 = resolve_state(loaded.spec, reach_from);
    const DensityMatrix& r1 = resolve_state(loaded.spec, reach_to);
    SearchOptions sopts;
    sopts.seed = g.seed;
    sopts.restarts = reach_restarts;
    AnalysisReport report = make_report("reach", loaded, g);
    report.reach = AnalysisReport::Reach{reach_from, reach_to,
                                         reachable_verdict(loaded.spec.system, r0, r1, sopts)};
    emit(report, g);
    return 0;
  }

  if (opt_cmd->parsed()) {
    const LoadedSpec loaded = load_with_digest(opt_file);
    const DensityMatrix& r0 = resolve_state(loaded.spec, opt_from);
    const HermitianMatrix& a = resolve_observable(loaded.spec, opt_obs);
    oopts.seed = g.seed;

    ClosureOptions copts;
    copts.tolerance_scale = g.tolerance_scale;
    const LieAlgebraBasis basis = generate_dynamical_algebra(loaded.spec.system, copts);
    SearchOptions sopts;
    sopts.seed = g.seed;
    sopts.restarts = orbit_restarts;

    const OptimizationReport result = maximize_expectation(loaded.spec.system, r0, a, oopts);

    AnalysisReport report = make_report("optimize", loaded, g);
    AnalysisReport::Optimization o;
    o.observable = opt_obs;
    o.from = opt_from;
    o.kinematical_bound = result.kinematical_bound;
    o.orbit_bound_value = orbit_bound(basis, r0, a, sopts);
    o.best_value = result.best_dynamical_value;
    o.gap = result.gap;
    o.converged = result.converged;
    o.iterations = result.iterations;
    o.restarts = oopts.restarts;
    o.steps = oopts.steps;
    o.duration = oopts.duration;
    if (!opt_pulse_out.empty()) {
      save_pulse(result.best_pulse, opt_pulse_out);
      o.pulse_out = opt_pulse_out;
    }
    report.optimization = std::move(o);
    emit(report, g);
    return 0;
  }

  if (sim_cmd->parsed()) {
    const LoadedSpec loaded = load_with_digest(sim_file);
    const ControlPulse pulse = load_pulse(sim_pulse);
    const PropagationResult prop = propagate(loaded.spec.system, pulse);

    AnalysisReport report = make_report("simulate", loaded, g);
    AnalysisReport::Simulation s;
    s.state = sim_state;
    s.unitarity_defect = prop.unitarity_defect;
    if (sim_show_unitary) {
      s.final_unitary = prop.final_unitary;
    }
    if (!sim_state.empty()) {
      const DensityMatrix& r0 = resolve_state(loaded.spec, sim_state);
      const DensityMatrix final_state = evolve_density(r0, prop.final_unitary);
      for (const auto& [name, obs] : loaded.spec.observables) {
        s.expectations[name] = expectation(obs, final_state);
      }
      s.final_state = final_state.mat();
    }
    report.simulation = std::move(s);
    emit(report, g);
    return 0;
  }

  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const qcontrol::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const qcontrol::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
