// Copyright 2026 The vnfwdm Authors.
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

// vnfopt: scenario generation, model emission, solver runs, validation,
// oracle certificates and the evaluation matrix.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <nlohmann/json.hpp>

#include "harness/experiment.h"
#include "harness/solver_adapter.h"
#include "vnfwdm/error.h"
#include "vnfwdm/milp_builder.h"
#include "vnfwdm/miqcp_builder.h"
#include "vnfwdm/model_writer.h"
#include "vnfwdm/oracle.h"
#include "vnfwdm/scenario_io.h"
#include "vnfwdm/solution.h"
#include "vnfwdm/topologies.h"
#include "vnfwdm/validator.h"

namespace {

using namespace vnfwdm;

std::string Slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, fmt::format("cannot open '{}'", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Writes to `path`, or stdout when it is empty or "-".
void Emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error(ErrorKind::kIo, fmt::format("cannot write '{}'", path));
}

ModelKind ParseKind(const std::string& s) {
  if (s == "miqcp") return ModelKind::kMiqcp;
  if (s == "milp") return ModelKind::kMilp;
  throw Error(ErrorKind::kInvalidArgument, fmt::format("unknown formulation '{}'", s));
}

void WarnAll(const std::vector<std::string>& warnings) {
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
}

Scenario ReadScenario(const std::string& path) {
  std::vector<std::string> warnings;
  Scenario s = LoadScenario(path, &warnings);
  WarnAll(warnings);
  return s;
}

struct ModelFlags {
  std::string scenario;
  std::string formulation = "milp";
  bool fixed = false;
  int stage = 0;
  std::vector<double> locks;
  bool unbounded_aux = false;

  void Attach(CLI::App* app) {
    app->add_option("--scenario", scenario, "Scenario JSON file")->required();
    app->add_option("--formulation", formulation, "miqcp or milp")
        ->check(CLI::IsMember({"miqcp", "milp"}));
    app->add_flag("--fixed-topology", fixed, "Pin lightpaths to the fiber adjacency");
    app->add_option("--stage", stage, "Lexicographic stage 1-4 (0: weighted objective)")
        ->check(CLI::Range(0, 4));
    app->add_option("--lock", locks,
                    "Optimal values of the earlier stages, in order (o1, o2, o3)")
        ->expected(1, 3);
    app->add_flag("--unbounded-queue-aux", unbounded_aux,
                  "Leave eta/theta without the 1/eps upper bounds");
  }
  BuildOptions Build() const {
    BuildOptions b;
    b.fixed_topology = fixed;
    b.stage = stage;
    for (std::size_t i = 0; i < locks.size(); ++i) b.locks[i] = locks[i];
    b.bound_queue_auxiliaries = !unbounded_aux;
    return b;
  }
};

std::vector<int> ParseRange(const std::string& spec) {
  std::vector<int> out;
  std::istringstream in(spec);
  std::string part;
  while (std::getline(in, part, ',')) {
    const auto dash = part.find('-');
    try {
      if (dash == std::string::npos) {
        out.push_back(std::stoi(part));
      } else {
        const int lo = std::stoi(part.substr(0, dash)), hi = std::stoi(part.substr(dash + 1));
        for (int i = lo; i <= hi; ++i) out.push_back(i);
      }
    } catch (const std::exception&) {
      throw Error(ErrorKind::kInvalidArgument, fmt::format("malformed range '{}'", part));
    }
  }
  return out;
}

int ReportError(const char* kind, const std::string& message, int code) {
  nlohmann::json j = {{"error", {{"kind", kind}, {"message", message}}}};
  std::cerr << j.dump() << "\n";
  return code;
}

int Run(int argc, char** argv) {
  CLI::App app{"Joint VNF embedding and WDM lightpath optimization models"};
  app.require_subcommand(1);

  // gen
  CLI::App* gen = app.add_subcommand("gen", "Write evaluation scenarios as JSON");
  std::string gen_topology = "path6", gen_out;
  int gen_perm = -1;
  bool gen_all = false, gen_motivation = false;
  gen->add_option("--topology", gen_topology, "path6, barbell6 or cycle6");
  gen->add_option("--permutation", gen_perm, "Permutation index");
  gen->add_flag("--all", gen_all, "All permutations (output is a directory)");
  gen->add_flag("--motivation", gen_motivation, "The two-flow motivation example");
  gen->add_option("-o,--output", gen_out, "Output file or directory");

  // build
  CLI::App* build = app.add_subcommand("build", "Emit an LP or MPS model file");
  ModelFlags build_flags;
  build_flags.Attach(build);
  std::string build_format = "lp", build_out, build_stats;
  build->add_option("--format", build_format)->check(CLI::IsMember({"lp", "mps"}));
  build->add_option("-o,--output", build_out, "Model file");
  build->add_option("--stats", build_stats, "Write model statistics JSON");

  // solve
  CLI::App* solve = app.add_subcommand("solve", "Run the external solver adapter");
  ModelFlags solve_flags;
  solve_flags.Attach(solve);
  std::string solve_config, solve_out, solve_workdir = ".";
  double solve_limit = 3600.0;
  solve->add_option("--solver-config", solve_config,
                    fmt::format("Adapter JSON (default: ${})", harness::kSolverConfigEnv));
  solve->add_option("--time-limit", solve_limit);
  solve->add_option("--workdir", solve_workdir);
  solve->add_option("-o,--output", solve_out, "Assignment file");

  // validate
  CLI::App* validate = app.add_subcommand("validate", "Check an assignment against the model");
  ModelFlags val_flags;
  val_flags.Attach(validate);
  std::string val_solution, val_out;
  double val_tol = kTolerance;
  validate->add_option("--solution", val_solution, "Assignment file")->required();
  validate->add_option("--tolerance", val_tol);
  validate->add_option("-o,--output", val_out, "Report JSON");

  // oracle
  CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive search certificate");
  std::string or_scenario, or_formulation = "miqcp", or_out, or_solution;
  bool or_fixed = false, or_sequential = false;
  double or_seconds = 3600.0;
  long long or_nodes = OracleLimits{}.max_nodes;
  oracle->add_option("--scenario", or_scenario)->required();
  oracle->add_option("--formulation", or_formulation, "Delay semantics: miqcp or milp")
      ->check(CLI::IsMember({"miqcp", "milp"}));
  oracle->add_flag("--fixed-topology", or_fixed);
  oracle->add_flag("--sequential", or_sequential, "Place first, then reconfigure");
  oracle->add_option("--max-seconds", or_seconds);
  oracle->add_option("--max-nodes", or_nodes);
  oracle->add_option("-o,--output", or_out, "Certificate JSON");
  oracle->add_option("--solution-out", or_solution, "Also write the assignment");

  // experiment
  CLI::App* exp = app.add_subcommand("experiment", "Run the evaluation matrix");
  harness::ExperimentOptions eo;
  std::string exp_form = "milp", exp_mode = "both", exp_perms, exp_config, exp_out = "experiment.csv";
  exp->add_option("--topology", eo.topology);
  exp->add_option("--formulation", exp_form)->check(CLI::IsMember({"miqcp", "milp", "both"}));
  exp->add_option("--mode", exp_mode)->check(CLI::IsMember({"joint", "fixed", "both"}));
  exp->add_option("--permutations", exp_perms, "Subset such as 0-9,17");
  exp->add_flag("--oracle-fallback", eo.oracle_fallback, "Use the oracle instead of a solver");
  exp->add_option("--solver-config", exp_config);
  exp->add_option("--time-limit", eo.time_limit, "Per-cell limit in seconds");
  exp->add_option("--workers", eo.workers, "Worker threads (0: all cores)");
  exp->add_option("--workdir", eo.workdir, "Directory for model and solution files");
  exp->add_option("-o,--output", exp_out);

  // plotdata
  CLI::App* plot = app.add_subcommand("plotdata", "Aggregate experiment CSV into plot series");
  std::string plot_csv, plot_series = "lateness-gain", plot_out;
  plot->add_option("csv", plot_csv)->required();
  plot->add_option("--series", plot_series)
      ->check(CLI::IsMember({"lateness-gain", "approx-error", "exec-time"}));
  plot->add_option("-o,--output", plot_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return ReportError("usage", e.what(), 2);
  }

  if (gen->parsed()) {
    if (gen_motivation) {
      Emit(gen_out, ScenarioToJson(MotivationScenario()).dump(2) + "\n");
      return 0;
    }
    const std::vector<Scenario> all =
        EnumeratePermutations(BuiltinTopology(gen_topology), gen_topology);
    if (gen_all) {
      if (gen_out.empty()) throw Error(ErrorKind::kInvalidArgument, "--all needs -o <directory>");
      for (std::size_t i = 0; i < all.size(); ++i) {
        const auto path = std::filesystem::path(gen_out) /
                          fmt::format("{}_{:03d}.json", gen_topology, i);
        Emit(path.string(), ScenarioToJson(all[i]).dump(2) + "\n");
      }
      return 0;
    }
    if (gen_perm < 0 || gen_perm >= static_cast<int>(all.size())) {
      throw Error(ErrorKind::kInvalidArgument,
                  fmt::format("--permutation must be in [0, {})", all.size()));
    }
    Emit(gen_out, ScenarioToJson(all[gen_perm]).dump(2) + "\n");
    return 0;
  }

  if (build->parsed()) {
    const Scenario s = ReadScenario(build_flags.scenario);
    const Model m = BuildModel(s, ParseKind(build_flags.formulation), build_flags.Build());
    const ModelFormat fmt = build_format == "lp" ? ModelFormat::kLp : ModelFormat::kMps;
    Emit(build_out, WriteModel(m, fmt));
    if (!build_stats.empty()) {
      Emit(build_stats, ModelStatsToJson(ComputeModelStats(m)).dump(2) + "\n");
    }
    return 0;
  }

  if (solve->parsed()) {
    const Scenario s = ReadScenario(solve_flags.scenario);
    auto config = harness::ResolveSolverConfig(solve_config);
    if (!config) {
      throw Error(ErrorKind::kSolver,
                  fmt::format("no solver configured (--solver-config or ${})",
                              harness::kSolverConfigEnv));
    }
    const Model m = BuildModel(s, ParseKind(solve_flags.formulation), solve_flags.Build());
    std::filesystem::create_directories(solve_workdir);
    const auto base = std::filesystem::path(solve_workdir) / (s.name.empty() ? "model" : s.name);
    const std::string model_path =
        base.string() + (config->format == ModelFormat::kLp ? ".lp" : ".mps");
    const std::string sol_path = base.string() + ".sol";
    Emit(model_path, WriteModel(m, config->format));
    std::filesystem::remove(sol_path);
    const harness::SolverRun run =
        harness::RunSolver(*config, model_path, sol_path, std::min(solve_limit, config->time_limit));
    std::cerr << fmt::format("solver {} in {:.2f} s\n", harness::RunStatusName(run.status),
                             run.wall_seconds);
    if (!std::filesystem::exists(sol_path)) {
      throw Error(ErrorKind::kSolver,
                  fmt::format("solver {} without a solution file (exit {})",
                              harness::RunStatusName(run.status), run.exit_code));
    }
    const Assignment a = ParseSolution(Slurp(sol_path), m);
    WarnAll(a.warnings);
    Emit(solve_out, WriteSolution(m, a));
    return 0;
  }

  if (validate->parsed()) {
    const Scenario s = ReadScenario(val_flags.scenario);
    const ModelKind kind = ParseKind(val_flags.formulation);
    const Model m = BuildModel(s, kind, val_flags.Build());
    const Assignment a = ParseSolution(Slurp(val_solution), m);
    WarnAll(a.warnings);
    ValidateOptions vo;
    vo.tolerance = val_tol;
    vo.build = val_flags.Build();
    const ValidationReport report = Validate(s, kind, a, vo);
    Emit(val_out, ReportToJson(report).dump(2) + "\n");
    return report.feasible() ? 0 : 3;
  }

  if (oracle->parsed()) {
    const Scenario s = ReadScenario(or_scenario);
    OracleOptions oo;
    oo.kind = ParseKind(or_formulation);
    oo.fixed_topology = or_fixed;
    oo.limits.max_seconds = or_seconds;
    oo.limits.max_nodes = or_nodes;
    OracleResult result;
    bool fixed_for_model = or_fixed;
    nlohmann::json cert;
    if (or_sequential) {
      SequentialResult seq = SolveSequentialBaseline(s, oo);
      cert = CertificateToJson(s, seq.reconfiguration);
      cert["placement_stage"] = CertificateToJson(s, seq.placement);
      result = std::move(seq.reconfiguration);
      fixed_for_model = false;
    } else {
      result = SolveExhaustive(s, oo);
      cert = CertificateToJson(s, result);
    }
    Emit(or_out, cert.dump(2) + "\n");
    if (!or_solution.empty()) {
      BuildOptions b;
      b.fixed_topology = fixed_for_model;
      const Model m = BuildModel(s, oo.kind, b);
      Emit(or_solution, WriteSolution(m, result.assignment));
    }
    return 0;
  }

  if (exp->parsed()) {
    eo.formulations.clear();
    if (exp_form != "milp") eo.formulations.push_back(ModelKind::kMiqcp);
    if (exp_form != "miqcp") eo.formulations.push_back(ModelKind::kMilp);
    eo.modes.clear();
    if (exp_mode != "fixed") eo.modes.push_back(false);
    if (exp_mode != "joint") eo.modes.push_back(true);
    if (!exp_perms.empty()) eo.permutations = ParseRange(exp_perms);
    if (!eo.oracle_fallback) {
      eo.solver = harness::ResolveSolverConfig(exp_config);
      if (!eo.solver) {
        std::cerr << "warning: no solver configured; using the oracle for every cell\n";
      }
    }
    const auto records = harness::RunExperiment(eo, [](const harness::ExperimentRecord& r) {
      std::cerr << fmt::format("{} perm {:3d} {:5} {:5} {:10} {:.2f} s\n", r.topology, r.perm,
                               ModelKindName(r.formulation), r.fixed ? "fixed" : "joint",
                               r.status, r.wall_s);
    });
    Emit(exp_out, harness::RecordsToCsv(records));
    return 0;
  }

  if (plot->parsed()) {
    const auto records = harness::RecordsFromCsv(Slurp(plot_csv));
    Emit(plot_out, harness::PlotData(records, harness::ParsePlotSeries(plot_series)));
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return Run(argc, argv);
  } catch (const vnfwdm::Error& e) {
    return ReportError(vnfwdm::ErrorKindName(e.kind()), e.what(), 1);
  } catch (const std::exception& e) {
    return ReportError("internal", e.what(), 1);
  }
}
