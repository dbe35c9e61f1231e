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

// Acceptance suite: one PASS / FAIL / SKIP line per criterion. Exits 1 if
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "harness/experiment.h"
#include "harness/solver_adapter.h"
#include "lp_reader.h"
#include "random_scenario.h"
#include "vnfwdm/error.h"
#include "vnfwdm/milp_builder.h"
#include "vnfwdm/miqcp_builder.h"
#include "vnfwdm/model_writer.h"
#include "vnfwdm/oracle.h"
#include "vnfwdm/partition.h"
#include "vnfwdm/solution.h"
#include "vnfwdm/topologies.h"
#include "vnfwdm/validator.h"

namespace vnfwdm {
namespace {

enum class Verdict { kPass, kFail, kSkip };

struct Outcome {
  Verdict verdict = Verdict::kFail;
  std::string detail;
};

Outcome Check(bool ok, std::string detail) {
  return {ok ? Verdict::kPass : Verdict::kFail, std::move(detail)};
}

int CountRole(const Model& m, VarRole role) {
  return static_cast<int>(std::count_if(m.variables().begin(), m.variables().end(),
                                        [&](const Variable& v) { return v.role == role; }));
}

// Largest g~(x) - 1/x over `samples` evenly spaced points of [eps, E].
double ScanError(const Partition& p, int samples) {
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double x = p.eps + (p.upper - p.eps) * i / (samples - 1);
    worst = std::max(worst, EvalGtilde(p, x) - 1.0 / x);
  }
  return worst;
}

Outcome PartitionQuality() {
  // `expected` is the published approximate figure; the closed form of the
  // equal-error partition is (1/sqrt(eps) - 1/sqrt(E))^2 / (K)^2.
  struct Case {
    double eps, upper;
    int points;
    double expected, tolerance;
  };
  const Case cases[] = {{1.0, 4.0, 6, 0.01, 1e-9},
                        {2.0, 5.0, 4, 0.00751, 0.005 * 0.00751},
                        {47.0, 50.0, 2, 1.98e-5, 0.005 * 1.98e-5}};
  std::string detail;
  bool ok = true;
  for (const Case& c : cases) {
    const Partition p = ComputePartition(c.eps, c.upper, c.points);
    const double err = p.MaxError();
    const double closed =
        std::pow((1.0 / std::sqrt(c.eps) - 1.0 / std::sqrt(c.upper)) / (c.points - 1), 2.0);
    const double scan = ScanError(p, 1'000'000);
    // The scan never exceeds the closed form and comes within the grid
    // resolution of it.
    const bool case_ok = std::abs(err - closed) <= 1e-12 &&
                         std::abs(err - c.expected) <= c.tolerance && err < 0.01 + 1e-9 &&
                         scan <= err + 1e-12 && scan >= err - 1e-9;
    ok = ok && case_ok;
    detail += fmt::format("[{},{}]x{}: {:.6g} (closed form {:.6g}, scan {:.6g}, expected ~{:g}); ",
                          c.eps, c.upper, c.points, err, closed, scan, c.expected);
  }
  return Check(ok, detail);
}

Outcome OverApproximation() {
  std::mt19937_64 rng(20260421);
  std::uniform_real_distribution<double> eps_dist(0.01, 20.0), width(0.05, 60.0), shift(0.0, 0.5);
  std::uniform_int_distribution<int> points(2, 12);
  long long checks = 0, violations = 0;
  for (int i = 0; i < 1000; ++i) {
    const double eps = eps_dist(rng);
    const double c = i % 4 == 0 ? 0.0 : shift(rng);
    const Partition p = ComputePartition(eps, eps + width(rng), points(rng), c);
    for (int j = 0; j < 2000; ++j) {
      const double x = p.eps + (p.upper - p.eps) * j / 1999.0;
      const double g = 1.0 / x;
      ++checks;
      if (EvalGtilde(p, x) < g - 1e-12 * g) ++violations;
    }
  }
  return Check(violations == 0, fmt::format("{} violations in {} grid checks", violations, checks));
}

Outcome ModelSize() {
  const Scenario s = EnumeratePermutations(BuiltinTopology("path6"), "path6")[0];
  const Model m = BuildMiqcp(s);
  // Closed forms: |R| |A| |V|^4 flows, |V|^2 |E| |Gamma| routed lightpaths,
  // |V|^J tuples per forwarding-graph path.
  const int V = s.substrate.num_vertices(), E = s.substrate.num_edges();
  const int G = s.substrate.num_wavelengths(), A = s.requests[0].graph.num_arcs();
  const int paths = static_cast<int>(s.requests[0].graph.paths().size());
  const int J = static_cast<int>(s.requests[0].graph.paths()[0].size());
  const int lam = A * V * V * V * V, l = V * V * E * G;
  const int delay_per_path = static_cast<int>(std::pow(V, J));
  int delay = 0;
  for (const Constraint& c : m.constraints()) delay += c.family == "delay";
  const int got_lam = CountRole(m, VarRole::kLambda), got_l = CountRole(m, VarRole::kLightpath);
  const bool ok = got_lam == lam && lam == 2592 && got_l == l && l == 2160 &&
                  delay == delay_per_path * paths && delay_per_path == 216;
  return Check(ok, fmt::format("lambda {} (closed form {}), l {} ({}), delay rows {} over {} "
                               "path(s) ({} per path)",
                               got_lam, lam, got_l, l, delay, paths, delay_per_path));
}

Outcome OracleAgreement() {
  harness::ExperimentOptions o;
  o.formulations = {ModelKind::kMiqcp};
  o.oracle_fallback = true;
  const auto records = harness::RunExperiment(o);
  std::map<int, std::pair<const harness::ExperimentRecord*, const harness::ExperimentRecord*>>
      cells;
  int bad_status = 0;
  for (const auto& r : records) {
    if (r.status != "optimal") ++bad_status;
    (r.fixed ? cells[r.perm].second : cells[r.perm].first) = &r;
  }
  int order_violations = 0;
  double max_gain = 0.0;
  int max_perm = -1;
  for (const auto& [perm, pair] : cells) {
    const auto [joint, fixed] = pair;
    if (!joint || !fixed || !joint->exact_lateness || !fixed->exact_lateness) {
      ++bad_status;
      continue;
    }
    if (*joint->exact_lateness > *fixed->exact_lateness + 1e-9) ++order_violations;
    if (*joint->exact_lateness > 0.0) {
      const double gain = *fixed->exact_lateness / *joint->exact_lateness;
      if (gain > max_gain) {
        max_gain = gain;
        max_perm = perm;
      }
    }
  }
  const bool ok = records.size() == 240 && cells.size() == 120 && bad_status == 0 &&
                  order_violations == 0 && max_gain >= 2.0 && max_gain <= 3.5;
  return Check(ok, fmt::format("{} cells, {} not validated-optimal, {} joint > fixed; max gain "
                               "{:.4f} (perm {}), band [2.0, 3.5]",
                               records.size(), bad_status, order_violations, max_gain,
                               max_perm));
}

Outcome Motivation() {
  const Scenario s = MotivationScenario();
  const OracleResult joint = SolveExhaustive(s);
  const SequentialResult seq = SolveSequentialBaseline(s);
  const ValidationReport rep = Validate(s, ModelKind::kMiqcp, joint.assignment);
  const int f = s.requests[0].graph.FindNode("f").value();
  const int small = 2;  // v3
  const bool strictly_better = joint.objective < seq.reconfiguration.objective - 1e-9 &&
                               joint.max_lateness < seq.reconfiguration.max_lateness - 1e-9;
  const bool ok = joint.certified && seq.reconfiguration.certified && rep.feasible() &&
                  strictly_better && joint.placements[0][f] == small;
  return Check(ok, fmt::format("joint lateness {:.4f} vs sequential {:.4f}; f placed on v{}",
                               joint.max_lateness, seq.reconfiguration.max_lateness,
                               joint.placements[0][f] + 1));
}

std::vector<int> PermutationsFromEnv() {
  std::vector<int> perms;
  if (const char* env = std::getenv("VNFWDM_ACCEPTANCE_PERMS")) {
    std::stringstream in(env);
    std::string item;
    while (std::getline(in, item, ',')) {
      const auto dash = item.find('-');
      const int lo = std::stoi(item.substr(0, dash));
      const int hi = dash == std::string::npos ? lo : std::stoi(item.substr(dash + 1));
      for (int i = lo; i <= hi; ++i) perms.push_back(i);
    }
  }
  return perms;
}

Outcome MilpError() {
  const auto solver = harness::ResolveSolverConfig("");
  if (!solver) {
    return {Verdict::kSkip, fmt::format("no solver configured (set {})", harness::kSolverConfigEnv)};
  }
  harness::ExperimentOptions o;
  o.formulations = {ModelKind::kMilp};
  o.solver = solver;
  o.time_limit = std::min(600.0, solver->time_limit);
  o.permutations = PermutationsFromEnv();
  o.workdir = "acceptance_milp";
  o.workers = 1;
  const auto records = harness::RunExperiment(o);
  int solved = 0, accurate = 0, invalid = 0;
  double max_wall = 0.0;
  for (const auto& r : records) {
    max_wall = std::max(max_wall, r.wall_s);
    if (r.status == "invalid") ++invalid;
    if ((r.status == "optimal" || r.status == "feasible") && r.approx_error) {
      ++solved;
      accurate += *r.approx_error < 0.01;
    }
  }
  const double fraction = solved > 0 ? static_cast<double>(accurate) / solved : 0.0;
  const bool ok = solved > 0 && invalid == 0 && fraction >= 0.7 && max_wall <= 600.0 + 15.0;
  return Check(ok, fmt::format("{} cells, {} solved, {} invalid; error < 0.01 in {:.3f}; "
                               "max wall {:.1f} s",
                               records.size(), solved, invalid, fraction, max_wall));
}

Outcome RoundTrip() {
  std::mt19937_64 rng(7);
  long long rows = 0;
  double worst = 0.0;
  int mismatches = 0;
  for (int i = 0; i < 50; ++i) {
    const Scenario s = testing::RandomScenario(rng);
    const ModelKind kind = i % 2 == 0 ? ModelKind::kMiqcp : ModelKind::kMilp;
    const Model m = BuildModel(s, kind);
    const testing::LpFile lp = testing::ReadLp(WriteLp(m));
    const Assignment a = testing::RandomAssignment(m, rng);
    const Assignment parsed = ParseSolution(WriteSolution(m, a), m);
    ValidateOptions vo;
    vo.record_residuals = true;
    const ValidationReport rep = Validate(s, kind, parsed, vo);
    const std::vector<double> x = DenseValues(m, a);
    for (int c = 0; c < m.num_constraints(); ++c) {
      const std::string& name = m.constraint(c).name;
      const double ir = m.Residual(c, x);
      const auto it = rep.residuals.find(name);
      const double scale = std::max(1.0, std::abs(ir));
      const double d_val = it == rep.residuals.end() ? kInfinity : std::abs(it->second - ir);
      const double d_lp = lp.rows.count(name) ? std::abs(lp.Residual(name, a.values) - ir)
                                               : kInfinity;
      worst = std::max(worst, std::max(d_val, d_lp) / scale);
      if (d_val > 1e-9 * scale || d_lp > 1e-9 * scale) ++mismatches;
      ++rows;
    }
  }
  return Check(mismatches == 0,
               fmt::format("{} rows over 50 scenarios, {} mismatches, worst scaled gap {:.3g}",
                           rows, mismatches, worst));
}

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace vnfwdm

int main() {
  using namespace vnfwdm;
  const Criterion criteria[] = {
      {"partition-error", 1.0, PartitionQuality},
      {"over-approximation", 10.0, OverApproximation},
      {"model-size", 5.0, ModelSize},
      {"oracle-validator-agreement", 1800.0, OracleAgreement},
      {"motivation-example", 60.0, Motivation},
      {"milp-approximation-error", kInfinity, MilpError},
      {"emission-round-trip", 30.0, RoundTrip},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {Verdict::kFail, fmt::format("exception: {}", e.what())};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.verdict != Verdict::kSkip && secs > c.budget_seconds) {
      out.verdict = Verdict::kFail;
      out.detail += fmt::format(" over the {:.0f} s budget", c.budget_seconds);
    }
    const char* tag = out.verdict == Verdict::kPass   ? "PASS"
                      : out.verdict == Verdict::kSkip ? "SKIP"
                                                      : "FAIL";
    fmt::print("{} {} ({:.2f} s): {}\n", tag, c.name, secs, out.detail);
    std::fflush(stdout);
    failures += out.verdict == Verdict::kFail;
  }
  return failures == 0 ? 0 : 1;
}
