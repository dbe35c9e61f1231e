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

#include "harness/experiment.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include <fmt/core.h>

#include "vnfwdm/error.h"
#include "vnfwdm/milp_builder.h"
#include "vnfwdm/miqcp_builder.h"
#include "vnfwdm/model_writer.h"
#include "vnfwdm/solution.h"
#include "vnfwdm/topologies.h"
#include "vnfwdm/validator.h"

namespace vnfwdm::harness {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

// Exact lateness of the embedded requests, and the relative error of the
// reported lateness against it.
void FillFromReport(const ValidationReport& report, double x4, ModelKind kind,
                    ExperimentRecord* rec) {
  rec->lateness = x4;
  double exact = 0.0;
  bool known = true;
  for (const RequestCheck& rc : report.requests) {
    if (rc.x2 < 0.5) continue;
    if (!rc.exact_lateness) {
      known = false;
      break;
    }
    exact = std::max(exact, *rc.exact_lateness);
  }
  if (!known) return;
  rec->exact_lateness = exact;
  if (kind == ModelKind::kMilp) {
    const double diff = std::abs(x4 - exact);
    rec->approx_error = exact > 0.0 ? diff / exact : diff;
  }
}

std::string Lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, fmt::format("cannot open '{}'", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void RunWithSolver(const Scenario& scenario, const std::string& stem, ModelKind kind,
                   bool fixed, const ExperimentOptions& options, ExperimentRecord* rec) {
  const SolverAdapterConfig& solver = *options.solver;
  BuildOptions build;
  build.fixed_topology = fixed;
  const Model model = BuildModel(scenario, kind, build);
  std::filesystem::create_directories(options.workdir);
  const std::string ext = solver.format == ModelFormat::kLp ? ".lp" : ".mps";
  const std::string model_path = (std::filesystem::path(options.workdir) / (stem + ext)).string();
  const std::string sol_path = (std::filesystem::path(options.workdir) / (stem + ".sol")).string();
  {
    std::ofstream out(model_path);
    out << WriteModel(model, solver.format);
    if (!out) throw Error(ErrorKind::kIo, fmt::format("cannot write '{}'", model_path));
  }
  std::filesystem::remove(sol_path);
  const double limit = std::min(options.time_limit, solver.time_limit);
  const SolverRun run = RunSolver(solver, model_path, sol_path, limit);
  if (!std::filesystem::exists(sol_path)) {
    rec->status = run.status == RunStatus::kTimeout ? "timeout" : "failed";
    return;
  }
  const Assignment a = ParseSolution(Slurp(sol_path), model);
  const std::string st = Lower(a.status);
  if (st.find("infeasible") != std::string::npos) {
    rec->status = "infeasible";
    return;
  }
  if (a.values.empty()) {
    rec->status = run.status == RunStatus::kTimeout ? "timeout" : "failed";
    return;
  }
  ValidateOptions vo;
  vo.build = build;
  const ValidationReport report = Validate(scenario, kind, a, vo);
  FillFromReport(report, a.Get("x4"), kind, rec);
  if (!report.feasible()) {
    rec->status = "invalid";
  } else if (run.status == RunStatus::kFinished &&
             st.find("optimal") != std::string::npos) {
    rec->status = "optimal";
  } else if (run.status == RunStatus::kTimeout && st.empty()) {
    rec->status = "timeout";
  } else {
    rec->status = "feasible";
  }
}

void RunWithOracle(const Scenario& scenario, ModelKind kind, bool fixed,
                   const ExperimentOptions& options, ExperimentRecord* rec) {
  OracleOptions oo;
  oo.kind = kind;
  oo.fixed_topology = fixed;
  oo.limits = options.oracle_limits;
  oo.limits.max_seconds = std::min(oo.limits.max_seconds, options.time_limit);
  const OracleResult result = SolveExhaustive(scenario, oo);
  if (result.assignment.values.empty()) {
    rec->status = "timeout";
    return;
  }
  ValidateOptions vo;
  vo.build.fixed_topology = fixed;
  const ValidationReport report = Validate(scenario, kind, result.assignment, vo);
  FillFromReport(report, result.max_lateness, kind, rec);
  if (!report.feasible()) {
    rec->status = "invalid";
  } else {
    rec->status = result.certified ? "optimal" : "feasible";
  }
}

std::string FormatOptional(const std::optional<double>& v) {
  return v ? fmt::format("{:.10g}", *v) : std::string();
}

std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::optional<double> ParseOptional(const std::string& s, int line) {
  if (s.empty()) return std::nullopt;
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::kParse, fmt::format("line {}: malformed number '{}'", line, s));
  }
}

const char* ModeName(bool fixed) { return fixed ? "fixed" : "joint"; }

}  // namespace

ExperimentRecord RunCell(const Scenario& scenario, const std::string& topology, int perm,
                         ModelKind formulation, bool fixed, const ExperimentOptions& options) {
  ExperimentRecord rec;
  rec.topology = topology;
  rec.perm = perm;
  rec.formulation = formulation;
  rec.fixed = fixed;
  const auto start = Clock::now();
  try {
    if (options.oracle_fallback || !options.solver) {
      RunWithOracle(scenario, formulation, fixed, options, &rec);
    } else {
      const std::string stem = fmt::format("{}_{:03d}_{}_{}", topology, perm,
                                           ModelKindName(formulation), ModeName(fixed));
      RunWithSolver(scenario, stem, formulation, fixed, options, &rec);
    }
  } catch (const std::exception&) {
    rec.status = "error";
  }
  rec.wall_s = Seconds(start);
  return rec;
}

std::vector<ExperimentRecord> RunExperiment(
    const ExperimentOptions& options,
    const std::function<void(const ExperimentRecord&)>& progress) {
  const std::vector<Scenario> scenarios =
      EnumeratePermutations(BuiltinTopology(options.topology), options.topology);
  std::vector<int> perms = options.permutations;
  if (perms.empty()) {
    for (std::size_t i = 0; i < scenarios.size(); ++i) perms.push_back(static_cast<int>(i));
  }
  for (int p : perms) {
    if (p < 0 || p >= static_cast<int>(scenarios.size())) {
      throw Error(ErrorKind::kInvalidArgument,
                  fmt::format("permutation {} out of range [0, {})", p, scenarios.size()));
    }
  }
  struct Cell {
    int perm;
    ModelKind kind;
    bool fixed;
  };
  std::vector<Cell> cells;
  for (int p : perms) {
    for (ModelKind k : options.formulations) {
      for (bool f : options.modes) cells.push_back({p, k, f});
    }
  }
  std::vector<ExperimentRecord> records(cells.size());
  int workers = options.workers > 0 ? options.workers
                                    : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, std::max(1, static_cast<int>(cells.size())));
  std::atomic<std::size_t> next{0};
  std::mutex sink;
  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      const Cell& c = cells[i];
      records[i] = RunCell(scenarios[c.perm], options.topology, c.perm, c.kind, c.fixed, options);
      if (progress) {
        std::lock_guard<std::mutex> lock(sink);
        progress(records[i]);
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();
  return records;
}

std::string RecordsToCsv(const std::vector<ExperimentRecord>& records) {
  std::string out = kCsvVersionLine;
  out += "\ntopology,perm,formulation,mode,status,lateness,exact_lateness,approx_error,wall_s\n";
  for (const ExperimentRecord& r : records) {
    out += fmt::format("{},{},{},{},{},{},{},{},{:.6f}\n", r.topology, r.perm,
                       ModelKindName(r.formulation), ModeName(r.fixed), r.status,
                       FormatOptional(r.lateness), FormatOptional(r.exact_lateness),
                       FormatOptional(r.approx_error), r.wall_s);
  }
  return out;
}

std::vector<ExperimentRecord> RecordsFromCsv(const std::string& text) {
  std::vector<ExperimentRecord> records;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::vector<std::string> f = SplitCsv(line);
    if (!header) {
      if (f.size() != 9 || f[0] != "topology") {
        throw Error(ErrorKind::kParse, fmt::format("line {}: unexpected CSV header", line_no));
      }
      header = true;
      continue;
    }
    if (f.size() != 9) {
      throw Error(ErrorKind::kParse,
                  fmt::format("line {}: expected 9 fields, got {}", line_no, f.size()));
    }
    ExperimentRecord r;
    r.topology = f[0];
    const auto perm = ParseOptional(f[1], line_no);
    if (!perm) throw Error(ErrorKind::kParse, fmt::format("line {}: missing perm", line_no));
    r.perm = static_cast<int>(*perm);
    if (f[2] == "miqcp") {
      r.formulation = ModelKind::kMiqcp;
    } else if (f[2] == "milp") {
      r.formulation = ModelKind::kMilp;
    } else {
      throw Error(ErrorKind::kParse, fmt::format("line {}: unknown formulation '{}'", line_no, f[2]));
    }
    if (f[3] != "joint" && f[3] != "fixed") {
      throw Error(ErrorKind::kParse, fmt::format("line {}: unknown mode '{}'", line_no, f[3]));
    }
    r.fixed = f[3] == "fixed";
    r.status = f[4];
    r.lateness = ParseOptional(f[5], line_no);
    r.exact_lateness = ParseOptional(f[6], line_no);
    r.approx_error = ParseOptional(f[7], line_no);
    r.wall_s = ParseOptional(f[8], line_no).value_or(0.0);
    records.push_back(std::move(r));
  }
  if (!header) throw Error(ErrorKind::kParse, "CSV header missing");
  return records;
}

PlotSeries ParsePlotSeries(const std::string& name) {
  if (name == "lateness-gain") return PlotSeries::kLatenessGain;
  if (name == "approx-error") return PlotSeries::kApproxError;
  if (name == "exec-time") return PlotSeries::kExecTime;
  throw Error(ErrorKind::kInvalidArgument,
              fmt::format("unknown series '{}' (lateness-gain, approx-error, exec-time)", name));
}

std::string PlotData(const std::vector<ExperimentRecord>& records, PlotSeries series) {
  auto solved = [](const ExperimentRecord& r) {
    return r.status == "optimal" || r.status == "feasible";
  };
  auto lateness = [](const ExperimentRecord& r) {
    return r.exact_lateness ? r.exact_lateness : r.lateness;
  };
  std::string out;
  switch (series) {
    case PlotSeries::kLatenessGain: {
      using Key = std::tuple<std::string, std::string, int>;
      std::map<Key, std::pair<const ExperimentRecord*, const ExperimentRecord*>> cells;
      for (const ExperimentRecord& r : records) {
        auto& slot = cells[{r.topology, ModelKindName(r.formulation), r.perm}];
        (r.fixed ? slot.second : slot.first) = &r;
      }
      out = "# topology formulation perm joint_lateness fixed_lateness gain\n";
      for (const auto& [key, pair] : cells) {
        const auto [joint, fixed] = pair;
        if (!joint || !fixed || !solved(*joint) || !solved(*fixed)) continue;
        const auto lj = lateness(*joint), lf = lateness(*fixed);
        if (!lj || !lf || !(*lj > 0.0)) continue;
        out += fmt::format("{} {} {} {:.10g} {:.10g} {:.10g}\n", std::get<0>(key),
                           std::get<1>(key), std::get<2>(key), *lj, *lf, *lf / *lj);
      }
      break;
    }
    case PlotSeries::kApproxError: {
      std::vector<double> errors;
      for (const ExperimentRecord& r : records) {
        if (r.formulation == ModelKind::kMilp && solved(r) && r.approx_error) {
          errors.push_back(*r.approx_error);
        }
      }
      std::sort(errors.begin(), errors.end());
      out = "# relative_approx_error cdf\n";
      for (std::size_t i = 0; i < errors.size(); ++i) {
        out += fmt::format("{:.10g} {:.10g}\n", errors[i],
                           static_cast<double>(i + 1) / static_cast<double>(errors.size()));
      }
      break;
    }
    case PlotSeries::kExecTime: {
      std::map<std::pair<std::string, std::string>, std::vector<double>> groups;
      for (const ExperimentRecord& r : records) {
        groups[{ModelKindName(r.formulation), ModeName(r.fixed)}].push_back(r.wall_s);
      }
      out = "# formulation mode wall_s cdf\n";
      for (auto& [key, times] : groups) {
        std::sort(times.begin(), times.end());
        for (std::size_t i = 0; i < times.size(); ++i) {
          out += fmt::format("{} {} {:.6f} {:.10g}\n", key.first, key.second, times[i],
                             static_cast<double>(i + 1) / static_cast<double>(times.size()));
        }
      }
      break;
    }
  }
  return out;
}

}  // namespace vnfwdm::harness
