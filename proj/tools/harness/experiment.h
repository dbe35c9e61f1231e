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

#ifndef VNFWDM_TOOLS_HARNESS_EXPERIMENT_H_
#define VNFWDM_TOOLS_HARNESS_EXPERIMENT_H_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "harness/solver_adapter.h"
#include "vnfwdm/model.h"
#include "vnfwdm/oracle.h"
#include "vnfwdm/scenario.h"

namespace vnfwdm::harness {

// One (topology, permutation, formulation, reconfiguration mode) cell.
struct ExperimentRecord {
  std::string topology;
  int perm = 0;
  ModelKind formulation = ModelKind::kMilp;
  bool fixed = false;  // reconfiguration mode: fixed adjacency vs joint
  // optimal, feasible, timeout, infeasible, failed, invalid or error.
  std::string status;
  std::optional<double> lateness;        // x4 reported by the cell
  std::optional<double> exact_lateness;  // re-evaluated with exact delays
  std::optional<double> approx_error;    // relative |x4 - exact| (MILP cells)
  double wall_s = 0.0;
};

struct ExperimentOptions {
  std::string topology = "path6";
  std::vector<ModelKind> formulations = {ModelKind::kMilp};
  std::vector<bool> modes = {false, true};  // joint, fixed
  std::vector<int> permutations;            // empty: all
  // Use the exhaustive oracle instead of an external solver. Implied when no
  // solver is configured.
  bool oracle_fallback = false;
  std::optional<SolverAdapterConfig> solver;
  double time_limit = 3600.0;
  int workers = 0;  // 0: hardware concurrency
  std::string workdir = ".";
  OracleLimits oracle_limits;
};

// Runs one cell; never throws (failures are carried in the status).
ExperimentRecord RunCell(const Scenario& scenario, const std::string& topology, int perm,
                         ModelKind formulation, bool fixed, const ExperimentOptions& options);

// Records in (permutation, formulation, mode) order regardless of how many
// workers ran them. `progress` (optional) is called after every cell from a
// single thread at a time.
std::vector<ExperimentRecord> RunExperiment(
    const ExperimentOptions& options,
    const std::function<void(const ExperimentRecord&)>& progress = {});

inline constexpr char kCsvVersionLine[] = "# vnfopt experiment csv v1";

std::string RecordsToCsv(const std::vector<ExperimentRecord>& records);
// Throws Error(kParse) on a malformed CSV.
std::vector<ExperimentRecord> RecordsFromCsv(const std::string& text);

enum class PlotSeries { kLatenessGain, kApproxError, kExecTime };

// Throws Error(kInvalidArgument) for unknown names.
PlotSeries ParsePlotSeries(const std::string& name);

// Whitespace-separated columns with a '#' header line. Lateness gain is
// fixed / joint exact lateness per (topology, formulation, permutation);
// approximation error and execution time come as empirical CDFs.
std::string PlotData(const std::vector<ExperimentRecord>& records, PlotSeries series);

}  // namespace vnfwdm::harness

#endif  // VNFWDM_TOOLS_HARNESS_EXPERIMENT_H_
