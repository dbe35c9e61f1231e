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

#ifndef VNFWDM_TOOLS_HARNESS_SOLVER_ADAPTER_H_
#define VNFWDM_TOOLS_HARNESS_SOLVER_ADAPTER_H_

#include <optional>
#include <string>

#include "vnfwdm/model_writer.h"

namespace vnfwdm::harness {

// External solver invocation. The command is run through /bin/sh after
// substituting {model}, {solution} and {time_limit}; the solver must write
// a solution file readable by ParseSolution ("name value" lines, optional
// "solution status:" and "objective value:" headers).
struct SolverAdapterConfig {
  std::string command;
  double time_limit = 3600.0;  // seconds
  ModelFormat format = ModelFormat::kLp;
};

inline constexpr char kSolverConfigEnv[] = "VNFOPT_SOLVER_CONFIG";

// JSON object {"command": ..., "time_limit": ..., "format": "lp" | "mps"}.
// Throws Error(kParse) on malformed input and Error(kInvalidArgument) when a
// placeholder is missing.
SolverAdapterConfig ParseSolverConfig(const std::string& text);
SolverAdapterConfig LoadSolverConfig(const std::string& path);

// Explicit path if given, else the file named by VNFOPT_SOLVER_CONFIG, else
// none.
std::optional<SolverAdapterConfig> ResolveSolverConfig(const std::string& explicit_path);

std::string ExpandCommand(const SolverAdapterConfig& config, const std::string& model_path,
                          const std::string& solution_path, double time_limit);

enum class RunStatus { kFinished, kTimeout, kFailed };

struct SolverRun {
  RunStatus status = RunStatus::kFailed;
  int exit_code = -1;
  double wall_seconds = 0.0;
  std::string command;
};

// Runs the solver in its own process group; the group is killed once the
// time limit (plus a grace period) has passed.
SolverRun RunSolver(const SolverAdapterConfig& config, const std::string& model_path,
                    const std::string& solution_path, double time_limit);

const char* RunStatusName(RunStatus status);

}  // namespace vnfwdm::harness

#endif  // VNFWDM_TOOLS_HARNESS_SOLVER_ADAPTER_H_
