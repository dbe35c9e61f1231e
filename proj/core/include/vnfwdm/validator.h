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

#ifndef VNFWDM_VALIDATOR_H_
#define VNFWDM_VALIDATOR_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vnfwdm/build_options.h"
#include "vnfwdm/model.h"
#include "vnfwdm/scenario.h"
#include "vnfwdm/solution.h"

namespace vnfwdm {

struct ValidateOptions {
  double tolerance = kTolerance;
  // Keep the residual (activity - rhs) of every re-evaluated row by name.
  bool record_residuals = false;
  // The options the model was built with (pins, bounds, stage locks).
  BuildOptions build;
};

struct ConstraintViolation {
  std::string name;
  std::string family;
  double residual = 0.0;  // activity - rhs, or the offending value
  double amount = 0.0;    // distance to feasibility
};

struct RequestCheck {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;  // lateness according to the model
  // Max over positive-flow (path, tuple) of exact delay - d_max, floored
  // at 0; empty when some queue on an active path is unstable.
  std::optional<double> exact_lateness;
  std::string unstable_reason;
  // Approximate model: |x3 - exact lateness| and its ratio to the exact
  // lateness (when positive).
  std::optional<double> approximation_error;
  std::optional<double> relative_error;
  bool fulfilled_consistent = true;  // x1 = 1 implies exact lateness ~ 0
  bool embedded_consistent = true;   // x2 = 1 iff the source arcs carry flow
  int worst_path = -1;
  std::vector<int> worst_tuple;
};

struct ValidationReport {
  ModelKind kind = ModelKind::kMiqcp;
  int num_rows = 0;  // re-evaluated constraints
  std::vector<ConstraintViolation> violations;
  std::map<std::string, int> violations_by_family;
  std::vector<RequestCheck> requests;
  double objective = 0.0;
  std::map<std::string, double> residuals;

  bool feasible() const { return violations.empty(); }
};

// Re-evaluates every constraint the builder of `kind` generates, directly
// from the scenario and the assignment values, plus variable bounds and
// integrality ("bounds"), SOS2 adjacency ("sos2") and queue stability on
// active paths ("queue_stability"). Violations are report content; this
// only throws for an invalid scenario.
ValidationReport Validate(const Scenario& scenario, ModelKind kind,
                          const Assignment& assignment, const ValidateOptions& options = {});

nlohmann::json ReportToJson(const ValidationReport& report, std::size_t max_violations = 100);

}  // namespace vnfwdm

#endif  // VNFWDM_VALIDATOR_H_
