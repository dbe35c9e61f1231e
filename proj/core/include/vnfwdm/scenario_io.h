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

#ifndef VNFWDM_SCENARIO_IO_H_
#define VNFWDM_SCENARIO_IO_H_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vnfwdm/scenario.h"

namespace vnfwdm {

// Reads and validates a scenario JSON file. Syntax errors are reported as
// Error(kParse) with the line number, schema errors with the field path, and
// broken invariants as Error(kInvariant). Validation warnings are appended
// to `warnings` when non-null.
Scenario LoadScenario(const std::string& path,
                      std::vector<std::string>* warnings = nullptr);
Scenario ParseScenario(const std::string& text,
                       std::vector<std::string>* warnings = nullptr);
Scenario ScenarioFromJson(const nlohmann::json& json,
                          std::vector<std::string>* warnings = nullptr);

// Deterministic serialization; ParseScenario(ScenarioToJson(s).dump()) is
// equivalent to s.
nlohmann::json ScenarioToJson(const Scenario& scenario);
void SaveScenario(const Scenario& scenario, const std::string& path);

}  // namespace vnfwdm

#endif  // VNFWDM_SCENARIO_IO_H_
