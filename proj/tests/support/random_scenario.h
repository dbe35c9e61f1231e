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

#ifndef VNFWDM_TESTS_SUPPORT_RANDOM_SCENARIO_H_
#define VNFWDM_TESTS_SUPPORT_RANDOM_SCENARIO_H_

#include <random>

#include "vnfwdm/model.h"
#include "vnfwdm/scenario.h"
#include "vnfwdm/solution.h"

namespace vnfwdm::testing {

// Small connected substrate (3-5 vertices) with one or two single-function
// chains. Capacities are either 0 or leave a strictly positive processing
// slack, and rates stay below the line rate, so both the exact and the
// approximate model can be built. Every path has one functional node and
// all shares sum to one, so the oracle accepts the scenario too.
Scenario RandomScenario(std::mt19937_64& rng);

// Values for every variable within its bounds: binaries 0/1, continuous
// values uniform in [lb, min(ub, lb + 3)]. Pinned variables keep their pin.
Assignment RandomAssignment(const Model& model, std::mt19937_64& rng);

}  // namespace vnfwdm::testing

#endif  // VNFWDM_TESTS_SUPPORT_RANDOM_SCENARIO_H_
