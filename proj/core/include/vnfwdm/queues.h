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

#ifndef VNFWDM_QUEUES_H_
#define VNFWDM_QUEUES_H_

#include <optional>
#include <vector>

#include "vnfwdm/partition.h"
#include "vnfwdm/scenario.h"

namespace vnfwdm {

// Resolved piecewise-linear setup of every queue of the approximate model.
struct QueuePlan {
  // Shared by all lightpath (forwarding) queues.
  Partition forwarding;
  // processing[r][n][v] for functional nodes; empty when the vertex cannot
  // host the node (no capacity), in which case the placement is pinned to 0.
  std::vector<std::vector<std::vector<std::optional<Partition>>>> processing;
};

// Forwarding bounds: the explicit config, else [mu_bar - max arc bound,
// mu_bar]; E must be at least mu_bar so that an idle lightpath's slack is
// representable. Processing bounds: a per-vertex override, else
// [E - arrival bound, E] with E = (c_v - beta^n) / alpha^n. Vertices with
// E <= 0 get no partition. Throws Error(kInvalidArgument) when a required
// range has E <= eps. The shift is the configured one, or minus half the
// partition's maximum error in balanced mode.
QueuePlan ResolveQueues(const Scenario& scenario);

}  // namespace vnfwdm

#endif  // VNFWDM_QUEUES_H_
