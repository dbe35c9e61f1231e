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

#ifndef VNFWDM_BIG_M_H_
#define VNFWDM_BIG_M_H_

#include <vector>

#include "vnfwdm/paths.h"
#include "vnfwdm/queues.h"
#include "vnfwdm/scenario.h"

namespace vnfwdm {

// Constants of the big-M constraint families.
struct BigMPolicy {
  double lambda_min = 0.0;
  // lateness_fulfilled: x3 <= M (1 - x1). Either the explicit override or
  // (J - 1)(|V| - 1) * sum_e d_e + J / lambda_min, J the longest path in
  // nodes: every hop crosses at most |V| - 1 lightpaths, each no longer than
  // all fibers together, and every queue is charged 1 / lambda_min.
  double lateness = 0.0;
  // activation_lower / placement_lower: 1 / lambda_min, so an indicator can
  // only be 1 when its flow is at least lambda_min.
  double activation = 0.0;
  // placement_upper / activation_upper, per request and arc: the arc's rate
  // bound (offsets counted once per possible placement).
  std::vector<std::vector<double>> arc_rate;
};

// Throws Error(kInvalidArgument) if lambda_min <= 0.
BigMPolicy ComputeBigM(const Scenario& scenario);

// Approximate model: the largest value the left-hand side of a delay
// constraint can take. Every hop crosses at most |V| - 1 lightpaths, each
// charged its fixed route's delay plus the top knot value 1/eps + c of the
// forwarding partition; every interior node adds at most the largest top
// knot of its processing partitions. The approximate model bounds x3 and
// the lateness big-M by the maximum of this and BigMPolicy::lateness.
double ApproxDelayBound(const Scenario& scenario, const QueuePlan& queues,
                        const PathTable& paths);

// Longest source-to-destination path over all requests, in nodes.
int LongestPathNodes(const Scenario& scenario);

}  // namespace vnfwdm

#endif  // VNFWDM_BIG_M_H_
