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

#include "vnfwdm/big_m.h"

#include <algorithm>
#include <vector>

#include <fmt/core.h>

#include "vnfwdm/error.h"
#include "vnfwdm/rate_bounds.h"

namespace vnfwdm {

int LongestPathNodes(const Scenario& scenario) {
  int longest = 0;
  for (const Request& r : scenario.requests) {
    for (const auto& path : r.graph.paths()) {
      longest = std::max(longest, static_cast<int>(path.size()));
    }
  }
  return longest;
}

namespace {

double TopKnot(const Partition& p) { return 1.0 / p.eps + std::max(p.shift, 0.0); }

}  // namespace

double ApproxDelayBound(const Scenario& scenario, const QueuePlan& queues,
                        const PathTable& paths) {
  const int nv = scenario.substrate.num_vertices();
  double max_route = 0.0;
  for (int w = 0; w < nv; ++w) {
    for (int wp = 0; wp < nv; ++wp) max_route = std::max(max_route, paths.delay(w, wp));
  }
  const double per_lightpath = max_route + TopKnot(queues.forwarding);
  double bound = 0.0;
  for (std::size_t r = 0; r < scenario.requests.size(); ++r) {
    const ForwardingGraph& fg = scenario.requests[r].graph;
    double max_proc = 0.0;
    for (int n : fg.functional()) {
      for (int v = 0; v < nv; ++v) {
        if (queues.processing[r][n][v]) {
          max_proc = std::max(max_proc, TopKnot(*queues.processing[r][n][v]));
        }
      }
    }
    for (const std::vector<int>& path : fg.paths()) {
      const int j = static_cast<int>(path.size());
      bound = std::max(bound, (j - 1) * (nv - 1) * per_lightpath + std::max(j - 2, 0) * max_proc);
    }
  }
  return bound;
}

BigMPolicy ComputeBigM(const Scenario& scenario) {
  BigMPolicy m;
  m.lambda_min = scenario.LambdaMin();
  if (!(m.lambda_min > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("lambda_min must be > 0 (got {})", m.lambda_min));
  }
  m.activation = 1.0 / m.lambda_min;
  const SubstrateNetwork& g = scenario.substrate;
  const int j = LongestPathNodes(scenario);
  if (scenario.big_m.lateness) {
    m.lateness = *scenario.big_m.lateness;
  } else {
    m.lateness = (j - 1) * (g.num_vertices() - 1) * g.TotalPropagation() +
                 j / m.lambda_min;
  }
  for (const Request& r : scenario.requests) {
    m.arc_rate.push_back(PlacementSafeRateBounds(r, g.num_vertices()));
  }
  return m;
}

}  // namespace vnfwdm
