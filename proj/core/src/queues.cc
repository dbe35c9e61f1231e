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

#include "vnfwdm/queues.h"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

#include "vnfwdm/error.h"
#include "vnfwdm/rate_bounds.h"

namespace vnfwdm {
namespace {

Partition Build(const Scenario& s, double eps, double upper, int points,
                const std::string& what) {
  if (!(eps > 0.0) || !(upper > eps)) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("{}: approximation needs 0 < eps < E, got [{}, {}]; set "
                            "explicit bounds in the approx block",
                            what, eps, upper));
  }
  if (s.approx.shift_mode == ShiftMode::kOverApproximate && s.approx.shift < 0.0) {
    throw Error(ErrorKind::kInvalidArgument, "approximation shift must be >= 0");
  }
  Partition p = ComputePartition(eps, upper, points, s.approx.shift);
  if (s.approx.shift_mode == ShiftMode::kBalanced) p.shift = -0.5 * p.MaxError();
  return p;
}

}  // namespace

QueuePlan ResolveQueues(const Scenario& s) {
  const SubstrateNetwork& g = s.substrate;
  const double mu_bar = g.line_rate();
  const auto bounds = PropagateRateBounds(s);
  QueuePlan plan;

  if (s.approx.forwarding) {
    const QueueBoundsConfig& f = *s.approx.forwarding;
    if (f.upper < mu_bar - 1e-12) {
      throw Error(ErrorKind::kInvalidArgument,
                  fmt::format("forwarding E = {} must be at least the line rate {}",
                              f.upper, mu_bar));
    }
    plan.forwarding = Build(s, f.eps, f.upper, f.base_points, "forwarding queues");
  } else {
    double max_arc = 0.0;
    for (const auto& per_request : bounds) {
      for (double b : per_request) max_arc = std::max(max_arc, b);
    }
    plan.forwarding = Build(s, mu_bar - max_arc, mu_bar, s.approx.forwarding_base_points,
                            "forwarding queues");
  }

  plan.processing.resize(s.requests.size());
  for (std::size_t r = 0; r < s.requests.size(); ++r) {
    const Request& req = s.requests[r];
    const ForwardingGraph& fg = req.graph;
    plan.processing[r].resize(fg.num_nodes());
    for (int n : fg.functional()) {
      auto& per_vertex = plan.processing[r][n];
      per_vertex.resize(g.num_vertices());
      for (int v = 0; v < g.num_vertices(); ++v) {
        const std::string what =
            fmt::format("processing queue of '{}' at vertex {}", fg.name(n), g.vertex_id(v));
        auto it = s.approx.vertices.find(v);
        if (it != s.approx.vertices.end()) {
          per_vertex[v] = Build(s, it->second.eps, it->second.upper,
                                it->second.base_points, what);
          continue;
        }
        const double alpha = fg.node_alpha(n);
        const double room = g.capacity(v) - fg.node_beta(n);
        if (room <= 0.0) continue;
        if (alpha <= 0.0) {
          throw Error(ErrorKind::kInvalidArgument,
                      fmt::format("{}: service rate unbounded (alpha = 0); set explicit "
                                  "bounds in the approx block",
                                  what));
        }
        const double upper = room / alpha;
        const double eps = upper - NodeArrivalBound(req, bounds[r], n);
        per_vertex[v] = Build(s, eps, upper, s.approx.processing_base_points, what);
      }
    }
  }
  return plan;
}

}  // namespace vnfwdm
