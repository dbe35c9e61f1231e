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

#include "vnfwdm/rate_bounds.h"

namespace vnfwdm {
namespace {

std::vector<double> Propagate(const Request& request, double beta_copies) {
  const ForwardingGraph& fg = request.graph;
  std::vector<double> bound(fg.num_arcs(), 0.0);
  for (int n : fg.topological_order()) {
    for (int out : fg.out_arcs(n)) {
      if (fg.role(n) == NodeRole::kSource) {
        auto it = request.initial_rates.find(out);
        bound[out] = it == request.initial_rates.end() ? 0.0 : it->second;
        continue;
      }
      double total = beta_copies * fg.arc_beta(out);
      for (int in : fg.in_arcs(n)) total += fg.arc_alpha(out, in) * bound[in];
      bound[out] = total;
    }
  }
  return bound;
}

}  // namespace

std::vector<double> PropagateRateBounds(const Request& request) {
  return Propagate(request, 1.0);
}

std::vector<std::vector<double>> PropagateRateBounds(const Scenario& scenario) {
  std::vector<std::vector<double>> out;
  for (const Request& r : scenario.requests) out.push_back(PropagateRateBounds(r));
  return out;
}

std::vector<double> PlacementSafeRateBounds(const Request& request, int placements) {
  return Propagate(request, static_cast<double>(placements));
}

double NodeArrivalBound(const Request& request, const std::vector<double>& arc_bounds,
                        int node) {
  double total = 0.0;
  for (int in : request.graph.in_arcs(node)) total += arc_bounds[in];
  return total;
}

}  // namespace vnfwdm
