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

#include "random_scenario.h"

#include <algorithm>
#include <string>
#include <vector>

#include "vnfwdm/rate_bounds.h"

namespace vnfwdm::testing {
namespace {

double Uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int Pick(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// One or two vertices with shares summing to one.
std::vector<PlacementShare> Shares(std::mt19937_64& rng, int node, int nv) {
  const int first = Pick(rng, 0, nv - 1);
  if (Pick(rng, 0, 2) != 0) return {{node, first, 1.0}};
  int second = Pick(rng, 0, nv - 2);
  if (second >= first) ++second;
  const double share = Uniform(rng, 0.3, 0.7);
  return {{node, first, share}, {node, second, 1.0 - share}};
}

}  // namespace

Scenario RandomScenario(std::mt19937_64& rng) {
  const int nv = Pick(rng, 3, 5);
  std::vector<std::string> ids;
  for (int v = 0; v < nv; ++v) ids.push_back("n" + std::to_string(v));
  // Random spanning tree plus a few extra fibers.
  std::vector<DirectedEdge> fibers;
  std::vector<std::vector<char>> has(nv, std::vector<char>(nv, 0));
  auto add = [&](int a, int b) {
    if (a == b || has[a][b]) return;
    has[a][b] = has[b][a] = 1;
    fibers.push_back({a, b, Uniform(rng, 0.05, 0.3)});
  };
  for (int v = 1; v < nv; ++v) add(v, Pick(rng, 0, v - 1));
  const int extra = Pick(rng, 0, nv - 2);
  for (int i = 0; i < extra; ++i) add(Pick(rng, 0, nv - 1), Pick(rng, 0, nv - 1));

  const double line_rate = Uniform(rng, 3.0, 6.0);
  Scenario s;
  s.name = "random";
  const int nr = Pick(rng, 1, 2);
  for (int r = 0; r < nr; ++r) {
    Request req;
    req.graph = ForwardingGraph({"s", "f", "d"}, {{0, 1}, {1, 2}});
    req.graph.set_node_coefficients(1, Uniform(rng, 0.5, 2.0), Uniform(rng, 0.0, 1.0));
    req.graph.set_arc_alpha(1, 0, Uniform(rng, 0.5, 1.5));
    req.graph.set_arc_beta(1, Uniform(rng, 0.0, 0.3));
    req.initial_rates[0] = Uniform(rng, 0.2, 0.35) * line_rate / nr;
    req.d_max = Uniform(rng, 0.0, 2.0);
    req.source_restrictions = Shares(rng, 0, nv);
    req.dest_restrictions = Shares(rng, 2, nv);
    s.requests.push_back(std::move(req));
  }
  // Capacities: zero, or room for every request's function with slack.
  std::vector<double> capacities(nv, 0.0);
  for (int v = 0; v < nv; ++v) {
    if (Pick(rng, 0, 3) == 0) continue;
    double need = 0.0;
    for (const Request& req : s.requests) {
      const auto bounds = PropagateRateBounds(req);
      const double arrival = NodeArrivalBound(req, bounds, 1);
      need = std::max(need, req.graph.node_beta(1) + req.graph.node_alpha(1) * arrival);
    }
    capacities[v] = need * Uniform(rng, 1.3, 4.0) * nr;
  }
  s.substrate = SubstrateNetwork(ids, EdgesFromFibers(fibers), capacities, Pick(rng, 1, 3),
                                 line_rate);
  s.objective.C = {Uniform(rng, 0.0, 5.0), 100.0, 10.0, Pick(rng, 0, 1) * 0.01};
  s.objective.c = {Uniform(rng, 0.0, 1.0), Uniform(rng, 0.0, 1.0), Uniform(rng, 0.0, 1.0)};
  return s;
}

Assignment RandomAssignment(const Model& model, std::mt19937_64& rng) {
  Assignment a;
  for (const Variable& v : model.variables()) {
    double value;
    if (v.lb == v.ub) {
      value = v.lb;
    } else if (v.type == VarType::kBinary) {
      value = static_cast<double>(Pick(rng, 0, 1));
    } else {
      value = Uniform(rng, v.lb, std::min(v.ub, v.lb + 3.0));
    }
    a.Set(v.name, value);
  }
  return a;
}

}  // namespace vnfwdm::testing
