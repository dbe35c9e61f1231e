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

#include "vnfwdm/topologies.h"

#include <utility>

#include <fmt/core.h>

#include "vnfwdm/error.h"

namespace vnfwdm {
namespace {

SubstrateNetwork FromPairs(const std::vector<std::pair<int, int>>& pairs,
                           int num_vertices, double delay, double line_rate,
                           int wavelengths,
                           std::vector<double> capacities = {}) {
  std::vector<std::string> ids;
  for (int v = 1; v <= num_vertices; ++v) ids.push_back(std::to_string(v));
  std::vector<DirectedEdge> fibers;
  for (const auto& [u, v] : pairs) fibers.push_back({u - 1, v - 1, delay});
  if (capacities.empty()) capacities.assign(num_vertices, 0.0);
  return SubstrateNetwork(std::move(ids), EdgesFromFibers(fibers),
                          std::move(capacities), wavelengths, line_rate);
}

// Single-VNF chain s -> f -> d.
Request ChainRequest(const std::string& function, double rate) {
  Request r;
  r.graph = ForwardingGraph({"s", function, "d"}, {{0, 1}, {1, 2}});
  r.initial_rates[0] = rate;
  return r;
}

}  // namespace

const std::vector<std::string>& BuiltinTopologyNames() {
  static const std::vector<std::string> names = {"path6", "barbell6", "cycle6"};
  return names;
}

SubstrateNetwork BuiltinTopology(std::string_view name, const TopologyOptions& o) {
  if (name == "path6") {
    return FromPairs({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}}, 6, o.delay,
                     o.line_rate, o.wavelengths);
  }
  if (name == "barbell6") {
    return FromPairs({{1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 6}}, 6,
                     o.delay, o.line_rate, o.wavelengths);
  }
  if (name == "cycle6") {
    return FromPairs({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}}, 6, o.delay,
                     o.line_rate, o.wavelengths);
  }
  throw Error(ErrorKind::kInvalidArgument, fmt::format("unknown topology '{}'", name));
}

std::vector<RoleAssignment> EnumerateRoleAssignments(int num_vertices) {
  std::vector<RoleAssignment> out;
  for (int a = 0; a < num_vertices; ++a) {
    for (int b = 0; b < num_vertices; ++b) {
      if (b == a) continue;
      for (int s = 0; s < num_vertices; ++s) {
        if (s == a || s == b) continue;
        out.push_back({a, b, s});
      }
    }
  }
  return out;
}

Scenario EvaluationScenario(const SubstrateNetwork& topology,
                            const RoleAssignment& roles, std::string name) {
  constexpr double kRate = 3.0;
  constexpr double kSmall = 5.0;
  constexpr double kLarge = 50.0;
  const int n = topology.num_vertices();
  std::vector<double> capacities(n, 0.0);
  capacities[roles.small_vertex] = kSmall;
  capacities[roles.large_vertex] = kLarge;

  Scenario s;
  s.name = std::move(name);
  s.substrate = topology.WithCapacities(std::move(capacities));
  Request r = ChainRequest("f", kRate);
  r.d_max = 0.0;
  r.source_restrictions.push_back({0, roles.source, 1.0});
  std::vector<int> destinations;
  for (int v = 0; v < n; ++v) {
    if (v != roles.small_vertex && v != roles.large_vertex && v != roles.source) {
      destinations.push_back(v);
    }
  }
  const double share = 1.0 / static_cast<double>(destinations.size());
  for (int v : destinations) r.dest_restrictions.push_back({2, v, share});
  s.requests.push_back(std::move(r));
  s.objective.C = {0.0, 100.0, 10.0, 0.0};
  s.objective.c = {0.0, 0.0, 0.0};

  const double mu_bar = topology.line_rate();
  s.approx.forwarding = QueueBoundsConfig{mu_bar - kRate, mu_bar, 6};
  s.approx.forwarding_base_points = 6;
  s.approx.vertices[roles.small_vertex] = {kSmall - kRate, kSmall, 4};
  s.approx.vertices[roles.large_vertex] = {kLarge - kRate, kLarge, 2};
  return s;
}

std::vector<Scenario> EnumeratePermutations(const SubstrateNetwork& topology,
                                            std::string_view topology_name) {
  if (topology.num_vertices() < 6) {
    throw Error(ErrorKind::kInvalidArgument,
                "permutation enumeration needs at least 6 vertices");
  }
  std::vector<Scenario> out;
  const auto roles = EnumerateRoleAssignments(topology.num_vertices());
  for (std::size_t i = 0; i < roles.size(); ++i) {
    const std::string name = topology_name.empty()
                                 ? fmt::format("perm{}", i)
                                 : fmt::format("{}_perm{}", topology_name, i);
    out.push_back(EvaluationScenario(topology, roles[i], name));
  }
  return out;
}

Scenario MotivationScenario(const MotivationOptions& o) {
  std::vector<double> capacities(6, 0.0);
  capacities[2] = o.small_capacity;
  capacities[3] = o.large_capacity;
  Scenario s;
  s.name = "motivation";
  s.substrate = FromPairs({{1, 3}, {2, 3}, {3, 4}, {4, 5}, {4, 6}}, 6, o.delay,
                          o.line_rate, o.wavelengths, std::move(capacities));
  Request first = ChainRequest("f", o.rate);
  first.source_restrictions.push_back({0, 0, 1.0});
  first.dest_restrictions.push_back({2, 4, 1.0});
  Request second = ChainRequest("g", o.rate);
  second.source_restrictions.push_back({0, 1, 1.0});
  second.dest_restrictions.push_back({2, 5, 1.0});
  s.requests = {std::move(first), std::move(second)};
  s.objective.C = {0.0, 100.0, 10.0, 0.0};

  // Both flows may share one lightpath, so the forwarding slack can drop to
  // mu_bar - 2 * rate; both functions may share one vertex as well.
  const double slack = o.line_rate - 2.0 * o.rate;
  if (slack > 0.0) s.approx.forwarding = QueueBoundsConfig{slack, o.line_rate, 6};
  s.approx.vertices[2] = {o.small_capacity - 2.0 * o.rate > 0.0
                              ? 0.5 * (o.small_capacity - 2.0 * o.rate)
                              : 0.05 * o.small_capacity,
                          o.small_capacity, 6};
  s.approx.vertices[3] = {0.5 * (o.large_capacity - 2.0 * o.rate), o.large_capacity, 4};
  return s;
}

}  // namespace vnfwdm
