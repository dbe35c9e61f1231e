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

#ifndef VNFWDM_TOPOLOGIES_H_
#define VNFWDM_TOPOLOGIES_H_

#include <string>
#include <string_view>
#include <vector>

#include "vnfwdm/scenario.h"

namespace vnfwdm {

struct TopologyOptions {
  double delay = 0.1;
  double line_rate = 4.0;
  int wavelengths = 6;
};

// "path6", "barbell6" or "cycle6"; vertices are named "1".."6" and carry no
// compute capacity. Throws Error(kInvalidArgument) for other names.
SubstrateNetwork BuiltinTopology(std::string_view name,
                                 const TopologyOptions& options = {});
const std::vector<std::string>& BuiltinTopologyNames();

// Vertex indices of the three distinct roles of one evaluation permutation.
struct RoleAssignment {
  int small_vertex = 0;  // compute capacity 5
  int large_vertex = 0;  // compute capacity 50
  int source = 0;
};

// All injective (small, large, source) assignments in lexicographic index
// order; 120 for six vertices.
std::vector<RoleAssignment> EnumerateRoleAssignments(int num_vertices);

// Single multicast request s -> f -> d with initial rate 3, source pinned at
// `roles.source` and the remaining vertices as destinations with equal
// shares. Objective C = (0, 100, 10, 0); queue bounds are set explicitly to
// [mu_bar - 3, mu_bar] (6 base points) for forwarding, [c - 3, c] with 4
// base points for capacity 5 and 2 base points for capacity 50.
Scenario EvaluationScenario(const SubstrateNetwork& topology,
                            const RoleAssignment& roles, std::string name);

// Throws Error(kInvalidArgument) if the topology has fewer than 6 vertices.
std::vector<Scenario> EnumeratePermutations(const SubstrateNetwork& topology,
                                            std::string_view topology_name = "");

struct MotivationOptions {
  double rate = 1.8;
  double small_capacity = 5.0;
  double large_capacity = 50.0;
  double line_rate = 4.0;
  int wavelengths = 2;
  double delay = 0.1;
};

// Two-flow example: v1, v2 attach to v3; v3 - v4; v5, v6 attach to v4. Flow
// 0 goes v1 -> f -> v5, flow 1 goes v2 -> g -> v6. v3 is the small compute
// vertex, v4 the large one.
Scenario MotivationScenario(const MotivationOptions& options = {});

}  // namespace vnfwdm

#endif  // VNFWDM_TOPOLOGIES_H_
