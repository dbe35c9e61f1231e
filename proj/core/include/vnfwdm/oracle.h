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

#ifndef VNFWDM_ORACLE_H_
#define VNFWDM_ORACLE_H_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "vnfwdm/model.h"
#include "vnfwdm/scenario.h"
#include "vnfwdm/solution.h"

namespace vnfwdm {

struct OracleLimits {
  long long max_nodes = 200'000'000;  // search-tree nodes
  double max_seconds = 3600.0;
};

struct OracleOptions {
  // Delay semantics and assignment layout: exact sojourn times with routed
  // lightpaths, or interpolated sojourn times with eps margins.
  ModelKind kind = ModelKind::kMiqcp;
  bool fixed_topology = false;
  // Mirrors BuildOptions::bound_queue_auxiliaries for the exact model.
  bool bound_queue_auxiliaries = true;
  OracleLimits limits;
  // Frozen decisions: placement vertex per (request, functional node), and
  // which requests may be embedded.
  std::map<std::pair<int, int>, int> pinned_placements;
  std::optional<std::vector<bool>> embeddable;
};

struct OracleLightpath {
  int w = 0;
  int wp = 0;  // w < wp; established in both directions
  int wavelength = 0;
};

struct OracleResult {
  bool certified = false;  // search completed within the limits
  std::vector<bool> embedded;
  std::vector<bool> fulfilled;
  std::vector<double> lateness;  // per request, model semantics
  double max_lateness = 0.0;
  double o4 = 0.0;
  double objective = 0.0;  // weighted objective of the scenario
  // placements[r][n]: vertex of functional node n, or -1.
  std::vector<std::vector<int>> placements;
  std::vector<OracleLightpath> lightpaths;
  Assignment assignment;
  long long nodes = 0;
  long long leaves = 0;
  long long pruned = 0;
  double wall_seconds = 0.0;
  std::vector<std::string> caveats;

  int num_fulfilled() const;
  int num_embedded() const;
};

// Exhaustive search for the lexicographic optimum (fulfilled requests,
// embedded requests, maximal lateness, secondary cost) over placements,
// lightpath sets on fixed shortest routes with a feasible wavelength
// assignment, and per-commodity routes over those lightpaths. Service
// rates are allocated by bisection on the lateness target.
//
// Scope: every forwarding-graph path has at most one functional node,
// functional nodes are placed on a single vertex, every source and
// destination node has shares summing to one, and |V| <= 8. Throws
// Error(kUnsupported) otherwise. Commodities split by the shares; a
// commodity below lambda_min makes its placement infeasible.
OracleResult SolveExhaustive(const Scenario& scenario, const OracleOptions& options = {});

struct SequentialResult {
  OracleResult placement;        // fixed adjacency topology
  OracleResult reconfiguration;  // placements frozen, lightpaths free
};

// Place on the physical adjacency topology first, then reconfigure the
// lightpaths with the placements (and embedded set) frozen.
SequentialResult SolveSequentialBaseline(const Scenario& scenario,
                                         const OracleOptions& options = {});

nlohmann::json CertificateToJson(const Scenario& scenario, const OracleResult& result);

}  // namespace vnfwdm

#endif  // VNFWDM_ORACLE_H_
