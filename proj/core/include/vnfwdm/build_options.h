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

#ifndef VNFWDM_BUILD_OPTIONS_H_
#define VNFWDM_BUILD_OPTIONS_H_

#include <array>
#include <optional>

namespace vnfwdm {

struct BuildOptions {
  // Pin the lightpath topology to the physical adjacency: one lightpath per
  // fiber on wavelength 0, everything else off.
  bool fixed_topology = false;

  // Skip delay constraints for vertex tuples that a fully pinned source or
  // destination node can never occupy. Preserves the feasible set.
  bool prune_pinned_tuples = false;

  // Exact model only: where the approximation config names an explicit eps
  // for a queue (the forwarding block or a vertex override), bound eta or
  // theta above by 1/eps. This excludes loads within eps of the service
  // rate, exactly like the approximate model's eps-capacity rows.
  bool bound_queue_auxiliaries = true;

  // Lexicographic staging. 0 keeps the single weighted objective. Stage s in
  // 1..4 minimizes only -o1, -o2, o3 or o4 respectively, with the values of
  // the earlier stages held by `locks` (o1 >= locks[0], o2 >= locks[1],
  // o3 <= locks[2]).
  int stage = 0;
  std::array<std::optional<double>, 3> locks;
};

}  // namespace vnfwdm

#endif  // VNFWDM_BUILD_OPTIONS_H_
