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

#ifndef VNFWDM_RATE_BOUNDS_H_
#define VNFWDM_RATE_BOUNDS_H_

#include <vector>

#include "vnfwdm/scenario.h"

namespace vnfwdm {

// Upper bound on the data rate of every arc, indexed by arc: source arcs take
// their initial rate, other arcs sum alpha-weighted incoming bounds plus the
// arc offset, in topological order.
std::vector<double> PropagateRateBounds(const Request& request);

// Per request, per arc.
std::vector<std::vector<double>> PropagateRateBounds(const Scenario& scenario);

// Like PropagateRateBounds, but counts every arc offset once per possible
// placement of its tail (`placements` copies), since each placed instance
// adds its own offset. Valid as a big-M bound when beta > 0.
std::vector<double> PlacementSafeRateBounds(const Request& request, int placements);

// Upper bound on the total arrival rate of functional node n: the sum of its
// incoming arc bounds.
double NodeArrivalBound(const Request& request, const std::vector<double>& arc_bounds,
                        int node);

}  // namespace vnfwdm

#endif  // VNFWDM_RATE_BOUNDS_H_
