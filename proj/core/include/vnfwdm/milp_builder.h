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

#ifndef VNFWDM_MILP_BUILDER_H_
#define VNFWDM_MILP_BUILDER_H_

#include "vnfwdm/build_options.h"
#include "vnfwdm/model.h"
#include "vnfwdm/scenario.h"

namespace vnfwdm {

// Approximate model: lightpaths on fixed shortest routes (wavelength
// assignment only), eps-capacity constraints, and SOS2 conic weights that
// replace every queueing term by its piecewise-linear interpolant.
// Throws Error(kInvalidArgument) when a queue's bounds are unusable, and for
// fixed_topology when a fiber is not the shortest route between its ends.
Model BuildMilp(const Scenario& scenario, const BuildOptions& options = {});

// Dispatches on `kind`.
Model BuildModel(const Scenario& scenario, ModelKind kind,
                 const BuildOptions& options = {});

}  // namespace vnfwdm

#endif  // VNFWDM_MILP_BUILDER_H_
