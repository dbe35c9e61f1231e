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

#ifndef VNFWDM_MIQCP_BUILDER_H_
#define VNFWDM_MIQCP_BUILDER_H_

#include "vnfwdm/build_options.h"
#include "vnfwdm/model.h"
#include "vnfwdm/scenario.h"

namespace vnfwdm {

// Exact model: routed lightpaths l_{w,w',e,gamma}, the placement, routing,
// capacity and optical constraint families, the eta / theta
// reformulation of the queueing terms and one quadratic delay constraint per
// (request, path, vertex tuple). Throws Error(kInvalidArgument) for an
// empty wavelength set.
Model BuildMiqcp(const Scenario& scenario, const BuildOptions& options = {});

}  // namespace vnfwdm

#endif  // VNFWDM_MIQCP_BUILDER_H_
