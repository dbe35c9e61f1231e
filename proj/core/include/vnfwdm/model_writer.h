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

#ifndef VNFWDM_MODEL_WRITER_H_
#define VNFWDM_MODEL_WRITER_H_

#include <string>

#include "vnfwdm/model.h"

namespace vnfwdm {

enum class ModelFormat { kLp, kMps };

// LP dialect: Minimize / Subject To / Bounds / Binaries / SOS / End, with
// quadratic constraint terms in brackets. Constraints, variables and terms
// are emitted in name order, so the output depends only on the model
// content, not on insertion order.
std::string WriteLp(const Model& model);

// Free-format MPS, MILP models only; throws Error(kUnsupported) with
// "quadratic constraints unsupported in MPS emission" for MIQCP models.
std::string WriteMps(const Model& model);

std::string WriteModel(const Model& model, ModelFormat format);

// Shortest decimal representation that reads back to the same double;
// infinities become "+inf" / "-inf".
std::string FormatNumber(double value);

}  // namespace vnfwdm

#endif  // VNFWDM_MODEL_WRITER_H_
