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

#ifndef VNFWDM_SOLUTION_H_
#define VNFWDM_SOLUTION_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vnfwdm/model.h"

namespace vnfwdm {

// Variable values by canonical name, as read from a solver or produced by
// the exhaustive search. Names missing from `values` are zero.
struct Assignment {
  std::map<std::string, double> values;
  std::optional<double> objective;
  std::string status;
  std::vector<std::string> warnings;

  double Get(const std::string& name) const;
  void Set(const std::string& name, double value) { values[name] = value; }
};

// Parses "name value" lines. Lines starting with '#' are comments; a comment
// of the form "# Objective value = v" and the solver headers
// "objective value: v" / "solution status: s" are recognized. Trailing
// tokens after the value are ignored. Unknown names and malformed lines throw
// Error(kParse); values outside the variable bounds by more than kTolerance
// throw Error(kInvalidArgument). Binary values within kTolerance of 0 or 1
// are rounded. Variables not mentioned are set to zero and listed in
// `warnings`.
Assignment ParseSolution(const std::string& text, const Model& model);

// Dense value vector aligned with model.variables(); unknown names in the
// assignment are ignored.
std::vector<double> DenseValues(const Model& model, const Assignment& assignment);

// Writes every model variable as "name value" (name order), preceded by a
// comment header with the objective when known.
std::string WriteSolution(const Model& model, const Assignment& assignment);

}  // namespace vnfwdm

#endif  // VNFWDM_SOLUTION_H_
