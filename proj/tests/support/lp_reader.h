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

#ifndef VNFWDM_TESTS_SUPPORT_LP_READER_H_
#define VNFWDM_TESTS_SUPPORT_LP_READER_H_

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace vnfwdm::testing {

// Independent reader for the LP dialect the writer emits, used to check
// emitted text against the in-memory model without going through it.
struct LpRow {
  std::map<std::string, double> linear;
  std::vector<std::tuple<std::string, std::string, double>> quadratic;
  std::string sense;  // "<=", ">=" or "="
  double rhs = 0.0;
};

struct LpFile {
  std::map<std::string, double> objective;
  std::map<std::string, LpRow> rows;
  std::map<std::string, std::pair<double, double>> bounds;  // explicit ones
  std::vector<std::string> binaries;
  std::map<std::string, std::vector<std::pair<std::string, double>>> sos2;

  // Activity minus rhs of row `name`; missing variables count as 0.
  double Residual(const std::string& name, const std::map<std::string, double>& x) const;
};

// Throws std::runtime_error on anything it does not understand.
LpFile ReadLp(const std::string& text);

}  // namespace vnfwdm::testing

#endif  // VNFWDM_TESTS_SUPPORT_LP_READER_H_
