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

#include "vnfwdm/solution.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include <fmt/core.h>

#include "vnfwdm/error.h"
#include "vnfwdm/model_writer.h"

namespace vnfwdm {
namespace {

std::vector<std::string> Tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

std::optional<double> ParseDouble(std::string_view s) {
  if (s == "inf" || s == "+inf" || s == "infinity" || s == "+infinity") return kInfinity;
  if (s == "-inf" || s == "-infinity") return -kInfinity;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto result = std::from_chars(s.data(), s.data() + s.size(), v);
  if (result.ec != std::errc() || result.ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string Lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

// Value after the first ':' or '=' in a header line, trimmed.
std::string AfterSeparator(const std::string& line) {
  auto pos = line.find_first_of(":=");
  if (pos == std::string::npos) return "";
  std::string rest = line.substr(pos + 1);
  const auto b = rest.find_first_not_of(" \t");
  const auto e = rest.find_last_not_of(" \t\r");
  return b == std::string::npos ? "" : rest.substr(b, e - b + 1);
}

}  // namespace

double Assignment::Get(const std::string& name) const {
  auto it = values.find(name);
  return it == values.end() ? 0.0 : it->second;
}

Assignment ParseSolution(const std::string& text, const Model& model) {
  Assignment a;
  std::vector<bool> seen(model.num_variables(), false);
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<std::string> tokens = Tokens(line);
    if (tokens.empty()) continue;
    const std::string lower = Lower(line);
    if (tokens[0][0] == '#') {
      if (lower.find("objective value") != std::string::npos) {
        if (auto v = ParseDouble(AfterSeparator(line))) a.objective = *v;
      }
      continue;
    }
    if (lower.rfind("objective value:", 0) == 0) {
      auto v = ParseDouble(AfterSeparator(line));
      if (!v) throw Error(ErrorKind::kParse, fmt::format("line {}: malformed objective", line_no));
      a.objective = *v;
      continue;
    }
    if (lower.rfind("solution status:", 0) == 0) {
      a.status = AfterSeparator(line);
      continue;
    }
    if (tokens.size() < 2) {
      throw Error(ErrorKind::kParse, fmt::format("line {}: malformed line '{}'", line_no, line));
    }
    auto index = model.FindVariable(tokens[0]);
    if (!index) {
      throw Error(ErrorKind::kParse,
                  fmt::format("line {}: unknown variable '{}'", line_no, tokens[0]));
    }
    auto value = ParseDouble(tokens[1]);
    if (!value || std::isnan(*value)) {
      throw Error(ErrorKind::kParse,
                  fmt::format("line {}: malformed value '{}'", line_no, tokens[1]));
    }
    const Variable& var = model.variable(*index);
    double x = *value;
    if (x < var.lb - kTolerance || x > var.ub + kTolerance) {
      throw Error(ErrorKind::kInvalidArgument,
                  fmt::format("line {}: value {} of '{}' outside bounds [{}, {}]", line_no,
                              x, var.name, var.lb, var.ub));
    }
    if (var.type == VarType::kBinary) {
      const double r = std::round(x);
      if (std::abs(x - r) > kTolerance) {
        throw Error(ErrorKind::kInvalidArgument,
                    fmt::format("line {}: binary '{}' has fractional value {}", line_no,
                                var.name, x));
      }
      x = r;
    }
    a.values[var.name] = x;
    seen[*index] = true;
  }
  for (int v = 0; v < model.num_variables(); ++v) {
    if (seen[v]) continue;
    a.values[model.variable(v).name] = 0.0;
    a.warnings.push_back(fmt::format("'{}' missing, set to 0", model.variable(v).name));
  }
  return a;
}

std::vector<double> DenseValues(const Model& model, const Assignment& assignment) {
  std::vector<double> x(model.num_variables(), 0.0);
  for (const auto& [name, value] : assignment.values) {
    if (auto index = model.FindVariable(name)) x[*index] = value;
  }
  return x;
}

std::string WriteSolution(const Model& model, const Assignment& assignment) {
  std::string out;
  if (assignment.objective) {
    out += fmt::format("# Objective value = {}\n", FormatNumber(*assignment.objective));
  }
  std::vector<int> order(model.num_variables());
  for (int i = 0; i < model.num_variables(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return model.variable(a).name < model.variable(b).name;
  });
  for (int v : order) {
    const std::string& name = model.variable(v).name;
    out += fmt::format("{} {}\n", name, FormatNumber(assignment.Get(name)));
  }
  return out;
}

}  // namespace vnfwdm
