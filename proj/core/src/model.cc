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

#include "vnfwdm/model.h"

#include <algorithm>
#include <cmath>
#include <tuple>
#include <utility>

#include <fmt/core.h>

#include "vnfwdm/error.h"

namespace vnfwdm {
namespace {

[[noreturn]] void Fail(const std::string& message) {
  throw Error(ErrorKind::kInvariant, message);
}

void MergeLinear(std::vector<LinearTerm>* terms) {
  std::sort(terms->begin(), terms->end(),
            [](const LinearTerm& a, const LinearTerm& b) { return a.var < b.var; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms->size();) {
    LinearTerm t = (*terms)[i];
    std::size_t j = i + 1;
    while (j < terms->size() && (*terms)[j].var == t.var) t.coef += (*terms)[j++].coef;
    if (t.coef != 0.0) (*terms)[out++] = t;
    i = j;
  }
  terms->resize(out);
}

void MergeQuadratic(std::vector<QuadTerm>* terms) {
  for (QuadTerm& q : *terms) {
    if (q.var1 > q.var2) std::swap(q.var1, q.var2);
  }
  std::sort(terms->begin(), terms->end(), [](const QuadTerm& a, const QuadTerm& b) {
    return std::tie(a.var1, a.var2) < std::tie(b.var1, b.var2);
  });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms->size();) {
    QuadTerm t = (*terms)[i];
    std::size_t j = i + 1;
    while (j < terms->size() && (*terms)[j].var1 == t.var1 && (*terms)[j].var2 == t.var2) {
      t.coef += (*terms)[j++].coef;
    }
    if (t.coef != 0.0) (*terms)[out++] = t;
    i = j;
  }
  terms->resize(out);
}

}  // namespace

const char* ModelKindName(ModelKind kind) {
  return kind == ModelKind::kMiqcp ? "miqcp" : "milp";
}

const char* VarRoleName(VarRole role) {
  switch (role) {
    case VarRole::kLambda: return "lam";
    case VarRole::kMu: return "mu";
    case VarRole::kLightpath: return "l";
    case VarRole::kX1: return "x1";
    case VarRole::kX2: return "x2";
    case VarRole::kX3: return "x3";
    case VarRole::kX4: return "x4";
    case VarRole::kY: return "y";
    case VarRole::kZ: return "z";
    case VarRole::kEta: return "eta";
    case VarRole::kTheta: return "theta";
    case VarRole::kXi: return "xi";
  }
  return "?";
}

Model::Model(ModelKind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

int Model::AddVariable(std::string name, VarType type, double lb, double ub,
                       VarRole role) {
  if (name.empty()) Fail("variable name must not be empty");
  if (std::isnan(lb) || std::isnan(ub) || lb > ub) {
    Fail(fmt::format("variable '{}' has bounds lb > ub", name));
  }
  if (type == VarType::kBinary && (lb < 0.0 || ub > 1.0)) {
    Fail(fmt::format("binary variable '{}' has bounds outside [0, 1]", name));
  }
  const int index = num_variables();
  if (!var_index_.emplace(name, index).second) {
    Fail(fmt::format("duplicate variable name '{}'", name));
  }
  variables_.push_back({std::move(name), type, lb, ub, role});
  return index;
}

int Model::AddConstraint(Constraint c) {
  if (c.name.empty()) Fail("constraint name must not be empty");
  for (const LinearTerm& t : c.linear) {
    if (t.var < 0 || t.var >= num_variables()) {
      Fail(fmt::format("constraint '{}' references an unknown variable", c.name));
    }
  }
  for (const QuadTerm& q : c.quadratic) {
    if (q.var1 < 0 || q.var1 >= num_variables() || q.var2 < 0 ||
        q.var2 >= num_variables()) {
      Fail(fmt::format("constraint '{}' references an unknown variable", c.name));
    }
  }
  MergeLinear(&c.linear);
  MergeQuadratic(&c.quadratic);
  if (kind_ == ModelKind::kMilp && !c.quadratic.empty()) {
    Fail(fmt::format("MILP constraint '{}' has quadratic terms", c.name));
  }
  const int index = num_constraints();
  if (!con_index_.emplace(c.name, index).second) {
    Fail(fmt::format("duplicate constraint name '{}'", c.name));
  }
  constraints_.push_back(std::move(c));
  return index;
}

void Model::AddSos2(Sos2Set set) {
  if (set.vars.size() < 2) Fail(fmt::format("SOS2 set '{}' has fewer than 2 members", set.name));
  if (set.weights.empty()) {
    for (std::size_t i = 0; i < set.vars.size(); ++i) set.weights.push_back(i + 1.0);
  }
  if (set.weights.size() != set.vars.size()) {
    Fail(fmt::format("SOS2 set '{}' has mismatched weights", set.name));
  }
  for (std::size_t i = 1; i < set.weights.size(); ++i) {
    if (!(set.weights[i] > set.weights[i - 1])) {
      Fail(fmt::format("SOS2 set '{}' weights are not increasing", set.name));
    }
  }
  for (int v : set.vars) {
    if (v < 0 || v >= num_variables()) {
      Fail(fmt::format("SOS2 set '{}' references an unknown variable", set.name));
    }
  }
  sos2_.push_back(std::move(set));
}

void Model::SetObjective(std::vector<LinearTerm> terms, double constant) {
  MergeLinear(&terms);
  objective_ = std::move(terms);
  objective_constant_ = constant;
}

void Model::FixVariable(int var, double value) {
  Variable& v = variables_.at(var);
  if (v.type == VarType::kBinary && value != 0.0 && value != 1.0) {
    Fail(fmt::format("cannot fix binary '{}' to {}", v.name, value));
  }
  v.lb = v.ub = value;
}

std::optional<int> Model::FindVariable(std::string_view name) const {
  auto it = var_index_.find(std::string(name));
  if (it == var_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Model::FindConstraint(std::string_view name) const {
  auto it = con_index_.find(std::string(name));
  if (it == con_index_.end()) return std::nullopt;
  return it->second;
}

double Model::Activity(const Constraint& c, const std::vector<double>& x) const {
  double sum = 0.0;
  for (const LinearTerm& t : c.linear) sum += t.coef * x[t.var];
  for (const QuadTerm& q : c.quadratic) sum += q.coef * x[q.var1] * x[q.var2];
  return sum;
}

double Model::Residual(int c, const std::vector<double>& x) const {
  return Activity(constraints_[c], x) - constraints_[c].rhs;
}

double Model::ObjectiveValue(const std::vector<double>& x) const {
  double sum = objective_constant_;
  for (const LinearTerm& t : objective_) sum += t.coef * x[t.var];
  return sum;
}

void Model::CheckInvariants() const {
  for (const Variable& v : variables_) {
    if (v.lb > v.ub) Fail(fmt::format("variable '{}' has lb > ub", v.name));
    if (v.type == VarType::kBinary && (v.lb < 0.0 || v.ub > 1.0)) {
      Fail(fmt::format("binary variable '{}' has bounds outside [0, 1]", v.name));
    }
  }
  for (const Constraint& c : constraints_) {
    if (kind_ == ModelKind::kMilp && !c.quadratic.empty()) {
      Fail(fmt::format("MILP constraint '{}' has quadratic terms", c.name));
    }
  }
  for (const Sos2Set& s : sos2_) {
    if (s.vars.size() < 2) Fail(fmt::format("SOS2 set '{}' has fewer than 2 members", s.name));
  }
}

bool Satisfied(Sense sense, double residual, double tolerance) {
  switch (sense) {
    case Sense::kLe: return residual <= tolerance;
    case Sense::kGe: return residual >= -tolerance;
    case Sense::kEq: return std::abs(residual) <= tolerance;
  }
  return false;
}

double Violation(Sense sense, double residual) {
  switch (sense) {
    case Sense::kLe: return std::max(0.0, residual);
    case Sense::kGe: return std::max(0.0, -residual);
    case Sense::kEq: return std::abs(residual);
  }
  return 0.0;
}

ModelStats ComputeModelStats(const Model& model) {
  ModelStats s;
  s.num_variables = model.num_variables();
  s.num_constraints = model.num_constraints();
  s.num_sos2 = static_cast<int>(model.sos2_sets().size());
  for (const Variable& v : model.variables()) {
    ++s.variables_by_role[VarRoleName(v.role)];
    if (v.type == VarType::kBinary) ++s.num_binaries;
  }
  for (const Constraint& c : model.constraints()) {
    ++s.constraints_by_family[c.family];
    s.num_linear_terms += static_cast<long long>(c.linear.size());
    s.num_quadratic_terms += static_cast<long long>(c.quadratic.size());
    if (!c.quadratic.empty()) ++s.num_quadratic_constraints;
  }
  return s;
}

nlohmann::json ModelStatsToJson(const ModelStats& s) {
  return nlohmann::json{
      {"variables", s.num_variables},
      {"binaries", s.num_binaries},
      {"constraints", s.num_constraints},
      {"quadratic_constraints", s.num_quadratic_constraints},
      {"linear_terms", s.num_linear_terms},
      {"quadratic_terms", s.num_quadratic_terms},
      {"sos2", s.num_sos2},
      {"variables_by_role", s.variables_by_role},
      {"constraints_by_family", s.constraints_by_family},
  };
}

}  // namespace vnfwdm
