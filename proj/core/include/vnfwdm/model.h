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

#ifndef VNFWDM_MODEL_H_
#define VNFWDM_MODEL_H_

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

namespace vnfwdm {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Integrality and feasibility tolerance used across the library.
inline constexpr double kTolerance = 1e-6;

enum class ModelKind { kMiqcp, kMilp };
const char* ModelKindName(ModelKind kind);  // "miqcp" / "milp"

enum class VarType { kContinuous, kBinary };

enum class VarRole { kLambda, kMu, kLightpath, kX1, kX2, kX3, kX4, kY, kZ, kEta, kTheta, kXi };
// Name prefix of the role: lam, mu, l, x1, x2, x3, x4, y, z, eta, theta, xi.
const char* VarRoleName(VarRole role);

struct Variable {
  std::string name;
  VarType type = VarType::kContinuous;
  double lb = 0.0;
  double ub = kInfinity;
  VarRole role = VarRole::kLambda;
};

struct LinearTerm {
  int var = 0;
  double coef = 0.0;
};

struct QuadTerm {
  int var1 = 0;
  int var2 = 0;
  double coef = 0.0;
};

enum class Sense { kLe, kEq, kGe };

struct Constraint {
  std::string name;
  std::string family;
  std::vector<LinearTerm> linear;
  std::vector<QuadTerm> quadratic;
  Sense sense = Sense::kLe;
  double rhs = 0.0;
};

struct Sos2Set {
  std::string name;
  std::vector<int> vars;
  std::vector<double> weights;  // strictly increasing
};

// Solver-agnostic mixed-integer model with a minimization objective.
class Model {
 public:
  explicit Model(ModelKind kind, std::string name = "vnfwdm");

  ModelKind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  // Throws Error(kInvariant) on a duplicate name or lb > ub. Binary
  // variables must have bounds within {0, 1}.
  int AddVariable(std::string name, VarType type, double lb, double ub, VarRole role);
  int AddBinary(std::string name, VarRole role) {
    return AddVariable(std::move(name), VarType::kBinary, 0.0, 1.0, role);
  }
  int AddContinuous(std::string name, VarRole role, double lb = 0.0,
                    double ub = kInfinity) {
    return AddVariable(std::move(name), VarType::kContinuous, lb, ub, role);
  }

  // Merges repeated terms, orders each quadratic pair (var1 <= var2) and
  // drops zero coefficients. Throws Error(kInvariant) if a MILP constraint
  // carries quadratic terms or a term references an unknown variable.
  int AddConstraint(Constraint constraint);
  void AddSos2(Sos2Set set);

  void SetObjective(std::vector<LinearTerm> terms, double constant = 0.0);
  void FixVariable(int var, double value);

  int num_variables() const { return static_cast<int>(variables_.size()); }
  int num_constraints() const { return static_cast<int>(constraints_.size()); }
  const Variable& variable(int i) const { return variables_[i]; }
  const std::vector<Variable>& variables() const { return variables_; }
  const Constraint& constraint(int i) const { return constraints_[i]; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::vector<Sos2Set>& sos2_sets() const { return sos2_; }
  const std::vector<LinearTerm>& objective() const { return objective_; }
  double objective_constant() const { return objective_constant_; }

  std::optional<int> FindVariable(std::string_view name) const;
  std::optional<int> FindConstraint(std::string_view name) const;

  // Evaluations on a dense value vector indexed like variables().
  double Activity(const Constraint& c, const std::vector<double>& x) const;
  // Activity minus rhs.
  double Residual(int c, const std::vector<double>& x) const;
  double ObjectiveValue(const std::vector<double>& x) const;

  // Re-checks all model invariants; throws Error(kInvariant).
  void CheckInvariants() const;

 private:
  ModelKind kind_;
  std::string name_;
  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
  std::vector<Sos2Set> sos2_;
  std::vector<LinearTerm> objective_;
  double objective_constant_ = 0.0;
  std::unordered_map<std::string, int> var_index_;
  std::unordered_map<std::string, int> con_index_;
};

// True when the residual of a constraint with `sense` is within tolerance.
bool Satisfied(Sense sense, double residual, double tolerance = kTolerance);
// Amount by which the residual violates the sense (0 when satisfied).
double Violation(Sense sense, double residual);

struct ModelStats {
  int num_variables = 0;
  int num_binaries = 0;
  int num_constraints = 0;
  int num_quadratic_constraints = 0;
  long long num_linear_terms = 0;
  long long num_quadratic_terms = 0;
  int num_sos2 = 0;
  std::map<std::string, int> variables_by_role;
  std::map<std::string, int> constraints_by_family;
};

ModelStats ComputeModelStats(const Model& model);
nlohmann::json ModelStatsToJson(const ModelStats& stats);

}  // namespace vnfwdm

#endif  // VNFWDM_MODEL_H_
