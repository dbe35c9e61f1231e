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

#include <cmath>
#include <string>

#include <gtest/gtest.h>

#include "vnfwdm/milp_builder.h"
#include "vnfwdm/model_writer.h"
#include "vnfwdm/oracle.h"
#include "vnfwdm/solution.h"
#include "vnfwdm/topologies.h"
#include "vnfwdm/validator.h"

namespace vnfwdm {
namespace {

Scenario Perm(int i, const char* topology = "path6") {
  return EnumeratePermutations(BuiltinTopology(topology), topology)[i];
}

TEST(ValidatorTest, OracleSolutionsAreFeasible) {
  for (ModelKind kind : {ModelKind::kMiqcp, ModelKind::kMilp}) {
    const Scenario s = Perm(7);
    OracleOptions opts;
    opts.kind = kind;
    const OracleResult res = SolveExhaustive(s, opts);
    const ValidationReport rep = Validate(s, kind, res.assignment);
    EXPECT_TRUE(rep.feasible()) << ModelKindName(kind) << " " << rep.violations.size();
    ASSERT_EQ(rep.requests.size(), 1u);
    EXPECT_NEAR(rep.requests[0].x3, res.lateness[0], 1e-6);
    EXPECT_NEAR(rep.objective, res.objective, 1e-6);
    ASSERT_TRUE(rep.requests[0].exact_lateness.has_value());
    if (kind == ModelKind::kMilp) {
      // The shifted interpolation over-approximates every sojourn time.
      EXPECT_GE(rep.requests[0].x3, *rep.requests[0].exact_lateness - 1e-9);
      ASSERT_TRUE(rep.requests[0].approximation_error.has_value());
    }
  }
}

TEST(ValidatorTest, DetectsOneWayLightpath) {
  const Scenario s = Perm(3);
  const OracleResult res = SolveExhaustive(s);
  ASSERT_FALSE(res.lightpaths.empty());
  Assignment broken = res.assignment;
  std::string dropped;
  for (const auto& [name, value] : broken.values) {
    if (name.rfind("l_", 0) == 0 && value > 0.5) {
      dropped = name;
      break;
    }
  }
  ASSERT_FALSE(dropped.empty());
  broken.Set(dropped, 0.0);
  const ValidationReport rep = Validate(s, ModelKind::kMiqcp, broken);
  EXPECT_FALSE(rep.feasible());
  EXPECT_GE(rep.violations_by_family.count("bidirectional"), 1u) << dropped;
}

TEST(ValidatorTest, AgreesWithModelResiduals) {
  const Scenario s = Perm(11, "cycle6");
  OracleOptions opts;
  opts.kind = ModelKind::kMilp;
  const OracleResult res = SolveExhaustive(s, opts);
  ValidateOptions vopts;
  vopts.record_residuals = true;
  const ValidationReport rep = Validate(s, ModelKind::kMilp, res.assignment, vopts);
  const Model m = BuildMilp(s);
  const std::vector<double> x = DenseValues(m, res.assignment);
  ASSERT_EQ(static_cast<int>(rep.residuals.size()), m.num_constraints());
  for (int c = 0; c < m.num_constraints(); ++c) {
    ASSERT_NEAR(rep.residuals.at(m.constraint(c).name), m.Residual(c, x), 1e-9)
        << m.constraint(c).name;
  }
  EXPECT_NEAR(rep.objective, m.ObjectiveValue(x), 1e-9);
}

TEST(ValidatorTest, BoundViolations) {
  const Scenario s = Perm(0);
  Assignment a = SolveExhaustive(s).assignment;
  a.Set("x1_r0", 0.5);
  const ValidationReport rep = Validate(s, ModelKind::kMiqcp, a);
  EXPECT_FALSE(rep.feasible());
}

}  // namespace
}  // namespace vnfwdm
