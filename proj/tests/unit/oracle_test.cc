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

#include <algorithm>
#include <string>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "vnfwdm/error.h"
#include "vnfwdm/oracle.h"
#include "vnfwdm/topologies.h"
#include "vnfwdm/validator.h"

namespace vnfwdm {
namespace {

Scenario Perm(int i) { return EnumeratePermutations(BuiltinTopology("path6"), "path6")[i]; }

TEST(OracleTest, EvaluationScenarioEmbeds) {
  const Scenario s = Perm(0);
  const OracleResult res = SolveExhaustive(s);
  EXPECT_TRUE(res.certified);
  EXPECT_EQ(res.num_embedded(), 1);
  ASSERT_EQ(res.placements.size(), 1u);
  const int f = s.requests[0].graph.FindNode("f").value();
  // Only the two compute vertices can host f; permutation 0 has them at 1, 2.
  EXPECT_THAT(res.placements[0][f], ::testing::AnyOf(0, 1));
  EXPECT_GT(res.max_lateness, 0.0);  // d_max = 0 cannot be met
  EXPECT_TRUE(Validate(s, ModelKind::kMiqcp, res.assignment).feasible());
}

TEST(OracleTest, Deterministic) {
  const Scenario s = Perm(42);
  const OracleResult a = SolveExhaustive(s);
  const OracleResult b = SolveExhaustive(s);
  EXPECT_EQ(a.assignment.values, b.assignment.values);
  EXPECT_EQ(a.nodes, b.nodes);
  nlohmann::json ja = CertificateToJson(s, a), jb = CertificateToJson(s, b);
  ja.erase("wall_seconds");
  jb.erase("wall_seconds");
  EXPECT_EQ(ja.dump(), jb.dump());
}

TEST(OracleTest, JointNeverWorseThanFixed) {
  for (int i : {0, 17, 63, 119}) {
    const Scenario s = Perm(i);
    OracleOptions fixed;
    fixed.fixed_topology = true;
    const OracleResult joint = SolveExhaustive(s);
    const OracleResult pinned = SolveExhaustive(s, fixed);
    EXPECT_LE(joint.objective, pinned.objective + 1e-9) << i;
    BuildOptions b;
    b.fixed_topology = true;
    ValidateOptions v;
    v.build = b;
    EXPECT_TRUE(Validate(s, ModelKind::kMiqcp, pinned.assignment, v).feasible()) << i;
  }
}

TEST(OracleTest, MotivationJointBeatsSequential) {
  const Scenario s = MotivationScenario();
  const OracleResult joint = SolveExhaustive(s);
  const SequentialResult seq = SolveSequentialBaseline(s);
  EXPECT_EQ(joint.num_embedded(), 2);
  EXPECT_LT(joint.max_lateness, seq.reconfiguration.max_lateness - 1e-6);
  EXPECT_LE(seq.reconfiguration.objective, seq.placement.objective + 1e-9);
  // The joint optimum uses the small vertex v3 for the first function.
  EXPECT_EQ(joint.placements[0][1], 2);
  EXPECT_TRUE(Validate(s, ModelKind::kMiqcp, joint.assignment).feasible());
}

TEST(OracleTest, NoCapacityMeansNothingEmbedded) {
  Scenario s = Perm(5);
  s.substrate = s.substrate.WithCapacities(std::vector<double>(6, 0.0));
  const OracleResult res = SolveExhaustive(s);
  EXPECT_TRUE(res.certified);
  EXPECT_EQ(res.num_embedded(), 0);
  EXPECT_EQ(res.objective, 0.0);
  EXPECT_TRUE(Validate(s, ModelKind::kMiqcp, res.assignment).feasible());
}

TEST(OracleTest, RejectsOutOfScopeScenarios) {
  Scenario s = Perm(0);
  s.requests[0].graph = ForwardingGraph({"s", "f", "g", "d"}, {{0, 1}, {1, 2}, {2, 3}});
  s.requests[0].initial_rates = {{0, 3.0}};
  try {
    SolveExhaustive(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnsupported);
  }
}

TEST(OracleTest, SearchLimitsAreReported) {
  OracleOptions opts;
  opts.limits.max_nodes = 3;
  const OracleResult res = SolveExhaustive(Perm(9), opts);
  EXPECT_FALSE(res.certified);
  EXPECT_FALSE(res.caveats.empty());
}

}  // namespace
}  // namespace vnfwdm
