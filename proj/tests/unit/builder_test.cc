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
#include <map>
#include <string>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "vnfwdm/big_m.h"
#include "vnfwdm/error.h"
#include "vnfwdm/milp_builder.h"
#include "vnfwdm/miqcp_builder.h"
#include "vnfwdm/names.h"
#include "vnfwdm/paths.h"
#include "vnfwdm/topologies.h"

namespace vnfwdm {
namespace {

using ::testing::HasSubstr;

Scenario Path6Scenario(int perm = 0) {
  return EnumeratePermutations(BuiltinTopology("path6"), "path6")[perm];
}

int CountRole(const Model& m, VarRole role) {
  int n = 0;
  for (const Variable& v : m.variables()) n += v.role == role;
  return n;
}

int CountFamily(const Model& m, const std::string& family) {
  int n = 0;
  for (const Constraint& c : m.constraints()) n += c.family == family;
  return n;
}

// Explicit enumeration of the index sets, independent of the builder.
TEST(MiqcpBuilderTest, ClosedFormCounts) {
  const Model m = BuildMiqcp(Path6Scenario());
  const int V = 6, E = 10, G = 6, A = 2;
  int lambdas = 0;
  for (int a = 0; a < A; ++a)
    for (int v = 0; v < V; ++v)
      for (int vp = 0; vp < V; ++vp)
        for (int w = 0; w < V; ++w)
          for (int wp = 0; wp < V; ++wp) ++lambdas;
  EXPECT_EQ(lambdas, 2592);
  EXPECT_EQ(CountRole(m, VarRole::kLambda), lambdas);
  EXPECT_EQ(CountRole(m, VarRole::kLightpath), V * V * E * G);
  EXPECT_EQ(CountRole(m, VarRole::kLightpath), 2160);
  EXPECT_EQ(CountFamily(m, "delay"), 216);
  const ModelStats stats = ComputeModelStats(m);
  EXPECT_EQ(stats.constraints_by_family.at("delay"), 216);
  EXPECT_GT(stats.num_quadratic_constraints, 0);
}

TEST(MiqcpBuilderTest, Objective) {
  const Model m = BuildMiqcp(Path6Scenario());
  std::map<std::string, double> obj;
  for (const LinearTerm& t : m.objective()) obj[m.variable(t.var).name] += t.coef;
  EXPECT_EQ(obj, (std::map<std::string, double>{{"x2_r0", -100.0}, {"x4", 10.0}}));
}

TEST(MiqcpBuilderTest, FixedTopologyPinsAdjacency) {
  const Scenario s = Path6Scenario();
  BuildOptions opts;
  opts.fixed_topology = true;
  const Model m = BuildMiqcp(s, opts);
  const SubstrateNetwork& g = s.substrate;
  const Namer names(s);
  int ones = 0, zeros = 0;
  for (const Variable& v : m.variables()) {
    if (v.role != VarRole::kLightpath) continue;
    ASSERT_EQ(v.lb, v.ub) << v.name;
    (v.lb == 1.0 ? ones : zeros) += 1;
  }
  EXPECT_EQ(ones, 10);  // 5 bidirectional lightpaths
  EXPECT_EQ(zeros, 2160 - 10);
  for (int e = 0; e < g.num_edges(); ++e) {
    const DirectedEdge& d = g.edge(e);
    const int var = *m.FindVariable(names.RoutedLightpath(d.tail, d.head, e, 0));
    EXPECT_EQ(m.variable(var).lb, 1.0);
  }
}

TEST(MiqcpBuilderTest, BigMValues) {
  const Scenario s = Path6Scenario();
  const BigMPolicy big_m = ComputeBigM(s);
  EXPECT_DOUBLE_EQ(big_m.arc_rate[0][0], 3.0);
  EXPECT_NEAR(big_m.activation, 1.0 / 3e-4, 1e-9);
  const Model m = BuildMiqcp(s);
  const Constraint& c = m.constraint(*m.FindConstraint("placement_upper_r0_a{s,f}_v1"));
  double y_coef = 0.0;
  for (const LinearTerm& t : c.linear) {
    if (m.variable(t.var).name == "y_r0_n{f}_v1") y_coef = t.coef;
  }
  EXPECT_DOUBLE_EQ(y_coef, -3.0);

  Scenario bad = s;
  bad.big_m.lambda_min = 0.0;
  EXPECT_THROW(ComputeBigM(bad), Error);
}

TEST(BuilderTest, RejectsEmptyWavelengthSet) {
  Scenario s = Path6Scenario();
  TopologyOptions o;
  o.wavelengths = 0;
  s.substrate = BuiltinTopology("path6", o).WithCapacities(s.substrate.capacities());
  for (ModelKind kind : {ModelKind::kMiqcp, ModelKind::kMilp}) {
    try {
      BuildModel(s, kind);
      FAIL();
    } catch (const Error& e) {
      EXPECT_THAT(e.what(), HasSubstr("wavelength set is empty"));
    }
  }
}

TEST(MilpBuilderTest, SosGroupsAndFixedBarbell) {
  const Scenario s = EnumeratePermutations(BuiltinTopology("barbell6"))[5];
  const Model m = BuildMilp(s);
  ASSERT_FALSE(m.sos2_sets().empty());
  for (const Sos2Set& set : m.sos2_sets()) {
    if (set.name.rfind("sos2_r0_a{", 0) == 0) {
      EXPECT_EQ(set.vars.size(), 7u) << set.name;  // 6 base points + 1
    }
  }
  BuildOptions opts;
  opts.fixed_topology = true;
  const Model fixed = BuildMilp(s, opts);
  int ones = 0;
  for (const Variable& v : fixed.variables()) {
    if (v.role != VarRole::kLightpath) continue;
    ASSERT_EQ(v.lb, v.ub);
    ones += v.lb == 1.0;
  }
  EXPECT_EQ(ones, 14);  // 7 bidirectional lightpaths
  EXPECT_EQ(ComputeModelStats(fixed).num_quadratic_constraints, 0);
}

TEST(MilpBuilderTest, NoQuadraticTermsAndExpectedCounts) {
  const Model m = BuildMilp(Path6Scenario());
  const ModelStats stats = ComputeModelStats(m);
  EXPECT_EQ(stats.num_quadratic_terms, 0);
  EXPECT_EQ(CountRole(m, VarRole::kLambda), 2592);
  EXPECT_EQ(CountFamily(m, "delay"), 216);
  EXPECT_EQ(CountRole(m, VarRole::kLightpath), 30 * 6);  // (w, w'), w != w', per wavelength
}

TEST(BuilderTest, StagedLocks) {
  BuildOptions opts;
  opts.stage = 3;
  opts.locks = {1.0, 1.0, std::nullopt};
  const Model m = BuildMiqcp(Path6Scenario(), opts);
  EXPECT_TRUE(m.FindConstraint("stage_lock_o1").has_value());
  EXPECT_TRUE(m.FindConstraint("stage_lock_o2").has_value());
  EXPECT_FALSE(m.FindConstraint("stage_lock_o3").has_value());
  ASSERT_EQ(m.objective().size(), 1u);
  EXPECT_EQ(m.variable(m.objective()[0].var).name, "x4");
}

TEST(PathsTest, ShortestRoutes) {
  const PathTable path = ShortestPaths(BuiltinTopology("path6"));
  EXPECT_NEAR(path.delay(0, 5), 0.5, 1e-12);
  EXPECT_TRUE(path.route(2, 2).edges.empty());
  EXPECT_EQ(path.delay(2, 2), 0.0);
  const PathTable cycle = ShortestPaths(BuiltinTopology("cycle6"));
  EXPECT_NEAR(cycle.delay(0, 3), 0.3, 1e-12);
  // Tie between 1-2-3-4 and 1-6-5-4 goes to the lexicographically smaller.
  EXPECT_EQ(cycle.route(0, 3).vertices, (std::vector<int>{0, 1, 2, 3}));
}

}  // namespace
}  // namespace vnfwdm
