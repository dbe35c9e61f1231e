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

#include <string>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "lp_reader.h"
#include "vnfwdm/error.h"
#include "vnfwdm/milp_builder.h"
#include "vnfwdm/miqcp_builder.h"
#include "vnfwdm/model.h"
#include "vnfwdm/model_writer.h"
#include "vnfwdm/solution.h"
#include "vnfwdm/topologies.h"

namespace vnfwdm {
namespace {

using ::testing::HasSubstr;

Model Tiny() {
  Model m(ModelKind::kMilp, "tiny");
  const int x = m.AddBinary("x", VarRole::kLightpath);
  const int y = m.AddContinuous("y", VarRole::kMu, 0.0, 2.5);
  m.AddConstraint({"cap_0", "cap", {{x, 1.0}, {y, -2.0}}, {}, Sense::kLe, 1.0});
  m.SetObjective({{x, 1.0}, {y, 3.0}});
  return m;
}

TEST(WriterTest, Deterministic) {
  const Model m = Tiny();
  EXPECT_EQ(WriteLp(m), WriteLp(Tiny()));
  EXPECT_EQ(WriteMps(m), WriteMps(Tiny()));
  const testing::LpFile lp = testing::ReadLp(WriteLp(m));
  ASSERT_EQ(lp.rows.count("cap_0"), 1u);
  EXPECT_EQ(lp.rows.at("cap_0").linear.at("y"), -2.0);
  EXPECT_EQ(lp.binaries, std::vector<std::string>{"x"});
  EXPECT_EQ(lp.bounds.at("y").second, 2.5);
}

TEST(WriterTest, QuadraticBracketsAndMpsLimitation) {
  const Scenario s = EnumeratePermutations(BuiltinTopology("path6"))[0];
  const Model m = BuildMiqcp(s);
  const std::string lp = WriteLp(m);
  const auto pos = lp.find(" delay_r0_p0_v1_v2_v3:");
  ASSERT_NE(pos, std::string::npos);
  const std::string row = lp.substr(pos, lp.find(" delay_", pos + 1) - pos);
  EXPECT_THAT(row, HasSubstr("[ "));
  EXPECT_THAT(row, HasSubstr("eta_w1_w2 * z_r0_a"));
  try {
    WriteMps(m);
    FAIL() << "MPS emission of a quadratic model must fail";
  } catch (const Error& e) {
    EXPECT_THAT(e.what(), HasSubstr("quadratic constraints unsupported in MPS emission"));
  }
  EXPECT_NO_THROW(WriteMps(BuildMilp(s)));
}

TEST(SolutionTest, ParseRulesAndErrors) {
  const Model m = Tiny();
  const Assignment a = ParseSolution("objective value: 4\nx 0.9999997\ny 0.35\n", m);
  EXPECT_EQ(a.Get("x"), 1.0);
  EXPECT_EQ(a.Get("y"), 0.35);
  EXPECT_EQ(*a.objective, 4.0);
  try {
    ParseSolution("foo 1\n", m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_THAT(e.what(), HasSubstr("unknown variable"));
  }
  // Write / parse round trip keeps values.
  Assignment b;
  b.Set("x", 1.0);
  b.Set("y", 1.2345678901234567);
  const Assignment c = ParseSolution(WriteSolution(m, b), m);
  EXPECT_EQ(c.Get("y"), b.Get("y"));
}

TEST(SolutionTest, ScipStyleLines) {
  const Model m = Tiny();
  const Assignment a =
      ParseSolution("solution status: optimal solution found\nobjective value: 2\nx 1 \t(obj:1)\n", m);
  EXPECT_EQ(a.status, "optimal solution found");
  EXPECT_EQ(a.Get("x"), 1.0);
}

}  // namespace
}  // namespace vnfwdm
