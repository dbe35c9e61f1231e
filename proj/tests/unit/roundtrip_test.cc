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
#include <random>
#include <string>

#include <gtest/gtest.h>

#include "lp_reader.h"
#include "random_scenario.h"
#include "vnfwdm/milp_builder.h"
#include "vnfwdm/model_writer.h"
#include "vnfwdm/scenario_io.h"
#include "vnfwdm/solution.h"
#include "vnfwdm/validator.h"

namespace vnfwdm {
namespace {

class RoundTripTest : public ::testing::TestWithParam<int> {};

// Random scenario and random assignment: the validator's re-evaluation of
// every row after a solution-file round trip, the in-memory model residuals
// and the residuals recomputed from the emitted LP text must all agree.
TEST_P(RoundTripTest, ResidualsAgree) {
  std::mt19937_64 rng(GetParam());
  const Scenario s = testing::RandomScenario(rng);
  const Scenario reread = ParseScenario(ScenarioToJson(s).dump());
  EXPECT_EQ(ScenarioToJson(reread), ScenarioToJson(s));
  for (ModelKind kind : {ModelKind::kMiqcp, ModelKind::kMilp}) {
    const Model m = BuildModel(s, kind);
    const Assignment a = testing::RandomAssignment(m, rng);
    const Assignment back = ParseSolution(WriteSolution(m, a), m);
    ValidateOptions vo;
    vo.record_residuals = true;
    const ValidationReport rep = Validate(s, kind, back, vo);
    const std::vector<double> x = DenseValues(m, a);
    const testing::LpFile lp = testing::ReadLp(WriteLp(m));
    ASSERT_EQ(lp.rows.size(), static_cast<std::size_t>(m.num_constraints()));
    for (int c = 0; c < m.num_constraints(); ++c) {
      const std::string& name = m.constraint(c).name;
      const double ir = m.Residual(c, x);
      ASSERT_NEAR(rep.residuals.at(name), ir, 1e-9 * std::max(1.0, std::abs(ir))) << name;
      ASSERT_NEAR(lp.Residual(name, a.values), ir, 1e-9 * std::max(1.0, std::abs(ir))) << name;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RoundTripTest, ::testing::Range(1, 11));

}  // namespace
}  // namespace vnfwdm
