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

#include <set>
#include <string>

#include <gmock/gmock.h>
#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "vnfwdm/error.h"
#include "vnfwdm/rate_bounds.h"
#include "vnfwdm/scenario.h"
#include "vnfwdm/scenario_io.h"
#include "vnfwdm/topologies.h"

namespace vnfwdm {
namespace {

using ::testing::HasSubstr;

template <typename F>
std::string ErrorOf(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

int UndirectedFibers(const SubstrateNetwork& g) { return g.num_edges() / 2; }

TEST(TopologyTest, BuiltinShapes) {
  const SubstrateNetwork path = BuiltinTopology("path6");
  EXPECT_EQ(path.num_vertices(), 6);
  EXPECT_EQ(path.num_edges(), 10);
  EXPECT_EQ(UndirectedFibers(BuiltinTopology("barbell6")), 7);
  EXPECT_EQ(UndirectedFibers(BuiltinTopology("cycle6")), 6);
  for (const DirectedEdge& e : path.edges()) {
    EXPECT_DOUBLE_EQ(e.delay, 0.1);
    EXPECT_EQ(std::abs(e.tail - e.head), 1);
  }
  EXPECT_DOUBLE_EQ(path.line_rate(), 4.0);
  EXPECT_EQ(path.num_wavelengths(), 6);
  EXPECT_THAT(ErrorOf([] { BuiltinTopology("star9"); }), HasSubstr("unknown topology"));
}

TEST(TopologyTest, PermutationsAreTheEvaluationGrid) {
  const auto all = EnumeratePermutations(BuiltinTopology("path6"), "path6");
  ASSERT_EQ(all.size(), 120u);
  std::set<std::string> names;
  for (const Scenario& s : all) {
    names.insert(s.name);
    ASSERT_EQ(s.requests.size(), 1u);
    const Request& r = s.requests[0];
    ASSERT_EQ(r.source_restrictions.size(), 1u);
    const int source = r.source_restrictions[0].vertex;
    EXPECT_EQ(s.substrate.capacity(source), 0.0);
    double total = 0.0;
    for (const PlacementShare& d : r.dest_restrictions) {
      EXPECT_NE(d.vertex, source);
      EXPECT_EQ(s.substrate.capacity(d.vertex), 0.0);
      total += d.proportion;
    }
    EXPECT_EQ(r.dest_restrictions.size(), 3u);
    EXPECT_NEAR(total, 1.0, 1e-12);
    std::multiset<double> caps(s.substrate.capacities().begin(), s.substrate.capacities().end());
    EXPECT_EQ(caps.count(5.0), 1u);
    EXPECT_EQ(caps.count(50.0), 1u);
  }
  EXPECT_EQ(names.size(), 120u);
}

TEST(ScenarioIoTest, JsonRoundTripIsStable) {
  const auto all = EnumeratePermutations(BuiltinTopology("cycle6"), "cycle6");
  const std::string text = ScenarioToJson(all[17]).dump(2);
  const Scenario back = ParseScenario(text);
  EXPECT_EQ(ScenarioToJson(back).dump(2), text);
  EXPECT_EQ(back.substrate.num_edges(), 12);
}

TEST(ScenarioIoTest, RejectsMissingReverseEdge) {
  nlohmann::json j = ScenarioToJson(MotivationScenario());
  j["substrate"].erase("fibers");
  j["substrate"]["edges"] = {{{"u", "1"}, {"v", "3"}, {"delay", 0.1}},
                             {{"u", "3"}, {"v", "1"}, {"delay", 0.1}},
                             {{"u", "2"}, {"v", "3"}, {"delay", 0.1}}};
  EXPECT_THAT(ErrorOf([&] { ParseScenario(j.dump()); }), HasSubstr("missing reverse edge"));
}

TEST(ScenarioTest, RejectsCyclicForwardingGraph) {
  EXPECT_THAT(ErrorOf([] { ForwardingGraph({"s", "a", "b", "d"}, {{0, 1}, {1, 2}, {2, 1}, {2, 3}}); }),
              HasSubstr("forwarding graph not acyclic"));
}

TEST(ScenarioTest, RolesFollowDegrees) {
  const ForwardingGraph fg({"s", "f", "g", "d"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(fg.sources(), std::vector<int>{0});
  EXPECT_EQ(fg.destinations(), std::vector<int>{3});
  EXPECT_EQ(fg.functional(), (std::vector<int>{1, 2}));
  EXPECT_EQ(fg.paths().size(), 2u);
}

TEST(ScenarioTest, RejectsDuplicateRestriction) {
  Scenario s = MotivationScenario();
  s.requests[0].dest_restrictions.push_back(s.requests[0].dest_restrictions[0]);
  EXPECT_THAT(ErrorOf([&] { ValidateScenario(s); }), HasSubstr("duplicate"));
}

TEST(RateBoundsTest, Propagation) {
  const Scenario s = EnumeratePermutations(BuiltinTopology("path6"))[0];
  EXPECT_EQ(PropagateRateBounds(s.requests[0]), (std::vector<double>{3.0, 3.0}));

  Request half;
  half.graph = ForwardingGraph({"s", "f", "d"}, {{0, 1}, {1, 2}});
  half.graph.set_arc_alpha(1, 0, 0.5);
  half.initial_rates[0] = 3.0;
  EXPECT_DOUBLE_EQ(PropagateRateBounds(half)[1], 1.5);

  Request join;
  join.graph = ForwardingGraph({"s1", "s2", "f", "d"}, {{0, 2}, {1, 2}, {2, 3}});
  join.graph.set_arc_beta(2, 1.0);
  join.initial_rates[0] = 2.0;
  join.initial_rates[1] = 3.0;
  EXPECT_DOUBLE_EQ(PropagateRateBounds(join)[2], 6.0);
}

}  // namespace
}  // namespace vnfwdm
