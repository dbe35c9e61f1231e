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

#include <vector>

#include <gtest/gtest.h>

#include "vnfwdm/embedding.h"
#include "vnfwdm/error.h"
#include "vnfwdm/names.h"
#include "vnfwdm/solution.h"

namespace vnfwdm {
namespace {

// Chain 1 - 2 - 3 with a compute vertex in the middle and one s -> f -> d
// request of rate 3 over lightpaths 1 -> 2 and 2 -> 3 on line rate 4.
Scenario Chain(double capacity) {
  Scenario s;
  s.name = "chain";
  s.substrate = SubstrateNetwork({"1", "2", "3"},
                                 EdgesFromFibers({{0, 1, 0.1}, {1, 2, 0.1}}),
                                 {0.0, capacity, 0.0}, 1, 4.0);
  Request r;
  r.graph = ForwardingGraph({"s", "f", "d"}, {{0, 1}, {1, 2}});
  r.initial_rates[0] = 3.0;
  r.source_restrictions.push_back({0, 0, 1.0});
  r.dest_restrictions.push_back({2, 2, 1.0});
  s.requests.push_back(std::move(r));
  return s;
}

Assignment ChainAssignment(const Scenario& s, double mu) {
  const Namer names(s);
  const SubstrateNetwork& g = s.substrate;
  Assignment a;
  a.Set(names.RoutedLightpath(0, 1, g.EdgeIndex(0, 1), 0), 1.0);
  a.Set(names.RoutedLightpath(1, 2, g.EdgeIndex(1, 2), 0), 1.0);
  a.Set(names.Lambda(0, 0, 0, 1, 0, 1), 3.0);
  a.Set(names.Z(0, 0, 0, 1, 0, 1), 1.0);
  a.Set(names.Lambda(0, 1, 1, 2, 1, 2), 3.0);
  a.Set(names.Z(0, 1, 1, 2, 1, 2), 1.0);
  a.Set(names.Y(0, 1, 1), 1.0);
  a.Set(names.Mu(0, 1, 1), mu);
  return a;
}

TEST(DelayTest, SojournTimesAddUp) {
  const Scenario s = Chain(10.0);
  const Assignment a = ChainAssignment(s, 4.0);
  const EmbeddingView view(s, ModelKind::kMiqcp, a);
  EXPECT_DOUBLE_EQ(view.load(0, 1), 3.0);
  EXPECT_DOUBLE_EQ(view.arrival(0, 1, 1), 3.0);
  EXPECT_NEAR(view.lightpath_delay(0, 1), 0.1, 1e-15);
  const PathDelay d = ExactPathDelay(view, 0, {0, 1, 2}, {0, 1, 2});
  EXPECT_NEAR(d.propagation, 0.2, 1e-12);
  EXPECT_NEAR(d.forwarding, 2.0, 1e-12);  // 1 / (4 - 3) per lightpath
  EXPECT_NEAR(d.processing, 1.0, 1e-12);
  EXPECT_NEAR(d.total(), 3.2, 1e-12);
}

TEST(DelayTest, LargeVertexQueue) {
  const Scenario s = Chain(50.0);
  const EmbeddingView view(s, ModelKind::kMiqcp, ChainAssignment(s, 50.0));
  EXPECT_NEAR(ExactPathDelay(view, 0, {0, 1, 2}, {0, 1, 2}).processing, 1.0 / 47.0, 1e-15);
}

TEST(DelayTest, UnstableQueueIsReported) {
  const Scenario s = Chain(10.0);
  const EmbeddingView view(s, ModelKind::kMiqcp, ChainAssignment(s, 3.0));
  try {
    ExactPathDelay(view, 0, {0, 1, 2}, {0, 1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnstableQueue);
  }
}

TEST(DelayTest, ApproximateDelaysNeedTheApproximateView) {
  const Scenario s = Chain(10.0);
  const EmbeddingView view(s, ModelKind::kMiqcp, ChainAssignment(s, 4.0));
  EXPECT_THROW(ApproxPathDelay(view, 0, {0, 1, 2}, {0, 1, 2}), Error);
}

TEST(DelayTest, ActiveTuples) {
  const Scenario s = Chain(10.0);
  const EmbeddingView view(s, ModelKind::kMiqcp, ChainAssignment(s, 4.0));
  const auto tuples = ActiveTuples(view, 0, {0, 1, 2});
  ASSERT_EQ(tuples.size(), 1u);
  EXPECT_EQ(tuples[0], (std::vector<int>{0, 1, 2}));
}

}  // namespace
}  // namespace vnfwdm
