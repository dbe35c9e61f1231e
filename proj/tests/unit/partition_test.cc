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
#include <random>

#include <gtest/gtest.h>

#include "vnfwdm/partition.h"
#include "vnfwdm/queues.h"
#include "vnfwdm/topologies.h"

namespace vnfwdm {
namespace {

double SecantError(double a, double b) {
  const double d = 1.0 / std::sqrt(a) - 1.0 / std::sqrt(b);
  return d * d;
}

TEST(PartitionTest, EqualErrorPoints) {
  const Partition p = ComputePartition(1.0, 4.0, 6);
  const double expected[] = {1.0, 1.2345679, 1.5625, 2.0408163, 2.7777778, 4.0};
  ASSERT_EQ(p.points.size(), 6u);
  for (int k = 0; k < 6; ++k) EXPECT_NEAR(p.points[k], expected[k], 1e-6);
  EXPECT_NEAR(p.MaxError(), 0.01, 1e-12);
  for (int k = 1; k <= p.K(); ++k) EXPECT_NEAR(p.SegmentError(k), 0.01, 1e-12);
}

TEST(PartitionTest, EvaluationQueueErrors) {
  EXPECT_NEAR(ComputePartition(2.0, 5.0, 4).MaxError(), 0.00751, 1e-5);
  EXPECT_NEAR(ComputePartition(47.0, 50.0, 2).MaxError(), SecantError(47.0, 50.0), 1e-15);
  EXPECT_NEAR(ComputePartition(47.0, 50.0, 2).MaxError(), 1.98e-5, 1e-7);
}

TEST(PartitionTest, KnotsAndSecantMaximum) {
  const Partition p = ComputePartition(1.0, 4.0, 6, 0.25);
  for (double pi : p.points) EXPECT_DOUBLE_EQ(EvalGtilde(p, pi), 1.0 / pi + 0.25);
  const double a = p.points[0], b = p.points[1];
  const double m = std::sqrt(a * b);
  EXPECT_NEAR(EvalGtilde(p, m) - 1.0 / m, SecantError(a, b) + 0.25, 1e-12);
}

TEST(PartitionTest, ConicWeights) {
  const Partition p = ComputePartition(1.0, 4.0, 6);
  auto xi = ConicWeights(p, 0.0, 0.0);
  ASSERT_EQ(xi.size(), 7u);  // K + 2 with K = 5
  for (double w : xi) EXPECT_EQ(w, 0.0);
  EXPECT_EQ(EvalHtilde(p, 0.0, 0.0), 0.0);

  // y = 0 with slack left: only the extra knot carries weight.
  xi = ConicWeights(p, 2.0, 0.0);
  EXPECT_NEAR(xi[6] * p.points[5], 2.0, 1e-12);
  EXPECT_EQ(EvalHtilde(p, 2.0, 0.0), 0.0);

  xi = ConicWeights(p, 2.5, 1.0);
  double sum = 0.0, slack = 0.0;
  for (int k = 0; k < p.num_knots(); ++k) {
    sum += k <= p.K() ? xi[k] : 0.0;
    slack += xi[k] * p.knot(k);
  }
  EXPECT_NEAR(sum, 1.0, 1e-12);
  EXPECT_NEAR(slack, 2.5, 1e-12);
  EXPECT_NEAR(EvalHtilde(p, 2.5, 1.0), EvalGtilde(p, 2.5), 1e-12);
}

TEST(PartitionTest, InverseIsSmallestAdmissibleSlack) {
  const Partition p = ComputePartition(2.0, 5.0, 4, 0.1);
  for (double x : {2.0, 2.3, 3.1, 4.4, 5.0}) {
    const double v = EvalGtilde(p, x);
    EXPECT_NEAR(InverseGtilde(p, v), x, 1e-9);
  }
  EXPECT_EQ(InverseGtilde(p, 10.0), 2.0);
  EXPECT_TRUE(std::isinf(InverseGtilde(p, 0.0)));
}

TEST(PartitionTest, OverApproximatesOnRandomPartitions) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> eps(0.05, 5.0), span(0.1, 50.0), shift(0.0, 0.3);
  std::uniform_int_distribution<int> points(2, 12);
  for (int trial = 0; trial < 200; ++trial) {
    const double e = eps(rng);
    const Partition p = ComputePartition(e, e + span(rng), points(rng), shift(rng));
    for (int i = 0; i <= 500; ++i) {
      const double x = p.eps + (p.upper - p.eps) * i / 500.0;
      ASSERT_GE(EvalGtilde(p, x), 1.0 / x - 1e-12);
    }
  }
}

TEST(QueuesTest, EvaluationBounds) {
  const auto all = EnumeratePermutations(BuiltinTopology("path6"));
  const Scenario& s = all[0];  // small vertex 0, large vertex 1
  const QueuePlan plan = ResolveQueues(s);
  EXPECT_DOUBLE_EQ(plan.forwarding.eps, 1.0);
  EXPECT_DOUBLE_EQ(plan.forwarding.upper, 4.0);
  EXPECT_EQ(plan.forwarding.points.size(), 6u);
  const auto& small = plan.processing[0][1][0];
  const auto& large = plan.processing[0][1][1];
  ASSERT_TRUE(small && large);
  EXPECT_DOUBLE_EQ(small->eps, 2.0);
  EXPECT_DOUBLE_EQ(small->upper, 5.0);
  EXPECT_DOUBLE_EQ(large->eps, 47.0);
  EXPECT_DOUBLE_EQ(large->upper, 50.0);
  EXPECT_EQ(large->points.size(), 2u);

  // Derived bounds without explicit configuration agree.
  Scenario derived = s;
  derived.approx = ApproxConfig{};
  derived.approx.processing_base_points = 4;
  const QueuePlan auto_plan = ResolveQueues(derived);
  EXPECT_DOUBLE_EQ(auto_plan.forwarding.eps, 1.0);
  EXPECT_DOUBLE_EQ(auto_plan.processing[0][1][0]->eps, 2.0);
  EXPECT_DOUBLE_EQ(auto_plan.processing[0][1][1]->eps, 47.0);
}

}  // namespace
}  // namespace vnfwdm
