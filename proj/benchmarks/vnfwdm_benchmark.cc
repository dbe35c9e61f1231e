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

#include <benchmark/benchmark.h>

#include "vnfwdm/milp_builder.h"
#include "vnfwdm/miqcp_builder.h"
#include "vnfwdm/model_writer.h"
#include "vnfwdm/oracle.h"
#include "vnfwdm/partition.h"
#include "vnfwdm/topologies.h"
#include "vnfwdm/validator.h"

namespace vnfwdm {
namespace {

const Scenario& Path6Scenario() {
  static const Scenario s = EnumeratePermutations(BuiltinTopology("path6"), "path6")[2];
  return s;
}

void BM_BuildMiqcp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(BuildMiqcp(Path6Scenario()).num_constraints());
}
BENCHMARK(BM_BuildMiqcp)->Unit(benchmark::kMillisecond);

void BM_BuildMilp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(BuildMilp(Path6Scenario()).num_constraints());
}
BENCHMARK(BM_BuildMilp)->Unit(benchmark::kMillisecond);

void BM_WriteLp(benchmark::State& state) {
  const Model m = BuildMilp(Path6Scenario());
  for (auto _ : state) benchmark::DoNotOptimize(WriteLp(m).size());
}
BENCHMARK(BM_WriteLp)->Unit(benchmark::kMillisecond);

void BM_Partition(benchmark::State& state) {
  const int points = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const Partition p = ComputePartition(1.0, 4.0, points);
    benchmark::DoNotOptimize(EvalGtilde(p, 2.5));
  }
}
BENCHMARK(BM_Partition)->Arg(2)->Arg(6)->Arg(32);

void BM_Oracle(benchmark::State& state) {
  OracleOptions o;
  o.kind = state.range(0) == 0 ? ModelKind::kMiqcp : ModelKind::kMilp;
  for (auto _ : state) benchmark::DoNotOptimize(SolveExhaustive(Path6Scenario(), o).objective);
}
BENCHMARK(BM_Oracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Validate(benchmark::State& state) {
  OracleOptions o;
  o.kind = ModelKind::kMilp;
  const Assignment a = SolveExhaustive(Path6Scenario(), o).assignment;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Validate(Path6Scenario(), ModelKind::kMilp, a).feasible());
  }
}
BENCHMARK(BM_Validate)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace vnfwdm

BENCHMARK_MAIN();
