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

#include <filesystem>
#include <fstream>
#include <string>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "harness/experiment.h"
#include "harness/solver_adapter.h"
#include "vnfwdm/error.h"
#include "vnfwdm/milp_builder.h"
#include "vnfwdm/oracle.h"
#include "vnfwdm/solution.h"
#include "vnfwdm/topologies.h"

namespace vnfwdm::harness {
namespace {

using ::testing::HasSubstr;

std::filesystem::path TempDir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("vnfwdm_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

TEST(SolverConfigTest, ParseAndErrors) {
  const SolverAdapterConfig c = ParseSolverConfig(
      R"({"command": "run {model} {solution} {time_limit}", "time_limit": 5, "format": "mps"})");
  EXPECT_EQ(c.time_limit, 5.0);
  EXPECT_EQ(c.format, ModelFormat::kMps);
  EXPECT_EQ(ExpandCommand(c, "a b.mps", "s.sol", 2.5), "run 'a b.mps' 's.sol' 2.5");
  EXPECT_THROW(ParseSolverConfig("{"), Error);
  EXPECT_THROW(ParseSolverConfig(R"({"time_limit": 5})"), Error);
  EXPECT_THROW(ParseSolverConfig(R"({"command": "x {model} {solution}", "time_limit": -1})"),
               Error);
  EXPECT_THROW(ParseSolverConfig(R"({"command": "x {model}"})"), Error);
  EXPECT_THROW(ParseSolverConfig(R"({"command": "x {model} {solution}", "format": "nl"})"),
               Error);
}

TEST(SolverRunTest, FinishedFailedAndTimeout) {
  const auto dir = TempDir("run");
  const std::string sol = (dir / "out.sol").string();
  SolverAdapterConfig ok = ParseSolverConfig(R"({"command": "echo x 1 > {solution} # {model}"})");
  SolverRun run = RunSolver(ok, "m.lp", sol, 5.0);
  EXPECT_EQ(run.status, RunStatus::kFinished);
  EXPECT_EQ(run.exit_code, 0);
  EXPECT_TRUE(std::filesystem::exists(sol));

  const SolverAdapterConfig bad = ParseSolverConfig(R"({"command": "exit 3 # {model} {solution}"})");
  run = RunSolver(bad, "m.lp", sol, 5.0);
  EXPECT_EQ(run.status, RunStatus::kFailed);
  EXPECT_EQ(run.exit_code, 3);

  const SolverAdapterConfig slow =
      ParseSolverConfig(R"({"command": "sleep 60; : {model} {solution}"})");
  run = RunSolver(slow, "m.lp", sol, 0.01);
  EXPECT_EQ(run.status, RunStatus::kTimeout);
  EXPECT_LT(run.wall_seconds, 30.0);
}

TEST(ExperimentTest, CsvRoundTrip) {
  std::vector<ExperimentRecord> records(2);
  records[0] = {"path6", 3, ModelKind::kMilp, false, "optimal", 1.25, 1.2, 0.0416666667, 0.5};
  records[1] = {"path6", 3, ModelKind::kMilp, true, "timeout", std::nullopt, std::nullopt,
                std::nullopt, 600.0};
  const std::string csv = RecordsToCsv(records);
  EXPECT_EQ(csv.rfind(kCsvVersionLine, 0), 0u);
  const auto back = RecordsFromCsv(csv);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(RecordsToCsv(back), csv);
  EXPECT_EQ(back[1].status, "timeout");
  EXPECT_FALSE(back[1].lateness.has_value());
  EXPECT_THROW(RecordsFromCsv("a,b\n1,2\n"), Error);
}

TEST(ExperimentTest, PlotSeries) {
  std::vector<ExperimentRecord> records(2);
  records[0] = {"path6", 0, ModelKind::kMilp, false, "optimal", 1.1, 1.0, 0.1, 0.5};
  records[1] = {"path6", 0, ModelKind::kMilp, true, "optimal", 2.6, 2.5, 0.04, 0.25};
  const std::string gain = PlotData(records, PlotSeries::kLatenessGain);
  EXPECT_THAT(gain, HasSubstr("path6 milp 0 1 2.5 2.5\n"));
  const std::string err = PlotData(records, ParsePlotSeries("approx-error"));
  EXPECT_THAT(err, HasSubstr("0.04 0.5\n0.1 1\n"));
  EXPECT_THAT(PlotData(records, PlotSeries::kExecTime), HasSubstr("milp fixed 0.250000 1\n"));
  EXPECT_THROW(ParsePlotSeries("histogram"), Error);
}

TEST(ExperimentTest, OracleFallbackKeepsOrder) {
  ExperimentOptions o;
  o.formulations = {ModelKind::kMiqcp, ModelKind::kMilp};
  o.permutations = {4, 1};
  o.oracle_fallback = true;
  o.workers = 3;
  const auto records = RunExperiment(o);
  ASSERT_EQ(records.size(), 8u);
  EXPECT_EQ(records[0].perm, 4);
  EXPECT_EQ(records[0].formulation, ModelKind::kMiqcp);
  EXPECT_FALSE(records[0].fixed);
  EXPECT_TRUE(records[1].fixed);
  EXPECT_EQ(records[2].formulation, ModelKind::kMilp);
  EXPECT_EQ(records[4].perm, 1);
  for (const ExperimentRecord& r : records) {
    EXPECT_EQ(r.status, "optimal");
    ASSERT_TRUE(r.exact_lateness.has_value());
    EXPECT_EQ(r.approx_error.has_value(), r.formulation == ModelKind::kMilp);
  }
  EXPECT_LE(*records[0].exact_lateness, *records[1].exact_lateness + 1e-9);
}

// The external-solver path with a stand-in solver that copies a prepared
// solution file.
TEST(ExperimentTest, SolverCellValidatesTheReturnedSolution) {
  const auto dir = TempDir("cell");
  const Scenario s = EnumeratePermutations(BuiltinTopology("path6"), "path6")[2];
  OracleOptions oo;
  oo.kind = ModelKind::kMilp;
  const OracleResult res = SolveExhaustive(s, oo);
  const std::string prepared = (dir / "prepared.sol").string();
  {
    std::ofstream out(prepared);
    out << "solution status: optimal solution found\n"
        << WriteSolution(BuildMilp(s), res.assignment);
  }
  ExperimentOptions o;
  o.workdir = (dir / "work").string();
  o.solver = ParseSolverConfig(
      R"({"command": "cp )" + prepared + R"( {solution} # {model}", "time_limit": 30})");
  const ExperimentRecord rec = RunCell(s, "path6", 2, ModelKind::kMilp, false, o);
  EXPECT_EQ(rec.status, "optimal");
  ASSERT_TRUE(rec.lateness.has_value());
  EXPECT_NEAR(*rec.lateness, res.max_lateness, 1e-9);
  EXPECT_TRUE(std::filesystem::exists(dir / "work" / "path6_002_milp_joint.lp"));

  o.solver = ParseSolverConfig(R"({"command": "true {model} {solution}"})");
  EXPECT_EQ(RunCell(s, "path6", 2, ModelKind::kMilp, false, o).status, "failed");
}

}  // namespace
}  // namespace vnfwdm::harness
