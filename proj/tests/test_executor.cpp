// Copyright 2026 The pseudotest Authors
//
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

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace pseudotest {
namespace {

using testing::FixtureGenerator;
using testing::TempDir;
using testing::write_fixture;

TestCase test_case(const std::string& id, std::int64_t ms, bool passed = true) {
  TestCase t;
  t.id = id;
  t.display_name = id;
  t.baseline_duration_ms = ms;
  t.baseline_status = passed ? BaselineStatus::kPassed : BaselineStatus::kFailed;
  return t;
}

TEST(Timeout, FloorAndFactor) {
  EXPECT_EQ(compute_timeout_ms({test_case("a", 400)}, 2.0, 1000), 1000);
  EXPECT_EQ(compute_timeout_ms({test_case("a", 400), test_case("b", 900)}, 2.0, 1000), 1800);
  EXPECT_EQ(compute_timeout_ms({test_case("a", 333)}, 1.5, 0), 500);
  // Failing tests do not count.
  EXPECT_EQ(compute_timeout_ms({test_case("a", 10), test_case("b", 5000, false)}, 2.0, 0), 20);
}

struct Plan {
  CoverageMap coverage;
  std::vector<TestCase> tests;
  std::vector<Mutant> mutants;
};

Plan small_plan() {
  Plan p;
  p.tests = {test_case("slow", 300), test_case("fast", 5), test_case("bad", 1, false)};
  for (const auto& t : p.tests) p.coverage.add_test(t.id);
  p.coverage.record("slow", "C::f()");
  p.coverage.record("fast", "C::f()");
  p.coverage.record("bad", "C::f()");
  p.coverage.record("bad", "C::g()");
  FunctionId f{"C", "f", "", {}};
  FunctionId g{"C", "g", "", {}};
  p.mutants = {{Mutant::make_id(f, MutantVariant::kVoidEmpty), f, MutantVariant::kVoidEmpty, ""},
               {Mutant::make_id(g, MutantVariant::kVoidEmpty), g, MutantVariant::kVoidEmpty, ""}};
  return p;
}

TEST(Plan, OnlyPassingCoveringTestsFastestFirst) {
  const auto p = small_plan();
  const auto plan = plan_run(p.coverage, p.mutants, p.tests, {});
  ASSERT_EQ(plan.items.size(), 1u);  // g is only covered by a failing test
  ASSERT_EQ(plan.items[0].tests.size(), 2u);
  EXPECT_EQ(plan.items[0].tests[0].id, "fast");
  EXPECT_EQ(plan.items[0].tests[1].id, "slow");
  EXPECT_EQ(plan.timeout_ms, 1000);
}

TEST(Plan, NoPassingTestIsAnError) {
  auto p = small_plan();
  for (auto& t : p.tests) t.baseline_status = BaselineStatus::kFailed;
  EXPECT_THROW(plan_run(p.coverage, p.mutants, p.tests, {}), PlanningError);
}

// Records calls and returns scripted verdicts.
class ScriptedAdapter final : public Adapter {
 public:
  std::map<std::pair<std::string, std::string>, ExecutionVerdict> script;
  std::vector<std::pair<std::string, std::string>> calls;
  std::set<std::string> failing_materialization;
  std::mutex mutex;

  std::string name() const override { return "scripted"; }
  std::string version() const override { return "1"; }
  AdapterCapabilities capabilities() const override { return {true, true, true, true}; }
  std::string project_name() const override { return "scripted"; }
  std::string snapshot_fingerprint() const override { return "0"; }
  std::vector<FunctionUnderTest> discover_functions() override { return {}; }
  Baseline run_tests_with_coverage(const std::optional<std::set<std::string>>&) override {
    return {};
  }
  struct Handle : MutatedProject {
    using MutatedProject::MutatedProject;
  };
  std::unique_ptr<MutatedProject> materialize_mutant(const Mutant& m, const fs::path&) override {
    if (failing_materialization.count(m.mutant_id)) throw MaterializationError("no");
    return std::make_unique<Handle>(m);
  }
  ExecutionVerdict execute_test(MutatedProject& project, const TestCase& test,
                                std::chrono::milliseconds) override {
    const auto& id = project.mutant().mutant_id;
    std::lock_guard lock(mutex);
    calls.emplace_back(id, test.id);
    auto it = script.find({id, test.id});
    return it == script.end() ? ExecutionVerdict::kSurvived : it->second;
  }
};

TEST(Execute, FullMatrixRunsEveryPair) {
  const auto p = small_plan();
  ScriptedAdapter adapter;
  const auto id = p.mutants[0].mutant_id;
  adapter.script[{id, "fast"}] = ExecutionVerdict::kKilled;
  const auto plan = plan_run(p.coverage, p.mutants, p.tests, {});
  TempDir tmp;
  const auto result = execute_plan(plan, adapter, {tmp / "work"});
  EXPECT_EQ(result.matrix.size(), 2u);
  EXPECT_EQ(result.matrix.get(id, "fast"), ExecutionVerdict::kKilled);
  EXPECT_EQ(result.matrix.get(id, "slow"), ExecutionVerdict::kSurvived);
  EXPECT_TRUE(matrix_accounts_for_plan(plan, result.matrix));
}

TEST(Execute, FastModeStopsAtFirstKill) {
  const auto p = small_plan();
  ScriptedAdapter adapter;
  const auto id = p.mutants[0].mutant_id;
  adapter.script[{id, "fast"}] = ExecutionVerdict::kKilled;
  PlanSettings settings;
  settings.mode = RunMode::kFast;
  const auto plan = plan_run(p.coverage, p.mutants, p.tests, settings);
  TempDir tmp;
  const auto result = execute_plan(plan, adapter, {tmp / "work"});
  EXPECT_EQ(result.matrix.size(), 1u);
  EXPECT_EQ(adapter.calls.size(), 1u);
  EXPECT_TRUE(matrix_accounts_for_plan(plan, result.matrix));
}

TEST(Execute, MaterializationFailureIsInconclusive) {
  const auto p = small_plan();
  ScriptedAdapter adapter;
  adapter.failing_materialization.insert(p.mutants[0].mutant_id);
  const auto plan = plan_run(p.coverage, p.mutants, p.tests, {});
  TempDir tmp;
  const auto result = execute_plan(plan, adapter, {tmp / "work"});
  EXPECT_EQ(result.matrix.get(p.mutants[0].mutant_id, "fast"), ExecutionVerdict::kInconclusive);
  EXPECT_TRUE(adapter.calls.empty());
}

TEST(Execute, PriorVerdictsAreNotRerun) {
  const auto p = small_plan();
  ScriptedAdapter adapter;
  const auto plan = plan_run(p.coverage, p.mutants, p.tests, {});
  ExecutionMatrix prior;
  prior.set(p.mutants[0].mutant_id, "fast", ExecutionVerdict::kTimeout);
  TempDir tmp;
  ExecutionOptions options{tmp / "work"};
  options.prior = &prior;
  const auto result = execute_plan(plan, adapter, options);
  ASSERT_EQ(adapter.calls.size(), 1u);
  EXPECT_EQ(adapter.calls[0].second, "slow");
  EXPECT_EQ(result.matrix.get(p.mutants[0].mutant_id, "fast"), ExecutionVerdict::kTimeout);
}

TEST(Execute, StopRequestInterrupts) {
  const auto p = small_plan();
  ScriptedAdapter adapter;
  const auto plan = plan_run(p.coverage, p.mutants, p.tests, {});
  TempDir tmp;
  ExecutionOptions options{tmp / "work"};
  options.should_stop = [] { return true; };
  const auto result = execute_plan(plan, adapter, options);
  EXPECT_TRUE(result.interrupted);
  EXPECT_EQ(result.matrix.size(), 0u);
  EXPECT_FALSE(matrix_accounts_for_plan(plan, result.matrix));
}

TEST(Execute, WorkerCountAndOrderDoNotChangeTheMatrix) {
  TempDir tmp;
  FixtureGenerator gen(3);
  write_fixture(tmp / "p", "corpus", gen.corpus(20, 8));
  FixtureAdapter adapter(tmp / "p");
  const auto baseline = adapter.run_tests_with_coverage(std::nullopt);
  const auto filtered = filter_functions(adapter.discover_functions(), {});
  const auto mutants = generate_all_mutants(filtered.eligible, OperatorTable::defaults(), {});
  std::optional<ExecutionMatrix> reference;
  for (int workers : {1, 8}) {
    for (std::optional<std::uint64_t> seed : {std::optional<std::uint64_t>{}, std::optional<std::uint64_t>{5}}) {
      PlanSettings settings;
      settings.workers = workers;
      const auto plan = plan_run(baseline.coverage, mutants, baseline.tests, settings);
      ExecutionOptions options{tmp / "work"};
      options.shuffle_seed = seed;
      const auto result = execute_plan(plan, adapter, options);
      if (!reference) reference = result.matrix;
      EXPECT_EQ(result.matrix, *reference) << "workers " << workers;
    }
  }
  EXPECT_GT(reference->size(), 0u);
}

}  // namespace
}  // namespace pseudotest
