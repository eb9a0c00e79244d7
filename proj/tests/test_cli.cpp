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

using testing::TempDir;
using testing::run_cli;
using testing::write_fixture;

TEST(Cli, Version) {
  TempDir tmp;
  const auto run = run_cli({"version"}, tmp.path());
  EXPECT_EQ(run.exit_code, 0);
  EXPECT_NE(run.output.find(std::string(kVersion)), std::string::npos);
}

TEST(Cli, RulesPrintEmitsDefaults) {
  TempDir tmp;
  const auto run = run_cli({"rules", "print"}, tmp.path());
  EXPECT_EQ(run.exit_code, 0);
  EXPECT_EQ(run.output, std::string(kDefaultRulesJson));
}

TEST(Cli, MissingAdapterIsAConfigError) {
  TempDir tmp;
  write_fixture(tmp / "p", "calculation", testing::calculation_fixture());
  const auto run = run_cli({"analyze", (tmp / "p").string(), "--out", (tmp / "out").string()},
                           tmp.path());
  EXPECT_EQ(run.exit_code, 1);
  EXPECT_NE(run.output.find("adapter"), std::string::npos);
}

TEST(Cli, FailingBaselineExitsTwo) {
  auto doc = testing::calculation_fixture();
  doc["tests"].push_back({{"name", "broken"}, {"steps", {{{"assert", "1 == 2"}}}}});
  TempDir tmp;
  write_fixture(tmp / "p", "calculation", doc);
  const auto run = run_cli({"analyze", (tmp / "p").string(), "--adapter", "fixture", "--out",
                            (tmp / "out").string()},
                           tmp.path());
  EXPECT_EQ(run.exit_code, 2);
  EXPECT_NE(run.output.find("broken"), std::string::npos);
}

TEST(Cli, AnalyzePrintsSummary) {
  TempDir tmp;
  write_fixture(tmp / "p", "calculation", testing::calculation_fixture());
  const auto run = run_cli({"analyze", (tmp / "p").string(), "--adapter", "fixture", "--out",
                            (tmp / "out").string(), "--timestamp", "2026-01-01T00:00:00Z"},
                           tmp.path());
  EXPECT_EQ(run.exit_code, 0) << run.output;
  EXPECT_NE(run.output.find("Calculation::add(int)"), std::string::npos);
  EXPECT_TRUE(fs::exists(tmp / "out/report.json"));
}

TEST(Cli, AggregateRejectsInvalidReports) {
  TempDir tmp;
  write_file(tmp / "bad.json", "{not json");
  const auto run = run_cli({"aggregate", (tmp / "bad.json").string(), (tmp / "gone.json").string(),
                            "--out", (tmp / "agg").string()},
                           tmp.path());
  EXPECT_EQ(run.exit_code, 1);
  EXPECT_NE(run.output.find("bad.json"), std::string::npos);
  EXPECT_NE(run.output.find("gone.json"), std::string::npos);
}

TEST(Cli, ResumeOfForeignJournalIsRefused) {
  TempDir tmp;
  write_fixture(tmp / "p", "calculation", testing::calculation_fixture());
  ASSERT_EQ(run_cli({"analyze", (tmp / "p").string(), "--adapter", "fixture", "--out",
                     (tmp / "out").string()},
                    tmp.path())
                .exit_code,
            0);
  auto doc = testing::calculation_fixture();
  doc["functions"][1]["body"] = {"value -= x"};
  write_fixture(tmp / "p", "calculation", doc);
  const auto run = run_cli({"resume", (tmp / "p").string(), (tmp / "out/journal.log").string()},
                           tmp.path());
  EXPECT_EQ(run.exit_code, 1);
  EXPECT_NE(run.output.find("stale journal"), std::string::npos);
}

TEST(Cli, UnknownFlagIsAUsageError) {
  TempDir tmp;
  EXPECT_NE(run_cli({"analyze", "--bogus"}, tmp.path()).exit_code, 0);
}

}  // namespace
}  // namespace pseudotest
