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

Baseline sample_baseline() {
  Baseline b;
  TestCase t;
  t.id = "t1";
  t.display_name = "T one";
  t.baseline_duration_ms = 12;
  b.tests.push_back(t);
  t.id = "t2";
  t.baseline_status = BaselineStatus::kFailed;
  b.tests.push_back(t);
  b.coverage.set_all_function_count(4);
  b.coverage.add_test("t1");
  b.coverage.record("t1", "C::f()");
  return b;
}

TEST(Journal, RoundTrip) {
  TempDir tmp;
  const auto path = tmp / "j/journal.log";
  {
    JournalWriter writer(path, false);
    writer.write_header({"abc", {{"adapter", "fixture"}}, "/p", "proj", "2026-01-01T00:00:00Z"});
    writer.write_baseline(sample_baseline());
    writer.write_verdict({"C::f()#void", "t1", ExecutionVerdict::kSurvived});
    writer.write_summary(2, 10.0, false);
  }
  const auto contents = read_journal(path);
  EXPECT_EQ(contents.header->config_digest, "abc");
  EXPECT_EQ(contents.header->project, "proj");
  ASSERT_TRUE(contents.baseline);
  EXPECT_EQ(contents.baseline->tests.size(), 2u);
  EXPECT_FALSE(contents.baseline->tests[1].passed());
  EXPECT_EQ(contents.baseline->tests[0].baseline_duration_ms, 12);
  EXPECT_TRUE(contents.baseline->coverage.is_covered("C::f()"));
  EXPECT_EQ(contents.baseline->coverage.all_function_count(), 4u);
  ASSERT_EQ(contents.verdicts.size(), 1u);
  EXPECT_EQ(contents.verdicts[0].verdict, ExecutionVerdict::kSurvived);
  EXPECT_TRUE(contents.completed);
}

TEST(Journal, TornLastLineIsIgnored) {
  TempDir tmp;
  const auto path = tmp / "journal.log";
  {
    JournalWriter writer(path, false);
    writer.write_header({"abc", json::object(), "/p", "proj", "t"});
    writer.write_verdict({"m", "t1", ExecutionVerdict::kKilled});
  }
  {
    std::ofstream out(path, std::ios::app);
    out << R"({"kind":"verdict","mutant":"m","te)";
  }
  const auto contents = read_journal(path);
  EXPECT_EQ(contents.verdicts.size(), 1u);
  EXPECT_FALSE(contents.completed);
}

TEST(Journal, AppendKeepsEarlierRecords) {
  TempDir tmp;
  const auto path = tmp / "journal.log";
  {
    JournalWriter writer(path, false);
    writer.write_header({"abc", json::object(), "/p", "proj", "t"});
    writer.write_verdict({"m", "t1", ExecutionVerdict::kKilled});
    writer.write_summary(1, 1.0, true);
  }
  {
    JournalWriter writer(path, true);
    writer.write_verdict({"m", "t2", ExecutionVerdict::kTimeout});
  }
  const auto contents = read_journal(path);
  EXPECT_EQ(contents.verdicts.size(), 2u);
  EXPECT_FALSE(contents.completed);
}

TEST(Journal, MissingOrHeaderless) {
  TempDir tmp;
  EXPECT_THROW(read_journal(tmp / "none.log"), IoError);
  write_file(tmp / "empty.log", "{\"kind\":\"verdict\",\"mutant\":\"m\",\"test\":\"t\","
                                "\"verdict\":\"KILLED\"}\n");
  EXPECT_THROW(read_journal(tmp / "empty.log"), IoError);
}

}  // namespace
}  // namespace pseudotest
