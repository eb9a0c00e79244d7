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

// Append-only results journal: one JSON object per line. Record kinds:
//
//   {"kind":"header", "format":..., "config_digest":..., "config":{...},
//    "project_root":..., "project":..., "timestamp":...}
//   {"kind":"baseline", "tests":[...], "coverage":{...}, "all_function_count":N}
//   {"kind":"verdict", "mutant":..., "test":..., "verdict":"KILLED"}
//   {"kind":"summary", "workers":N, "wall_ms":X, "interrupted":bool}
//
// Every line is flushed as soon as it is written; a torn final line is
// ignored on read.

#ifndef PSEUDOTEST_JOURNAL_HPP
#define PSEUDOTEST_JOURNAL_HPP

#include <fstream>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pseudotest/adapter.hpp"
#include "pseudotest/model.hpp"
#include "pseudotest/util.hpp"

namespace pseudotest {

using json = nlohmann::json;

inline constexpr std::string_view kJournalFormat = "pseudotest-journal/1";

struct JournalHeader {
  std::string config_digest;
  json config = json::object();
  std::string project_root;
  std::string project;
  std::string timestamp;
};

struct VerdictRecord {
  std::string mutant_id;
  std::string test_id;
  ExecutionVerdict verdict = ExecutionVerdict::kInconclusive;
};

inline json baseline_to_json(const Baseline& baseline) {
  json tests = json::array();
  for (const auto& t : baseline.tests) {
    tests.push_back({{"id", t.id},
                     {"display_name", t.display_name},
                     {"status", to_string(t.baseline_status)},
                     {"duration_ms", t.baseline_duration_ms}});
  }
  json coverage = json::object();
  for (const auto& [test, functions] : baseline.coverage.executed_by())
    coverage[test] = functions;
  return {{"tests", tests},
          {"coverage", coverage},
          {"all_function_count", baseline.coverage.all_function_count()}};
}

inline Baseline baseline_from_json(const json& doc) {
  Baseline baseline;
  for (const auto& jt : doc.at("tests")) {
    TestCase t;
    t.id = jt.at("id").get<std::string>();
    t.display_name = jt.at("display_name").get<std::string>();
    t.baseline_status = parse_baseline_status(jt.at("status").get<std::string>());
    t.baseline_duration_ms = jt.at("duration_ms").get<std::int64_t>();
    baseline.tests.push_back(std::move(t));
  }
  baseline.coverage.set_all_function_count(doc.at("all_function_count").get<std::size_t>());
  for (const auto& [test, functions] : doc.at("coverage").items()) {
    baseline.coverage.add_test(test);
    for (const auto& f : functions) baseline.coverage.record(test, f.get<std::string>());
  }
  return baseline;
}

class JournalWriter {
 public:
  // Appends to an existing journal when `append` is true, otherwise
  // truncates.
  JournalWriter(const fs::path& path, bool append) : path_(path) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    out_.open(path, append ? std::ios::app : std::ios::trunc);
    if (!out_) throw IoError("cannot open journal " + path.string());
  }

  void write_header(const JournalHeader& header) {
    write({{"kind", "header"},
           {"format", kJournalFormat},
           {"config_digest", header.config_digest},
           {"config", header.config},
           {"project_root", header.project_root},
           {"project", header.project},
           {"timestamp", header.timestamp}});
  }
  void write_baseline(const Baseline& baseline) {
    json doc = baseline_to_json(baseline);
    doc["kind"] = "baseline";
    write(doc);
  }
  void write_verdict(const VerdictRecord& record) {
    write({{"kind", "verdict"},
           {"mutant", record.mutant_id},
           {"test", record.test_id},
           {"verdict", to_string(record.verdict)}});
  }
  void write_summary(int workers, double wall_ms, bool interrupted) {
    write({{"kind", "summary"},
           {"workers", workers},
           {"wall_ms", wall_ms},
           {"interrupted", interrupted}});
  }

  const fs::path& path() const { return path_; }

 private:
  void write(const json& record) {
    std::lock_guard lock(mutex_);
    out_ << record.dump() << '\n';
    out_.flush();
  }

  fs::path path_;
  std::ofstream out_;
  std::mutex mutex_;
};

struct JournalContents {
  std::optional<JournalHeader> header;
  std::optional<Baseline> baseline;
  std::vector<VerdictRecord> verdicts;
  bool completed = false;  // a non-interrupted summary was written
};

inline JournalContents read_journal(const fs::path& path) {
  if (!fs::exists(path)) throw IoError("journal " + path.string() + " not found");
  std::ifstream in(path);
  if (!in) throw IoError("cannot read journal " + path.string());
  JournalContents contents;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json record;
    try {
      record = json::parse(line);
      const std::string kind = record.at("kind").get<std::string>();
      if (kind == "header") {
        if (record.value("format", std::string{}) != kJournalFormat)
          throw IoError("journal " + path.string() + " has an unknown format");
        JournalHeader h;
        h.config_digest = record.at("config_digest").get<std::string>();
        h.config = record.at("config");
        h.project_root = record.at("project_root").get<std::string>();
        h.project = record.at("project").get<std::string>();
        h.timestamp = record.at("timestamp").get<std::string>();
        contents.header = std::move(h);
      } else if (kind == "baseline") {
        contents.baseline = baseline_from_json(record);
      } else if (kind == "verdict") {
        contents.verdicts.push_back(
            {record.at("mutant").get<std::string>(), record.at("test").get<std::string>(),
             parse_execution_verdict(record.at("verdict").get<std::string>())});
      } else if (kind == "summary") {
        contents.completed = !record.value("interrupted", true);
      }
    } catch (const json::exception&) {
      // Torn write from an interrupted run.
      continue;
    }
  }
  if (!contents.header)
    throw IoError("journal " + path.string() + " has no header record");
  return contents;
}

}  // namespace pseudotest

#endif  // PSEUDOTEST_JOURNAL_HPP
