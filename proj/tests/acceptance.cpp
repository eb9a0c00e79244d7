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

// Acceptance suite. Runs the nine end-to-end criteria and prints one
// PASS/FAIL line for each; exits non-zero when any criterion fails.

#include <fcntl.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "test_support.hpp"

namespace {

using namespace pseudotest;
using namespace pseudotest::testing;

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::string pct(double ratio) {
  std::ostringstream out;
  out.precision(4);
  out << std::fixed << ratio * 100.0 << "%";
  return out.str();
}

const FunctionRecord* find_function(const AnalysisReport& report, const std::string& name) {
  for (const auto& r : report.functions)
    if (r.function.id.name == name) return &r;
  return nullptr;
}

// 1. Calculation golden fixture.
std::string criterion_calculation() {
  TempDir tmp("acc1");
  const auto run = run_cli({"analyze", (source_dir() / "fixtures/calculation").string(),
                            "--adapter", "fixture", "--out", (tmp / "out").string(),
                            "--timestamp", "2026-01-01T00:00:00Z", "--quiet"},
                           tmp.path());
  require(run.exit_code == 0, "exit code " + std::to_string(run.exit_code) + ": " + run.output);
  require(run.wall_ms < 5000.0, "runtime " + std::to_string(run.wall_ms) + " ms");
  const auto report = load_report(tmp / "out/report.json");
  const auto* add = find_function(report, "add");
  const auto* is_even = find_function(report, "isEven");
  require(add && add->verdict == FunctionVerdict::pseudo_tested(), "add not PSEUDO_TESTED");
  require(is_even && is_even->verdict == FunctionVerdict::tested(), "isEven not TESTED");
  require(report.mutants.size() == 3, "expected 3 mutants, got " +
                                          std::to_string(report.mutants.size()));
  std::map<std::string, std::pair<std::string, ExecutionVerdict>> seen;
  for (const auto& m : report.mutants) {
    require(m.results.size() == 1 && m.results[0].first == "testCalculation",
            "mutant " + m.mutant.mutant_id + " row is not exactly testCalculation");
    seen[m.mutant.function.name + ":" + std::string(to_string(m.mutant.variant))] = {
        m.mutant.substituted_value, m.results[0].second};
  }
  const std::map<std::string, std::pair<std::string, ExecutionVerdict>> expected = {
      {"add:VOID_EMPTY", {"", ExecutionVerdict::kSurvived}},
      {"isEven:RETURN_VALUE_A", {"false", ExecutionVerdict::kKilled}},
      {"isEven:RETURN_VALUE_B", {"true", ExecutionVerdict::kSurvived}}};
  require(seen == expected, "mutant verdicts differ from the golden matrix");
  return "3 mutants, add PSEUDO_TESTED, isEven TESTED, " +
         std::to_string(static_cast<int>(run.wall_ms)) + " ms";
}

struct TableRow {
  std::string project;
  int m_pt;
  double r_m_pt;  // percent
  double cc;      // percent
  double r_ct;    // percent
  bool unit;
};

// Published overview table.
const std::vector<TableRow>& overview_table() {
  static const std::vector<TableRow> rows = {
      {"Coll", 124, 9.5, 81.6, 73.9, true},        {"Lang", 22, 1.9, 93.0, 91.3, true},
      {"Math", 271, 10.6, 84.8, 75.8, true},       {"Net", 28, 18.4, 29.0, 23.7, true},
      {"Engine Core", 41, 18.9, 50.0, 40.5, true}, {"Lib Commons", 45, 9.5, 56.3, 51.1, true},
      {"dotnet", 154, 36.3, 48.1, 30.7, false},    {"DaisyDiff", 7, 6.4, 49.8, 46.7, false},
      {"Histone", 47, 24.8, 73.0, 54.9, false},    {"LittleProxy", 35, 71.4, 45.4, 13.0, false},
      {"Predictor", 80, 52.7, 72.4, 34.2, false},  {"Struts2", 154, 45.9, 27.0, 14.6, false},
      {"Symja", 234, 25.0, 21.3, 15.9, false},     {"Tspmccabe", 13, 21.3, 39.1, 30.7, false}};
  return rows;
}

// Report and coverage whose counts realize the row's CC and r(M_PT) exactly:
// 10000 functions, round(CC * 10000) covered, 1000 of them mutated and
// round(r(M_PT) * 1000) of those pseudo-tested.
std::pair<AnalysisReport, CoverageMap> synthetic_project(const TableRow& row) {
  const int all = 10000;
  const int covered = static_cast<int>(std::lround(row.cc * 100.0));
  const int mutated = 1000;
  const int pseudo = static_cast<int>(std::lround(row.r_m_pt * 10.0));
  AnalysisReport report;
  report.metadata.project = row.project;
  report.metadata.test_type = row.unit ? TestType::kUnit : TestType::kSystem;
  report.metadata.timestamp = "2026-01-01T00:00:00Z";
  report.metadata.adapter = "synthetic/1";
  CoverageMap coverage;
  coverage.set_all_function_count(all);
  coverage.add_test("t");
  for (int i = 0; i < all; ++i) {
    FunctionRecord r;
    r.function.id = {"P", "f" + std::to_string(i), "", {}};
    r.function.statement_count = 1;
    r.category = std::string(kUnclassified);
    if (i < covered) {
      coverage.record("t", r.function.id.key());
      r.covering_tests = 1;
      if (i < pseudo) r.verdict = FunctionVerdict::pseudo_tested();
      else if (i < mutated) r.verdict = FunctionVerdict::tested();
      else r.verdict = FunctionVerdict::excluded(ExclusionReason::kTrivialAccessor);
    } else {
      r.verdict = FunctionVerdict::uncovered();
    }
    report.functions.push_back(std::move(r));
  }
  report.metrics = compute_project_metrics(report, coverage);
  return {std::move(report), std::move(coverage)};
}

// 2. r(CT) oracle over the published table.
std::string criterion_metric_oracle() {
  double worst = 0.0;
  std::string worst_row;
  for (const auto& row : overview_table()) {
    const auto [report, coverage] = synthetic_project(row);
    const double got = report.metrics.r_ct * 100.0;
    const double diff = std::fabs(got - row.r_ct);
    require(diff <= 0.15, row.project + ": r(CT) " + std::to_string(got) + " vs published " +
                              std::to_string(row.r_ct));
    if (diff > worst) {
      worst = diff;
      worst_row = row.project;
    }
  }
  std::ostringstream out;
  out.precision(4);
  out << "14 rows within 0.15 pp; largest gap " << worst << " pp (" << worst_row << ")";
  return out.str();
}

// 3. Aggregation through the CLI over 14 synthetic report.json files.
std::string criterion_aggregation() {
  TempDir tmp("acc3");
  std::vector<std::string> args = {"aggregate", "--out", (tmp / "agg").string()};
  for (const auto& row : overview_table()) {
    AnalysisReport report;
    report.metadata.project = row.project;
    report.metadata.test_type = row.unit ? TestType::kUnit : TestType::kSystem;
    report.metadata.timestamp = "2026-01-01T00:00:00Z";
    report.metadata.adapter = "synthetic/1";
    report.metrics = metrics_from_counts(static_cast<std::size_t>(std::lround(row.r_m_pt * 10.0)),
                                         1000 - static_cast<std::size_t>(std::lround(row.r_m_pt * 10.0)),
                                         static_cast<std::size_t>(std::lround(row.cc * 100.0)),
                                         10000);
    const fs::path file = tmp / (row.project + ".json");
    write_file(file, emit_json(report));
    args.push_back(file.string());
  }
  const auto run = run_cli(args, tmp.path());
  require(run.exit_code == 0, "aggregate exit " + std::to_string(run.exit_code) + ": " + run.output);
  const auto doc = json::parse(read_file(tmp / "agg/aggregate.json"));
  require(doc.at("groups").size() == 2, "expected two groups");
  struct Expect {
    std::string group;
    double mean;
    double sd;
  };
  const Expect expected[] = {{"UNIT", 11.41, 6.42}, {"SYSTEM", 35.48, 20.60}};
  std::ostringstream summary;
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& g = doc.at("groups")[i];
    require(g.at("group") == expected[i].group, "group order");
    const double mean = g.at("mean").get<double>() * 100.0;
    const double sd = g.at("stddev").get<double>() * 100.0;
    require(std::fabs(mean - expected[i].mean) <= 0.10,
            expected[i].group + " mean " + std::to_string(mean));
    require(std::fabs(sd - expected[i].sd) <= 0.10,
            expected[i].group + " sd " + std::to_string(sd));
    summary << expected[i].group << " mean " << pct(mean / 100.0) << " sd " << pct(sd / 100.0)
            << (i == 0 ? "; " : "");
  }
  return summary.str();
}

// 4. Mutant counts and exclusion reasons over 1000 random functions.
std::string criterion_mutant_counts() {
  TempDir tmp("acc4");
  FixtureGenerator gen(20240417);
  const std::vector<std::string> types = {"void",   "boolean", "byte",   "short",  "int",
                                          "long",   "float",   "double", "char",   "String",
                                          "Widget", "Gadget"};
  json doc = {{"project", "random"}, {"container", "R"}, {"functions", json::array()},
              {"tests", json::array()}};
  for (int i = 0; i < 1000; ++i) {
    json f = {{"name", "f" + std::to_string(i)}, {"returns", gen.pick(types)},
              {"statements", gen.uniform(0, 3)}};
    if (gen.chance(0.1)) f["constructor"] = true;
    if (gen.chance(0.1)) f["compiler_generated"] = true;
    if (gen.chance(0.15)) f["trivial_accessor"] = true;
    doc["functions"].push_back(f);
  }
  write_fixture(tmp.path(), "random", doc);
  FixtureAdapter adapter(tmp.path());
  const ValueProviderRegistry providers(std::map<std::string, std::string>{{"Widget", "0"}});
  const auto inventory = adapter.discover_functions();
  require(inventory.size() == 1000, "inventory size");
  const auto filtered = filter_functions(inventory, providers);

  // Table 1 defaults, written out independently of the operator table.
  const std::map<std::string, std::vector<std::string>> table1 = {
      {"boolean", {"false", "true"}}, {"byte", {"0", "1"}},        {"short", {"0", "1"}},
      {"int", {"0", "1"}},            {"long", {"0", "1"}},        {"float", {"0.0", "1.0"}},
      {"double", {"0.0", "1.0"}},     {"char", {"' '", "'A'"}},    {"String", {"\"\"", "\"A\""}}};

  std::map<std::string, std::optional<ExclusionReason>> reasons;
  for (const auto& f : filtered.excluded) reasons[f.id.name] = f.exclusion;
  std::size_t total = 0;
  std::size_t expected_total = 0;
  for (const auto& jf : doc["functions"]) {
    const std::string name = jf["name"];
    const std::string type = jf["returns"];
    std::optional<ExclusionReason> expect;
    if (jf["statements"] == 0) expect = ExclusionReason::kEmptyBody;
    else if (jf.value("constructor", false)) expect = ExclusionReason::kConstructor;
    else if (jf.value("compiler_generated", false)) expect = ExclusionReason::kCompilerGenerated;
    else if (jf.value("trivial_accessor", false)) expect = ExclusionReason::kTrivialAccessor;
    else if (type == "Gadget") expect = ExclusionReason::kObjectReturnNoProvider;
    const auto it = reasons.find(name);
    const std::optional<ExclusionReason> got =
        it == reasons.end() ? std::nullopt : it->second;
    require(got == expect, name + ": wrong exclusion");

    const auto fut = std::find_if(inventory.begin(), inventory.end(),
                                  [&](const auto& f) { return f.id.name == name; });
    std::vector<Mutant> mutants;
    if (!expect) mutants = generate_mutants(*fut, OperatorTable::defaults(), providers);
    std::vector<std::string> values;
    for (const auto& m : mutants) values.push_back(m.substituted_value);
    if (expect) {
      require(mutants.empty(), name + ": excluded function has mutants");
    } else if (type == "void") {
      require(mutants.size() == 1 && mutants[0].variant == MutantVariant::kVoidEmpty,
              name + ": void must give one VOID_EMPTY mutant");
    } else if (type == "Widget") {
      require(mutants.size() == 1 && mutants[0].variant == MutantVariant::kObjectProvided,
              name + ": provided object must give one mutant");
    } else {
      require(values == table1.at(type), name + ": wrong replacement values");
    }
    expected_total += expect ? 0 : (type == "void" || type == "Widget" ? 1 : 2);
    total += mutants.size();
  }
  const auto all = generate_all_mutants(filtered.eligible, OperatorTable::defaults(), providers);
  require(all.size() == expected_total && total == expected_total, "mutant total");
  return "1000 functions, " + std::to_string(filtered.excluded.size()) + " excluded, " +
         std::to_string(expected_total) + " mutants";
}

std::map<std::string, std::string> output_files(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const char* rel : {"report.json", "report.csv", "report.sql", "report.txt",
                          "plots/boxplot.dat", "plots/severity.dat"}) {
    files[rel] = fs::exists(dir / rel) ? read_file(dir / rel) : std::string("<missing>");
  }
  return files;
}

// 5. Same output for any worker count or scheduling order.
std::string criterion_determinism() {
  TempDir tmp("acc5");
  FixtureGenerator gen(7);
  write_fixture(tmp / "corpus", "corpus", gen.corpus(30, 12));
  struct Variant {
    std::string label;
    std::vector<std::string> extra;
  };
  const std::vector<Variant> variants = {{"w1", {"--workers", "1"}},
                                         {"w4", {"--workers", "4"}},
                                         {"w8", {"--workers", "8"}},
                                         {"s1", {"--workers", "4", "--shuffle-seed", "11"}},
                                         {"s2", {"--workers", "8", "--shuffle-seed", "97"}}};
  std::map<std::string, std::string> reference;
  for (const auto& v : variants) {
    std::vector<std::string> args = {"analyze", (tmp / "corpus").string(), "--adapter", "fixture",
                                     "--mode", "full", "--out", (tmp / v.label).string(),
                                     "--timestamp", "2026-01-01T00:00:00Z", "--quiet"};
    args.insert(args.end(), v.extra.begin(), v.extra.end());
    const auto run = run_cli(args, tmp.path());
    require(run.exit_code == 0, v.label + " exit " + std::to_string(run.exit_code));
    const auto files = output_files(tmp / v.label);
    if (reference.empty()) reference = files;
    for (const auto& [name, content] : files)
      require(content == reference[name], v.label + ": " + name + " differs");
  }
  const auto report = load_report(tmp / "w1/report.json");
  std::size_t pseudo = 0;
  std::size_t tested = 0;
  for (const auto& r : report.functions) {
    pseudo += r.verdict.kind == VerdictKind::kPseudoTested;
    tested += r.verdict.kind == VerdictKind::kTested;
  }
  require(pseudo > 0 && tested > 0, "corpus should contain tested and pseudo-tested functions");
  return "5 runs identical (" + std::to_string(report.functions.size()) + " functions, " +
         std::to_string(report.mutants.size()) + " mutants, " + std::to_string(pseudo) +
         " pseudo-tested)";
}

// 6. Timeouts remove a function from the denominator.
std::string criterion_timeouts() {
  auto make = [](bool with_fast_test) {
    json doc = {{"project", "timeouts"},
                {"container", "T"},
                {"state", {{"v", 0}}},
                {"functions",
                 {{{"name", "slowPath"}, {"returns", "int"}, {"body", {"v += 3", "return v"}}},
                  {{"name", "bump"}, {"returns", "int"}, {"body", {"v += 1", "return v"}}}}},
                {"tests",
                 {{{"name", "slowTest"},
                   {"duration_ms", 10000},
                   {"steps", {{{"call", "slowPath"}, {"expect", 3}}}}},
                  {{"name", "fastTest"},
                   {"duration_ms", 10},
                   {"steps", {{{"call", "bump"}, {"expect", 1}}}}}}}};
    if (with_fast_test) {
      doc["tests"].push_back({{"name", "fastSlowPath"},
                              {"duration_ms", 10},
                              {"steps", {{{"call", "slowPath"}, {"expect", 3}}}}});
    }
    return doc;
  };
  AnalysisConfig config;
  config.adapter = "fixture";
  config.timeout_factor = 0.5;
  config.timeout_floor_ms = 0;
  config.workers = 2;

  TempDir tmp("acc6");
  write_fixture(tmp / "a", "timeouts", make(false));
  RunOptions options;
  options.output_dir = tmp / "out-a";
  options.timestamp = "2026-01-01T00:00:00Z";
  const auto first = run_analysis(config, tmp / "a", options);
  require(first.report.metadata.timeout_ms == 5000, "timeout should be 5000 ms");
  const auto* slow = find_function(first.report, "slowPath");
  require(slow && slow->verdict ==
                      FunctionVerdict::excluded(ExclusionReason::kAllCoveringTestsTimedOut),
          "slowPath should be EXCLUDED(ALL_COVERING_TESTS_TIMED_OUT), got " +
              (slow ? slow->verdict.to_string() : std::string("nothing")));
  require(first.report.metrics.mutated_executed == 1, "denominator should only hold bump");

  write_fixture(tmp / "b", "timeouts", make(true));
  options.output_dir = tmp / "out-b";
  const auto second = run_analysis(config, tmp / "b", options);
  const auto* restored = find_function(second.report, "slowPath");
  require(restored && restored->verdict.kind == VerdictKind::kTested,
          "slowPath should be TESTED with a fast covering test");
  require(second.report.metrics.mutated_executed == 2, "denominator should hold both");
  return "timed-out function excluded (denominator 1); fast test restores it (denominator 2)";
}

// 7. Default ruleset against the published category examples.
std::string criterion_classifier() {
  struct Case {
    std::string name;
    std::string category;
    Severity severity;
  };
  const std::vector<Case> cases = {
      {"hashcode", "hashcode", Severity::kIrrelevant},
      {"setSeed", "non-deterministic", Severity::kIrrelevant},
      {"updateTestData", "test-related", Severity::kIrrelevant},
      {"finalize", "finalization", Severity::kLow},
      {"closeStream", "finalization", Severity::kLow},
      {"logInfo", "monitoring", Severity::kLow},
      {"addToCache", "optimization", Severity::kLow},
      {"checkIndex", "validation", Severity::kLow},
      {"validateParam", "validation", Severity::kLow},
      {"notifyListeners", "events", Severity::kMedium},
      {"firePropertyChange", "events", Severity::kMedium},
      {"initWorkflow", "preparation", Severity::kMedium},
      {"setUpBlock", "preparation", Severity::kMedium},
      {"isRed", "setter and getter", Severity::kMedium},
      {"getV", "setter and getter", Severity::kMedium},
      {"toString", "toString", Severity::kMedium},
      {"abs", "transformation", Severity::kMedium},
      {"escape", "transformation", Severity::kMedium},
      {"equals", "object identity", Severity::kHigh},
      {"compareTo", "object identity", Severity::kHigh}};
  for (const auto& c : cases) {
    FunctionUnderTest f;
    f.id.name = c.name;
    const auto got = classify_function(f, default_ruleset());
    require(got.category == c.category && got.severity == c.severity,
            c.name + " -> " + got.category + "/" + std::string(to_string(got.severity)));
  }
  return std::to_string(cases.size()) + " names classified as published";
}

// Starts the CLI without waiting for it.
pid_t spawn_cli(const std::vector<std::string>& args, const fs::path& log) {
  std::vector<std::string> argv = {cli_path().string()};
  argv.insert(argv.end(), args.begin(), args.end());
  std::vector<char*> raw;
  for (auto& a : argv) raw.push_back(a.data());
  raw.push_back(nullptr);
  const std::string log_path = log.string();
  const pid_t pid = fork();
  if (pid == 0) {
    const int fd = open(log_path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
    if (fd >= 0) {
      dup2(fd, STDOUT_FILENO);
      dup2(fd, STDERR_FILENO);
    }
    execv(raw[0], raw.data());
    _exit(127);
  }
  return pid;
}

std::size_t verdict_lines(const fs::path& journal) {
  if (!fs::exists(journal)) return 0;
  std::size_t n = 0;
  std::istringstream in(read_file(journal));
  std::string line;
  while (std::getline(in, line))
    if (line.find("\"kind\":\"verdict\"") != std::string::npos) ++n;
  return n;
}

// 8. Interrupt, resume, compare with an uninterrupted run.
std::string criterion_resume() {
  TempDir tmp("acc8");
  FixtureGenerator gen(99);
  write_fixture(tmp / "project", "corpus", gen.corpus(30, 10));
  const json config = {{"adapter", "fixture"}, {"adapter_options", {{"simulate_runtime", true}}},
                       {"workers", 1}};
  write_file(tmp / "config.json", config.dump());
  auto args = [&](const std::string& out) {
    return std::vector<std::string>{"analyze", (tmp / "project").string(), "--config",
                                    (tmp / "config.json").string(), "--out", (tmp / out).string(),
                                    "--timestamp", "2026-01-01T00:00:00Z", "--quiet"};
  };
  const auto fresh = run_cli(args("fresh"), tmp.path());
  require(fresh.exit_code == 0, "uninterrupted run failed: " + fresh.output);
  const std::size_t total = verdict_lines(tmp / "fresh/journal.log");
  require(total >= 10, "corpus too small to interrupt meaningfully");

  const pid_t pid = spawn_cli(args("resumed"), tmp / "interrupted.log");
  const auto journal = tmp / "resumed/journal.log";
  const auto deadline = std::chrono::steady_clock::now() + std::chrono::minutes(2);
  while (verdict_lines(journal) * 10 < total * 3 && std::chrono::steady_clock::now() < deadline)
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  kill(pid, SIGINT);
  int status = 0;
  waitpid(pid, &status, 0);
  const std::size_t recorded = verdict_lines(journal);
  require(WIFEXITED(status) && WEXITSTATUS(status) == 130,
          "interrupted run should exit 130, status " + std::to_string(status));
  require(recorded * 10 >= total * 3 && recorded < total,
          "interrupt point " + std::to_string(recorded) + "/" + std::to_string(total));
  require(!fs::exists(tmp / "resumed/report.json"), "interrupted run wrote a report");

  const auto resumed = run_cli({"resume", (tmp / "project").string(), journal.string(), "--quiet"},
                               tmp.path());
  require(resumed.exit_code == 0, "resume failed: " + resumed.output);
  require(verdict_lines(journal) == total, "resume should complete exactly the missing pairs");
  const auto a = output_files(tmp / "fresh");
  const auto b = output_files(tmp / "resumed");
  for (const auto& [name, content] : a) require(b.at(name) == content, name + " differs");
  return "interrupted at " + std::to_string(recorded) + "/" + std::to_string(total) +
         " verdicts; resumed report byte-identical";
}

// 9. Host adapter on the shipped CMake sample.
std::string criterion_host_smoke() {
  TempDir tmp("acc9");
  const auto run = run_cli({"analyze", (source_dir() / "samples/host_ledger").string(), "--out",
                            (tmp / "out").string(), "--quiet"},
                           tmp.path());
  require(run.exit_code == 0, "exit " + std::to_string(run.exit_code) + ": " + run.output);
  require(run.wall_ms < 5 * 60 * 1000.0, "runtime " + std::to_string(run.wall_ms) + " ms");
  const auto report = load_report(tmp / "out/report.json");
  const auto baseline = read_journal(tmp / "out/journal.log").baseline;
  require(report.functions.size() >= 10, "sample has fewer than 10 functions");
  require(baseline && baseline->tests.size() >= 5, "sample has fewer than 5 tests");
  const auto* planted = find_function(report, "record_audit");
  require(planted && planted->verdict.kind == VerdictKind::kPseudoTested,
          "record_audit not flagged");
  std::size_t pseudo = 0;
  for (const auto& r : report.functions) pseudo += r.verdict.kind == VerdictKind::kPseudoTested;
  return std::to_string(report.functions.size()) + " functions, " +
         std::to_string(baseline->tests.size()) + " tests, " + std::to_string(pseudo) +
         " pseudo-tested (record_audit), " + std::to_string(static_cast<int>(run.wall_ms / 1000)) +
         " s";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria = {
      {"calculation golden fixture", criterion_calculation},
      {"r(CT) metric oracle", criterion_metric_oracle},
      {"group aggregation oracle", criterion_aggregation},
      {"mutant-count property", criterion_mutant_counts},
      {"determinism across workers and orders", criterion_determinism},
      {"timeout semantics", criterion_timeouts},
      {"classifier oracle", criterion_classifier},
      {"resume equivalence", criterion_resume},
      {"host adapter smoke test", criterion_host_smoke}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      detail = criteria[i].second();
      ok = true;
    } catch (const Failure& f) {
      detail = f.what;
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    failed += !ok;
    std::cout << "criterion " << (i + 1) << " " << (ok ? "PASS" : "FAIL") << ": "
              << criteria[i].first << " -- " << detail << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
