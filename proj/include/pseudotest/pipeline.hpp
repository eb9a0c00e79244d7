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

// End-to-end analysis: discover, baseline with coverage, filter and
// generate, plan, execute, derive verdicts, classify, compute metrics and
// write the report files. Everything the CLI does is reachable from here.

#ifndef PSEUDOTEST_PIPELINE_HPP
#define PSEUDOTEST_PIPELINE_HPP

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pseudotest/adapter.hpp"
#include "pseudotest/classify.hpp"
#include "pseudotest/config.hpp"
#include "pseudotest/executor.hpp"
#include "pseudotest/fixture_adapter.hpp"
#include "pseudotest/host_adapter.hpp"
#include "pseudotest/journal.hpp"
#include "pseudotest/metrics.hpp"
#include "pseudotest/model.hpp"
#include "pseudotest/mutagen.hpp"
#include "pseudotest/report.hpp"
#include "pseudotest/util.hpp"

namespace pseudotest {

inline constexpr std::string_view kVersion = "1.0.0";

// The baseline cannot support an analysis: no passing test, or too many
// failing ones.
class BaselineError : public Error {
 public:
  using Error::Error;
};

// The journal does not belong to this project snapshot and configuration.
class StaleJournalError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

struct RunOptions {
  fs::path output_dir = "pseudotest-out";
  // Takes precedence over config and SOURCE_DATE_EPOCH.
  std::optional<std::string> timestamp;
  std::function<bool()> should_stop;
  std::optional<std::uint64_t> shuffle_seed;
  // Progress events; the CLI prints them as JSON lines.
  std::function<void(const nlohmann::json&)> on_event;
};

struct RunOutcome {
  AnalysisReport report;
  Baseline baseline;
  ExecutionMatrix matrix;
  fs::path journal;
  bool interrupted = false;
};

inline std::unique_ptr<Adapter> make_adapter(const AnalysisConfig& config,
                                             const fs::path& root,
                                             const fs::path& work_dir) {
  if (config.adapter == "fixture")
    return std::make_unique<FixtureAdapter>(root, config.adapter_options);
  if (config.adapter == "host")
    return std::make_unique<HostAdapter>(root, work_dir, config.adapter_options);
  throw ConfigError("unknown adapter '" + config.adapter + "' (expected fixture or host)");
}

inline Ruleset load_ruleset(const AnalysisConfig& config) {
  if (!config.rules_path) return default_ruleset();
  return parse_ruleset(read_file(*config.rules_path), *config.rules_path);
}

// Identifies a (configuration, ruleset, adapter, project snapshot) tuple.
inline std::string compute_digest(const AnalysisConfig& config, const Ruleset& rules,
                                  const Adapter& adapter) {
  return Fnv1a()
      .field(config_digest_material(config).dump())
      .field(ruleset_to_json(rules))
      .field(adapter.name())
      .field(adapter.version())
      .field(adapter.snapshot_fingerprint())
      .hex();
}

inline std::string format_utc(std::time_t t) {
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Explicit value, then config, then SOURCE_DATE_EPOCH, then the clock.
inline std::string resolve_timestamp(const std::optional<std::string>& explicit_value,
                                     const AnalysisConfig& config) {
  if (explicit_value) return *explicit_value;
  if (config.timestamp) return *config.timestamp;
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    char* end = nullptr;
    const long long v = std::strtoll(epoch, &end, 10);
    if (end != epoch && *end == '\0') return format_utc(static_cast<std::time_t>(v));
  }
  return format_utc(std::time(nullptr));
}

namespace detail {

inline void emit(const RunOptions& options, const nlohmann::json& event) {
  if (options.on_event) options.on_event(event);
}

inline void check_baseline(const Baseline& baseline, double threshold) {
  std::size_t failed = 0;
  std::vector<std::string> names;
  for (const auto& t : baseline.tests) {
    if (t.passed()) continue;
    ++failed;
    if (names.size() < 10) names.push_back(t.id);
  }
  const std::string listed =
      names.empty() ? std::string() : " (failing: " + join(names, ", ") +
                                          (failed > names.size() ? ", ..." : "") + ")";
  if (baseline.tests.empty() || failed == baseline.tests.size())
    throw BaselineError("no usable baseline: no test passed" + listed);
  const double ratio =
      static_cast<double>(failed) / static_cast<double>(baseline.tests.size());
  if (ratio > threshold) {
    throw BaselineError(std::to_string(failed) + " of " +
                        std::to_string(baseline.tests.size()) +
                        " tests fail on the original code (ratio " + format_double(ratio) +
                        " exceeds threshold " + format_double(threshold) + ")" + listed);
  }
}

struct Context {
  AnalysisConfig config;
  fs::path root;
  fs::path output_dir;
  std::string digest;
  std::string timestamp;
  std::unique_ptr<Adapter> adapter;
  Ruleset rules;
};

inline RunOutcome finish(Context& ctx, const Baseline& baseline,
                         const std::vector<FunctionUnderTest>& inventory,
                         JournalWriter& journal, const ExecutionMatrix* prior,
                         const RunOptions& options) {
  const ValueProviderRegistry providers(ctx.config.value_providers);
  const OperatorTable table = OperatorTable::with_overrides(ctx.config.operator_table);
  const auto filtered = filter_functions(inventory, providers);
  const auto mutants = generate_all_mutants(filtered.eligible, table, providers);

  PlanSettings settings;
  settings.timeout_factor = ctx.config.timeout_factor;
  settings.timeout_floor_ms = ctx.config.timeout_floor_ms;
  settings.workers = resolve_workers(ctx.config);
  settings.mode = ctx.config.mode;
  RunPlan plan;
  try {
    plan = plan_run(baseline.coverage, mutants, baseline.tests, settings);
  } catch (const PlanningError& e) {
    throw BaselineError(e.what());
  }
  emit(options, {{"event", "plan"},
                 {"functions", inventory.size()},
                 {"mutants", mutants.size()},
                 {"planned", plan.items.size()},
                 {"timeout_ms", plan.timeout_ms},
                 {"workers", plan.workers}});

  ExecutionOptions exec;
  exec.workspace_root = ctx.output_dir / "work";
  exec.journal = &journal;
  exec.prior = prior;
  exec.should_stop = options.should_stop;
  exec.shuffle_seed = options.shuffle_seed;
  auto executed = execute_plan(plan, *ctx.adapter, exec);
  journal.write_summary(plan.workers, executed.matrix.wall_ms, executed.interrupted);

  RunOutcome outcome;
  outcome.baseline = baseline;
  outcome.matrix = executed.matrix;
  outcome.journal = journal.path();
  outcome.interrupted = executed.interrupted || !matrix_accounts_for_plan(plan, executed.matrix);
  if (outcome.interrupted) {
    emit(options, {{"event", "interrupted"}, {"journal", journal.path().string()}});
    return outcome;
  }

  AnalysisReport& report = outcome.report;
  report.metadata.project = ctx.config.project_name.value_or(ctx.adapter->project_name());
  report.metadata.test_type = ctx.config.test_type;
  report.metadata.timestamp = ctx.timestamp;
  report.metadata.config_digest = ctx.digest;
  report.metadata.adapter = ctx.adapter->name() + "/" + ctx.adapter->version();
  report.metadata.timeout_ms = plan.timeout_ms;
  report.metadata.mode = plan.mode;

  std::map<std::string, std::vector<const PlannedMutant*>> by_function;
  for (const auto& item : plan.items)
    by_function[item.mutant.function.key()].push_back(&item);
  std::map<std::string, std::optional<ExclusionReason>> exclusions;
  for (const auto& f : filtered.excluded) exclusions[f.id.key()] = f.exclusion;

  for (const auto& function : inventory) {
    const std::string key = function.id.key();
    FunctionRecord record;
    record.function = function;
    if (auto it = exclusions.find(key); it != exclusions.end())
      record.function.exclusion = it->second;
    record.covering_tests = baseline.coverage.covering(key).size();
    if (record.covering_tests == 0) {
      record.verdict = FunctionVerdict::uncovered();
    } else if (record.function.exclusion) {
      record.verdict = FunctionVerdict::excluded(*record.function.exclusion);
    } else {
      std::vector<MutantResults> results;
      for (const auto* item : by_function[key])
        results.push_back(executed.matrix.results(item->mutant.mutant_id));
      record.verdict = derive_function_verdict(results, true);
    }
    const auto cls = classify_function(function, ctx.rules);
    record.category = cls.category;
    record.severity = cls.severity;
    report.functions.push_back(std::move(record));
  }
  for (const auto& item : plan.items) {
    MutantRecord m;
    m.mutant = item.mutant;
    m.results = executed.matrix.row(item.mutant.mutant_id);
    report.mutants.push_back(std::move(m));
  }
  report.metrics = compute_project_metrics(report, baseline.coverage);

  write_report_files(ctx.output_dir, report);
  emit(options, {{"event", "report"},
                 {"output", ctx.output_dir.string()},
                 {"m_pt", report.metrics.m_pt},
                 {"r_m_pt", report.metrics.r_m_pt}});
  return outcome;
}

inline void prepare_output(const fs::path& dir) {
  fs::create_directories(dir);
  write_file(dir / kOutputMarker, "");
}

}  // namespace detail

inline RunOutcome run_analysis(const AnalysisConfig& config, const fs::path& root,
                               const RunOptions& options = {}) {
  validate_config(config);
  if (!fs::exists(root)) throw AdapterError(root.string() + ": project not found");
  detail::Context ctx;
  ctx.config = config;
  ctx.root = root;
  ctx.output_dir = options.output_dir;
  detail::prepare_output(ctx.output_dir);
  ctx.rules = load_ruleset(config);
  ctx.adapter = make_adapter(config, root, ctx.output_dir / "work");
  verify_capabilities(*ctx.adapter);
  ctx.digest = compute_digest(config, ctx.rules, *ctx.adapter);
  ctx.timestamp = resolve_timestamp(options.timestamp, config);

  JournalWriter journal(ctx.output_dir / "journal.log", false);
  journal.write_header({ctx.digest, config_to_json(config), fs::absolute(root).string(),
                        ctx.config.project_name.value_or(ctx.adapter->project_name()),
                        ctx.timestamp});

  const auto inventory = ctx.adapter->discover_functions();
  detail::emit(options, {{"event", "inventory"}, {"functions", inventory.size()}});
  const Baseline baseline = ctx.adapter->run_tests_with_coverage(std::nullopt);
  journal.write_baseline(baseline);
  detail::emit(options, {{"event", "baseline"}, {"tests", baseline.tests.size()}});
  detail::check_baseline(baseline, config.baseline_failure_threshold);
  return detail::finish(ctx, baseline, inventory, journal, nullptr, options);
}

// Continues the run recorded in `journal_path`. Only (mutant, test) pairs
// missing from the journal are executed. `workers` optionally overrides the
// recorded worker setting.
inline RunOutcome resume_analysis(const fs::path& root, const fs::path& journal_path,
                                  const RunOptions& options = {},
                                  std::optional<int> workers = std::nullopt) {
  const auto contents = read_journal(journal_path);
  detail::Context ctx;
  ctx.config = parse_config(contents.header->config);
  if (workers) ctx.config.workers = workers;
  validate_config(ctx.config);
  ctx.root = root;
  ctx.output_dir = journal_path.has_parent_path() ? journal_path.parent_path() : fs::path(".");
  detail::prepare_output(ctx.output_dir);
  ctx.rules = load_ruleset(ctx.config);
  ctx.adapter = make_adapter(ctx.config, root, ctx.output_dir / "work");
  verify_capabilities(*ctx.adapter);
  ctx.digest = compute_digest(ctx.config, ctx.rules, *ctx.adapter);
  if (ctx.digest != contents.header->config_digest) {
    throw StaleJournalError("stale journal: " + journal_path.string() +
                            " was written for a different project snapshot or configuration");
  }
  ctx.timestamp = contents.header->timestamp;

  ExecutionMatrix prior;
  for (const auto& v : contents.verdicts) prior.set(v.mutant_id, v.test_id, v.verdict);
  detail::emit(options, {{"event", "resume"}, {"recorded", prior.size()}});

  JournalWriter journal(journal_path, true);
  const auto inventory = ctx.adapter->discover_functions();
  Baseline baseline;
  if (contents.baseline) {
    baseline = *contents.baseline;
  } else {
    baseline = ctx.adapter->run_tests_with_coverage(std::nullopt);
    journal.write_baseline(baseline);
  }
  detail::check_baseline(baseline, ctx.config.baseline_failure_threshold);
  return detail::finish(ctx, baseline, inventory, journal, &prior, options);
}

}  // namespace pseudotest

#endif  // PSEUDOTEST_PIPELINE_HPP
