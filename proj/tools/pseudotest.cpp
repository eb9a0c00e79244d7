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

// pseudotest command line: analyze, aggregate, resume, rules print, version.
//
// Exit codes: 0 success, 1 usage/config/project error, 2 unusable baseline,
// 3 internal error, 130 interrupted (resume with `pseudotest resume`).

#include <csignal>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pseudotest/pseudotest.hpp"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

volatile std::sig_atomic_t g_stop = 0;

void on_signal(int) { g_stop = 1; }

void install_signal_handlers() {
  struct sigaction sa {};
  sa.sa_handler = on_signal;
  sigemptyset(&sa.sa_mask);
  sigaction(SIGINT, &sa, nullptr);
  sigaction(SIGTERM, &sa, nullptr);
}

void diagnostic(const json& record) { std::cerr << record.dump() << std::endl; }

void error_line(int code, const std::string& message) {
  diagnostic({{"level", "error"}, {"exit_code", code}, {"message", message}});
}

struct AnalyzeFlags {
  std::string root;
  std::optional<std::string> config;
  std::optional<std::string> adapter;
  std::optional<std::string> test_type;
  std::optional<double> timeout_factor;
  std::optional<std::int64_t> timeout_floor_ms;
  std::optional<int> workers;
  std::optional<std::string> mode;
  std::optional<double> baseline_failure_threshold;
  std::optional<std::string> rules;
  std::optional<std::string> out;
  std::optional<std::string> timestamp;
  std::optional<std::string> project;
  std::optional<std::uint64_t> shuffle_seed;
  bool quiet = false;
};

pseudotest::AnalysisConfig effective_config(const AnalyzeFlags& f) {
  pseudotest::AnalysisConfig config;
  fs::path config_path;
  if (f.config) {
    config_path = *f.config;
  } else if (fs::is_directory(f.root) && fs::exists(fs::path(f.root) / "pseudotest.json")) {
    config_path = fs::path(f.root) / "pseudotest.json";
  }
  if (!config_path.empty()) config = pseudotest::load_config_file(config_path);
  if (f.adapter) config.adapter = *f.adapter;
  if (f.test_type) config.test_type = pseudotest::parse_test_type(*f.test_type);
  if (f.timeout_factor) config.timeout_factor = *f.timeout_factor;
  if (f.timeout_floor_ms) config.timeout_floor_ms = *f.timeout_floor_ms;
  if (f.workers) config.workers = *f.workers;
  if (f.mode) config.mode = pseudotest::parse_run_mode(*f.mode);
  if (f.baseline_failure_threshold) config.baseline_failure_threshold = *f.baseline_failure_threshold;
  if (f.rules) config.rules_path = *f.rules;
  if (f.out) config.output_dir = *f.out;
  if (f.project) config.project_name = *f.project;
  // The timestamp flag is a run option, not configuration.
  pseudotest::validate_config(config);
  return config;
}

pseudotest::RunOptions run_options(const fs::path& out, bool quiet) {
  pseudotest::RunOptions options;
  options.output_dir = out;
  options.should_stop = [] { return g_stop != 0; };
  if (!quiet) options.on_event = [](const json& e) { diagnostic(e); };
  return options;
}

int finish_run(const pseudotest::RunOutcome& outcome, const fs::path& out) {
  if (outcome.interrupted) {
    error_line(130, "interrupted; continue with: pseudotest resume <project> " +
                        outcome.journal.string());
    return 130;
  }
  std::cout << pseudotest::render_table({outcome.report});
  for (const auto& r : outcome.report.functions) {
    if (r.verdict.kind == pseudotest::VerdictKind::kPseudoTested)
      std::cout << "pseudo-tested: " << r.function.id.key() << "\n";
  }
  std::cout << "report written to " << out.string() << "\n";
  return 0;
}

template <typename F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const pseudotest::BaselineError& e) {
    error_line(2, e.what());
    return 2;
  } catch (const pseudotest::ConfigError& e) {
    error_line(1, e.what());
    return 1;
  } catch (const pseudotest::AdapterError& e) {
    error_line(1, e.what());
    return 1;
  } catch (const pseudotest::IoError& e) {
    error_line(1, e.what());
    return 1;
  } catch (const pseudotest::fixture::ParseError& e) {
    error_line(1, e.what());
    return 1;
  } catch (const std::exception& e) {
    error_line(3, std::string("internal error: ") + e.what());
    return 3;
  }
}

int cmd_resume(const std::string& root, const std::string& journal, std::optional<int> workers,
               bool quiet) {
  return guarded([&] {
    fs::path out = fs::path(journal).parent_path();
    if (out.empty()) out = ".";
    const auto outcome =
        pseudotest::resume_analysis(root, journal, run_options(out, quiet), workers);
    return finish_run(outcome, out);
  });
}

int cmd_analyze(const AnalyzeFlags& flags, const std::optional<std::string>& resume_journal) {
  if (resume_journal) return cmd_resume(flags.root, *resume_journal, flags.workers, flags.quiet);
  return guarded([&] {
    const auto config = effective_config(flags);
    const fs::path out = config.output_dir;
    auto options = run_options(out, flags.quiet);
    options.timestamp = flags.timestamp;
    options.shuffle_seed = flags.shuffle_seed;
    return finish_run(pseudotest::run_analysis(config, flags.root, options), out);
  });
}

int cmd_aggregate(const std::vector<std::string>& paths, const std::string& out) {
  std::vector<pseudotest::AnalysisReport> reports;
  std::vector<std::string> bad;
  for (const auto& p : paths) {
    try {
      reports.push_back(pseudotest::load_report(p));
    } catch (const std::exception& e) {
      bad.push_back(p);
      error_line(1, e.what());
    }
  }
  if (!bad.empty()) {
    error_line(1, "invalid reports: " + pseudotest::join(bad, ", "));
    return 1;
  }
  return guarded([&] {
    const auto groups = pseudotest::group_reports(reports);
    const std::string text =
        pseudotest::render_group_table(groups) + "\n" + pseudotest::render_table(reports);
    json doc;
    doc["groups"] = json::array();
    for (const auto& g : groups) {
      doc["groups"].push_back({{"group", pseudotest::to_string(g.group)},
                               {"n", g.n},
                               {"mean", g.mean},
                               {"stddev", g.stddev ? json(*g.stddev) : json(nullptr)},
                               {"min", g.summary.min},
                               {"q1", g.summary.q1},
                               {"median", g.summary.median},
                               {"q3", g.summary.q3},
                               {"max", g.summary.max}});
    }
    doc["projects"] = json::array();
    for (const auto& r : reports) {
      doc["projects"].push_back({{"project", r.metadata.project},
                                 {"test_type", pseudotest::to_string(r.metadata.test_type)},
                                 {"m_pt", r.metrics.m_pt},
                                 {"r_m_pt", r.metrics.r_m_pt},
                                 {"cc", r.metrics.cc},
                                 {"r_ct", r.metrics.r_ct}});
    }
    const fs::path dir = out;
    const auto plots = pseudotest::emit_plot_data(groups, reports);
    pseudotest::write_file(dir / "aggregate.txt", text);
    pseudotest::write_file(dir / "aggregate.json", doc.dump(2) + "\n");
    pseudotest::write_file(dir / "plots" / "boxplot.dat", plots.boxplot);
    pseudotest::write_file(dir / "plots" / "severity.dat", plots.severity);
    std::cout << text;
    return 0;
  });
}

int cmd_rules_print(const std::optional<std::string>& rules) {
  return guarded([&] {
    if (!rules) {
      std::cout << pseudotest::kDefaultRulesJson;
    } else {
      std::cout << pseudotest::ruleset_to_json(
          pseudotest::parse_ruleset(pseudotest::read_file(*rules), *rules));
    }
    return 0;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finds pseudo-tested functions with extreme mutation."};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(pseudotest::kVersion));

  AnalyzeFlags flags;
  std::optional<std::string> resume_journal;
  auto* analyze = app.add_subcommand("analyze", "Analyze a project");
  analyze->add_option("root", flags.root, "Project root (fixture file or directory)")->required();
  analyze->add_option("--config", flags.config, "Config file (default <root>/pseudotest.json)");
  analyze->add_option("--adapter", flags.adapter, "fixture or host");
  analyze->add_option("--test-type", flags.test_type, "unit or system");
  analyze->add_option("--timeout-factor", flags.timeout_factor, "Multiplier on the longest passing test");
  analyze->add_option("--timeout-floor-ms", flags.timeout_floor_ms, "Minimum per-test timeout");
  analyze->add_option("--workers", flags.workers, "Parallel workers")->check(CLI::PositiveNumber);
  analyze->add_option("--mode", flags.mode, "full or fast");
  analyze->add_option("--baseline-failure-threshold", flags.baseline_failure_threshold,
                       "Largest tolerated share of failing baseline tests");
  analyze->add_option("--rules", flags.rules, "Ruleset file");
  analyze->add_option("--out", flags.out, "Output directory (default ./pseudotest-out)");
  analyze->add_option("--timestamp", flags.timestamp, "Report timestamp");
  analyze->add_option("--project", flags.project, "Project name in reports");
  analyze->add_option("--shuffle-seed", flags.shuffle_seed, "Shuffle mutant scheduling order");
  analyze->add_option("--resume", resume_journal, "Continue from this journal");
  analyze->add_flag("--quiet", flags.quiet, "No progress events on stderr");

  std::vector<std::string> report_paths;
  std::string aggregate_out = "pseudotest-out";
  auto* aggregate = app.add_subcommand("aggregate", "Group statistics over report.json files");
  aggregate->add_option("reports", report_paths, "report.json files")->required();
  aggregate->add_option("--out", aggregate_out, "Output directory");

  std::string resume_root;
  std::string resume_path;
  std::optional<int> resume_workers;
  bool resume_quiet = false;
  auto* resume = app.add_subcommand("resume", "Continue an interrupted analysis");
  resume->add_option("root", resume_root)->required();
  resume->add_option("journal", resume_path)->required();
  resume->add_option("--workers", resume_workers, "Parallel workers")->check(CLI::PositiveNumber);
  resume->add_flag("--quiet", resume_quiet);

  std::optional<std::string> rules_file;
  auto* rules = app.add_subcommand("rules", "Classification rules");
  rules->require_subcommand(1);
  auto* rules_print = rules->add_subcommand("print", "Print the effective ruleset");
  rules_print->add_option("--rules", rules_file, "Ruleset file (default: shipped rules)");

  auto* version = app.add_subcommand("version", "Print the version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    error_line(1, e.what());
    return 1;
  }

  install_signal_handlers();
  if (*analyze) return cmd_analyze(flags, resume_journal);
  if (*aggregate) return cmd_aggregate(report_paths, aggregate_out);
  if (*resume) return cmd_resume(resume_root, resume_path, resume_workers, resume_quiet);
  if (*rules_print) return cmd_rules_print(rules_file);
  if (*version) {
    std::cout << "pseudotest " << pseudotest::kVersion << "\n";
    return 0;
  }
  return 1;
}
