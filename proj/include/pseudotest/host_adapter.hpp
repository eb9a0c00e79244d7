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

// Adapter for CMake projects with CTest suites.
//
// Coverage: sources are copied into a coverage workspace and every function
// body gets a probe that appends the function key to the file named by
// PSEUDOTEST_TRACE, once per process. Each test then runs alone through
// `ctest -R '^name$' --output-junit`, so the probe log is that test's
// coverage.
//
// Mutants: each worker workspace holds an unmodified copy of the project and
// its own build tree. Materializing a mutant restores the previously mutated
// file, rewrites one function body and rebuilds incrementally.
//
// Options (adapter_options):
//   sources            directories scanned for functions, default ["src", "include"]
//   cmake_args         extra configure arguments
//   generator          CMake generator; default Ninja when available
//   build_timeout_ms   per build, default 600000
//   baseline_timeout_ms per baseline test, default 600000

#ifndef PSEUDOTEST_HOST_ADAPTER_HPP
#define PSEUDOTEST_HOST_ADAPTER_HPP

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "pseudotest/adapter.hpp"
#include "pseudotest/cpp_scanner.hpp"
#include "pseudotest/model.hpp"
#include "pseudotest/process.hpp"
#include "pseudotest/util.hpp"

namespace pseudotest {

namespace host {

inline constexpr std::string_view kProbePrelude =
    "#ifndef PSEUDOTEST_PROBE_DEFINED\n"
    "#define PSEUDOTEST_PROBE_DEFINED\n"
    "#include <cstdio>\n"
    "#include <cstdlib>\n"
    "namespace pseudotest_probe {\n"
    "inline bool hit(const char* key) {\n"
    "  if (const char* path = std::getenv(\"PSEUDOTEST_TRACE\")) {\n"
    "    if (std::FILE* f = std::fopen(path, \"a\")) {\n"
    "      std::fputs(key, f);\n"
    "      std::fputc('\\n', f);\n"
    "      std::fclose(f);\n"
    "    }\n"
    "  }\n"
    "  return true;\n"
    "}\n"
    "}  // namespace pseudotest_probe\n"
    "#endif\n";

inline std::string c_string_literal(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Source with a probe at the top of every instrumentable body.
inline std::string instrument(std::string_view text,
                              const std::vector<cpp::ScannedFunction>& functions) {
  std::vector<const cpp::ScannedFunction*> order;
  for (const auto& fn : functions)
    if (!fn.is_constexpr) order.push_back(&fn);
  if (order.empty()) return std::string(text);
  std::sort(order.begin(), order.end(),
            [](const auto* a, const auto* b) { return a->body_open > b->body_open; });
  std::string out(text);
  for (const auto* fn : order) {
    const std::string probe = " static const bool pseudotest_probe_seen = "
                              "::pseudotest_probe::hit(" +
                              c_string_literal(fn->info.id.key()) +
                              "); (void)pseudotest_probe_seen;";
    out.insert(fn->body_open + 1, probe);
  }
  return std::string(kProbePrelude) + out;
}

inline std::string regex_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (std::string_view("\\^$.|?*+()[]{}").find(c) != std::string_view::npos) out += '\\';
    out += c;
  }
  return out;
}

struct JunitCase {
  std::string status;  // "run", "fail", "notrun", "disabled"
  double time_s = 0.0;
};

// Minimal reader for ctest's JUnit output: the attributes of each
// <testcase> element.
inline std::map<std::string, JunitCase> parse_junit(std::string_view xml) {
  std::map<std::string, JunitCase> out;
  static const std::regex element(R"(<testcase\s([^>]*)>)");
  static const std::regex attribute(R"re((\w+)="([^"]*)")re");
  const std::string text(xml);
  for (auto it = std::sregex_iterator(text.begin(), text.end(), element);
       it != std::sregex_iterator(); ++it) {
    const std::string attrs = (*it)[1];
    std::map<std::string, std::string> values;
    for (auto a = std::sregex_iterator(attrs.begin(), attrs.end(), attribute);
         a != std::sregex_iterator(); ++a)
      values[(*a)[1]] = (*a)[2];
    JunitCase c;
    c.status = values["status"];
    c.time_s = std::strtod(values["time"].c_str(), nullptr);
    out[values["name"]] = c;
  }
  return out;
}

inline std::string unescape_xml(std::string text) {
  static const std::pair<std::string_view, std::string_view> entities[] = {
      {"&lt;", "<"}, {"&gt;", ">"}, {"&quot;", "\""}, {"&apos;", "'"}, {"&amp;", "&"}};
  for (const auto& [from, to] : entities) {
    std::size_t pos = 0;
    while ((pos = text.find(from, pos)) != std::string::npos) {
      text.replace(pos, from.size(), to);
      pos += to.size();
    }
  }
  return text;
}

}  // namespace host

class HostMutatedProject final : public MutatedProject {
 public:
  HostMutatedProject(Mutant mutant, fs::path workspace)
      : MutatedProject(std::move(mutant)), workspace_(std::move(workspace)) {}
  const fs::path& workspace() const { return workspace_; }

 private:
  fs::path workspace_;
};

class HostAdapter final : public Adapter {
 public:
  // `work_root` receives the coverage workspace and the command log.
  HostAdapter(const fs::path& root, const fs::path& work_root,
              const nlohmann::json& options = nlohmann::json::object())
      : root_(fs::absolute(root).lexically_normal()),
        work_root_(fs::absolute(work_root).lexically_normal()),
        log_(work_root_ / "commands.log") {
    if (!fs::is_directory(root_) || !fs::exists(root_ / "CMakeLists.txt"))
      throw AdapterError(root_.string() + ": not a CMake project (no CMakeLists.txt)");
    try {
      sources_ = options.value("sources", std::vector<std::string>{"src", "include"});
      cmake_args_ = options.value("cmake_args", std::vector<std::string>{});
      if (options.contains("generator")) {
        generator_ = options.at("generator").get<std::string>();
      } else if (on_path("ninja")) {
        generator_ = "Ninja";
      }
      build_timeout_ = std::chrono::milliseconds(options.value("build_timeout_ms", 600000));
      baseline_timeout_ =
          std::chrono::milliseconds(options.value("baseline_timeout_ms", 600000));
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("invalid host adapter options: ") + e.what());
    }
    files_ = list_project_files(root_);
  }

  std::string name() const override { return "host"; }
  std::string version() const override { return "1.0.0"; }
  AdapterCapabilities capabilities() const override { return {true, true, true, true}; }
  std::string project_name() const override { return root_.filename().string(); }
  std::string snapshot_fingerprint() const override { return fingerprint_tree(root_); }

  std::vector<FunctionUnderTest> discover_functions() override {
    std::vector<FunctionUnderTest> out;
    key_files_.clear();
    for (const auto& rel : source_files()) {
      const std::string text = read_file(root_ / rel);
      std::vector<cpp::ScannedFunction> found;
      try {
        found = cpp::scan_source(text, rel.generic_string());
      } catch (const cpp::ScanError& e) {
        throw AdapterError(e.what());
      }
      for (auto& fn : found) {
        // constexpr bodies cannot host the coverage probe.
        if (fn.is_constexpr) continue;
        const std::string key = fn.info.id.key();
        if (key_files_.count(key)) continue;  // e.g. an inline definition seen twice
        key_files_[key] = rel;
        out.push_back(std::move(fn.info));
      }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return out;
  }

  Baseline run_tests_with_coverage(
      const std::optional<std::set<std::string>>& filter = std::nullopt) override {
    const fs::path ws = work_root_ / "coverage";
    sync_copy(ws);
    for (const auto& rel : source_files()) {
      const std::string text = read_file(root_ / rel);
      std::vector<cpp::ScannedFunction> found;
      try {
        found = cpp::scan_source(text, rel.generic_string());
      } catch (const cpp::ScanError& e) {
        throw AdapterError(e.what());
      }
      write_if_changed(ws / rel, host::instrument(text, found));
    }
    configure(ws, "coverage build");
    build(ws, "coverage build");

    Baseline baseline;
    std::set<std::string> all_keys;
    for (const auto& [key, file] : key_files_) all_keys.insert(key);
    baseline.coverage.set_all_function_count(all_keys.size());

    const fs::path traces = ws / "traces";
    fs::remove_all(traces);
    fs::create_directories(traces);
    std::size_t index = 0;
    for (const auto& test : list_tests(ws)) {
      if (filter && !filter->count(test)) continue;
      const fs::path trace = traces / (std::to_string(index++) + ".trace");
      const auto run = run_ctest(ws, test, baseline_timeout_, {{"PSEUDOTEST_TRACE", trace.string()}});
      TestCase tc;
      tc.id = test;
      tc.display_name = test;
      if (run.verdict == ExecutionVerdict::kSurvived) {
        tc.baseline_status = BaselineStatus::kPassed;
        tc.baseline_duration_ms = std::max<std::int64_t>(
            1, static_cast<std::int64_t>(std::ceil(run.time_s * 1000.0)));
        baseline.coverage.add_test(test);
        if (fs::exists(trace)) {
          std::istringstream lines(read_file(trace));
          std::string key;
          while (std::getline(lines, key)) {
            if (all_keys.count(key)) baseline.coverage.record(test, key);
          }
        }
      } else {
        tc.baseline_status = BaselineStatus::kFailed;
      }
      baseline.tests.push_back(std::move(tc));
    }
    std::sort(baseline.tests.begin(), baseline.tests.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });
    return baseline;
  }

  std::unique_ptr<MutatedProject> materialize_mutant(const Mutant& mutant,
                                                     const fs::path& workspace) override {
    const fs::path ws = fs::absolute(workspace).lexically_normal();
    Workspace& state = workspace_state(ws);
    if (!state.ready) {
      sync_copy(ws);
      configure(ws, "workspace setup");
      state.ready = true;
    }
    if (state.mutated) {
      write_file(ws / *state.mutated, read_file(root_ / *state.mutated));
      state.mutated.reset();
    }

    const std::string key = mutant.function.key();
    const fs::path rel = mutant.function.source_locator.file.empty()
                             ? fs::path()
                             : fs::path(mutant.function.source_locator.file);
    if (rel.empty() || !fs::exists(root_ / rel))
      throw MaterializationError("source file of " + key + " not found");
    const std::string text = read_file(root_ / rel);
    std::vector<cpp::ScannedFunction> found;
    try {
      found = cpp::scan_source(text, rel.generic_string());
    } catch (const cpp::ScanError& e) {
      throw MaterializationError(e.what());
    }
    const auto it = std::find_if(found.begin(), found.end(),
                                 [&](const auto& fn) { return fn.info.id.key() == key; });
    if (it == found.end())
      throw MaterializationError(key + " no longer found in " + rel.generic_string());

    const std::string body = mutant.variant == MutantVariant::kVoidEmpty
                                 ? std::string()
                                 : "return " + mutant.substituted_value + ";";
    write_file(ws / rel, cpp::replace_body(text, *it, body));
    state.mutated = rel;
    try {
      build(ws, "mutant " + mutant.mutant_id);
    } catch (const AdapterError& e) {
      throw MaterializationError(e.what());
    }
    return std::make_unique<HostMutatedProject>(mutant, ws);
  }

  ExecutionVerdict execute_test(MutatedProject& project, const TestCase& test,
                                std::chrono::milliseconds timeout) override {
    auto* host = dynamic_cast<HostMutatedProject*>(&project);
    if (!host) return ExecutionVerdict::kInconclusive;
    return run_ctest(host->workspace(), test.id, timeout, {}).verdict;
  }

  const fs::path& command_log() const { return log_path_; }

 private:
  struct Workspace {
    bool ready = false;
    std::optional<fs::path> mutated;
  };

  struct CtestRun {
    ExecutionVerdict verdict = ExecutionVerdict::kInconclusive;
    double time_s = 0.0;
  };

  static bool on_path(const std::string& program) {
    const char* path = std::getenv("PATH");
    if (!path) return false;
    std::istringstream dirs(path);
    std::string dir;
    while (std::getline(dirs, dir, ':')) {
      if (!dir.empty() && ::access((fs::path(dir) / program).c_str(), X_OK) == 0) return true;
    }
    return false;
  }

  std::vector<fs::path> source_files() const {
    std::vector<fs::path> out;
    for (const auto& rel : files_) {
      const std::string first = rel.begin() == rel.end() ? "" : rel.begin()->string();
      if (std::find(sources_.begin(), sources_.end(), first) == sources_.end()) continue;
      if (cpp::is_cpp_source(rel)) out.push_back(rel);
    }
    return out;
  }

  Workspace& workspace_state(const fs::path& ws) {
    std::lock_guard lock(mutex_);
    return workspaces_[ws.string()];
  }

  static void write_if_changed(const fs::path& path, const std::string& content) {
    if (fs::exists(path) && read_file(path) == content) return;
    write_file(path, content);
  }

  // Mirrors the project into `ws`, leaving unchanged files untouched so an
  // existing build tree stays incremental.
  void sync_copy(const fs::path& ws) {
    for (const auto& rel : files_) write_if_changed(ws / rel, read_file(root_ / rel));
  }

  ProcessResult run(ProcessSpec spec) { return run_process(spec, &log_); }

  void configure(const fs::path& ws, const std::string& what) {
    if (fs::exists(ws / "build" / "CMakeCache.txt")) return;
    std::vector<std::string> argv = {"cmake", "-S", ws.string(), "-B", (ws / "build").string()};
    if (!generator_.empty()) {
      argv.push_back("-G");
      argv.push_back(generator_);
    }
    for (const auto& a : cmake_args_) argv.push_back(a);
    const auto result = run({argv, ws, {}, build_timeout_, ws / "configure.log"});
    if (!result.ok())
      throw AdapterError(what + ": cmake configure failed, see " + (ws / "configure.log").string());
  }

  void build(const fs::path& ws, const std::string& what) {
    const auto result = run({{"cmake", "--build", (ws / "build").string()},
                             ws, {}, build_timeout_, ws / "build.log"});
    if (!result.ok())
      throw AdapterError(what + ": build failed, see " + (ws / "build.log").string());
  }

  std::vector<std::string> list_tests(const fs::path& ws) {
    const fs::path listing = ws / "tests.json";
    const auto result = run({{"ctest", "--show-only=json-v1"}, ws / "build", {}, build_timeout_,
                             listing});
    if (!result.ok()) throw AdapterError("ctest cannot list tests in " + ws.string());
    std::vector<std::string> names;
    try {
      const auto doc = nlohmann::json::parse(read_file(listing));
      for (const auto& t : doc.at("tests")) names.push_back(t.at("name").get<std::string>());
    } catch (const nlohmann::json::exception& e) {
      throw AdapterError(std::string("unreadable ctest listing: ") + e.what());
    }
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;
  }

  CtestRun run_ctest(const fs::path& ws, const std::string& test,
                     std::chrono::milliseconds timeout,
                     std::map<std::string, std::string> env) {
    const fs::path junit = ws / "junit.xml";
    const fs::path output = ws / "ctest.log";
    fs::remove(junit);
    char seconds[32];
    std::snprintf(seconds, sizeof seconds, "%.3f",
                  std::max(0.001, static_cast<double>(timeout.count()) / 1000.0));
    ProcessSpec spec{{"ctest", "-R", "^" + host::regex_escape(test) + "$", "--timeout", seconds,
                      "--output-junit", junit.string()},
                     ws / "build",
                     std::move(env),
                     timeout + std::chrono::milliseconds(10000),
                     output};
    const auto result = run(spec);
    CtestRun out;
    if (result.timed_out) {
      out.verdict = ExecutionVerdict::kTimeout;
      return out;
    }
    if (!result.launched || !fs::exists(junit)) return out;
    const auto cases = host::parse_junit(read_file(junit));
    auto it = cases.find(test);
    if (it == cases.end()) {
      for (const auto& [name, c] : cases)
        if (host::unescape_xml(name) == test) it = cases.find(name);
    }
    if (it == cases.end()) return out;
    out.time_s = it->second.time_s;
    if (it->second.status == "run") {
      out.verdict = ExecutionVerdict::kSurvived;
    } else if (it->second.status == "fail") {
      const std::string log = fs::exists(output) ? read_file(output) : std::string();
      const bool timed_out = log.find("***Timeout") != std::string::npos ||
                             it->second.time_s * 1000.0 >= static_cast<double>(timeout.count());
      out.verdict = timed_out ? ExecutionVerdict::kTimeout : ExecutionVerdict::kKilled;
    }
    return out;
  }

  fs::path root_;
  fs::path work_root_;
  fs::path log_path_ = work_root_ / "commands.log";
  CommandLog log_;
  std::vector<std::string> sources_;
  std::vector<std::string> cmake_args_;
  std::string generator_;
  std::chrono::milliseconds build_timeout_{600000};
  std::chrono::milliseconds baseline_timeout_{600000};
  std::vector<fs::path> files_;
  std::map<std::string, fs::path> key_files_;
  std::mutex mutex_;
  std::map<std::string, Workspace> workspaces_;
};

}  // namespace pseudotest

#endif  // PSEUDOTEST_HOST_ADAPTER_HPP
