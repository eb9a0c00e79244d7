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

// Hermetic adapter over declarative `.fixture.json` mini-projects. A fixture
// holds integer state variables, functions whose bodies are written in the
// fixture language, and tests made of calls and assertions. Everything is
// interpreted in-process, so results are identical across runs and hosts.
//
// {
//   "project": "calculation",
//   "container": "Calculation",
//   "state": {"value": 0},
//   "functions": [
//     {"name": "add", "returns": "void", "params": [{"name": "x", "type": "int"}],
//      "body": ["value = value + x"]}
//   ],
//   "tests": [
//     {"name": "testAdd", "duration_ms": 5,
//      "steps": [{"call": "add", "args": [6]}, {"assert": "value == 6"}]}
//   ]
// }

#ifndef PSEUDOTEST_FIXTURE_ADAPTER_HPP
#define PSEUDOTEST_FIXTURE_ADAPTER_HPP

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "pseudotest/adapter.hpp"
#include "pseudotest/fixture_lang.hpp"

namespace pseudotest {

namespace fixture {

using json = nlohmann::json;

inline ReturnType parse_type_name(const std::string& text) {
  const std::string lower = to_lower(text);
  if (lower == "void") return {ReturnKind::kVoid, {}};
  if (lower == "boolean" || lower == "bool") return {ReturnKind::kBoolean, {}};
  if (lower == "byte" || lower == "short" || lower == "int" ||
      lower == "integer" || lower == "long")
    return {ReturnKind::kInteger, {}};
  if (lower == "float" || lower == "double") return {ReturnKind::kFloating, {}};
  if (lower == "char" || lower == "character") return {ReturnKind::kCharacter, {}};
  if (lower == "string") return {ReturnKind::kString, {}};
  return {ReturnKind::kObject, text};
}

struct Param {
  std::string name;
  std::string type;
  ReturnType parsed;
};

struct Function {
  std::string container;
  std::string name;
  std::string declared_return;
  ReturnType return_type;
  std::vector<Param> params;
  std::vector<std::string> body_text;
  std::vector<Statement> body;
  int statement_count = 0;
  bool is_constructor = false;
  bool is_trivial_accessor = false;
  bool is_compiler_generated = false;
  int line = 0;

  std::string signature() const {
    std::vector<std::string> types;
    for (const auto& p : params) types.push_back(p.type);
    return join(types, ",");
  }
  FunctionId id(const std::string& file) const {
    return FunctionId{container, name, signature(), {file, line, line}};
  }
};

struct Step {
  enum class Kind { kCall, kAssert };
  Kind kind = Kind::kCall;
  std::string function;
  std::vector<Value> args;
  std::optional<json> expect;
  ExprPtr assertion;
  std::string text;
};

struct Test {
  std::string name;
  std::int64_t duration_ms = 0;
  std::vector<Step> steps;
};

inline Value value_from_json(const json& j, const std::string& where) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_float()) return j.get<double>();
  if (j.is_string()) return j.get<std::string>();
  throw AdapterError(where + ": unsupported literal " + j.dump());
}

// True when a returned value satisfies a JSON expectation. Numbers compare
// numerically; a one-character string matches a char.
inline bool matches_expectation(const Value& actual, const json& expected) {
  if (expected.is_null()) return std::holds_alternative<Void>(actual);
  if (expected.is_boolean()) {
    auto* b = std::get_if<bool>(&actual);
    return b && *b == expected.get<bool>();
  }
  if (expected.is_number()) {
    if (auto* i = std::get_if<std::int64_t>(&actual)) {
      if (expected.is_number_integer()) return *i == expected.get<std::int64_t>();
      return static_cast<double>(*i) == expected.get<double>();
    }
    if (auto* d = std::get_if<double>(&actual)) {
      return std::fabs(*d - expected.get<double>()) <= 1e-9;
    }
    return false;
  }
  if (expected.is_string()) {
    const auto text = expected.get<std::string>();
    if (auto* s = std::get_if<std::string>(&actual)) return *s == text;
    if (auto* c = std::get_if<char>(&actual)) return text.size() == 1 && text[0] == *c;
    return false;
  }
  return false;
}

// Parsed fixture document.
struct Project {
  std::string name;
  std::string file;  // fixture file name, relative to the project root
  std::map<std::string, std::int64_t> state;
  std::vector<Function> functions;
  std::vector<Test> tests;

  const Function* find_function(const std::string& name) const {
    for (const auto& f : functions)
      if (f.name == name) return &f;
    return nullptr;
  }
  Function* find_function(const FunctionId& id) {
    for (auto& f : functions)
      if (f.id(file) == id) return &f;
    return nullptr;
  }
  const Test* find_test(const std::string& name) const {
    for (const auto& t : tests)
      if (t.name == name) return &t;
    return nullptr;
  }

  static Project parse(const std::string& text, const std::string& file_name,
                       const std::string& default_name) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
      const auto line = 1 + std::count(text.begin(), text.begin() + upto, '\n');
      throw AdapterError(file_name + ":" + std::to_string(line) +
                         ": malformed fixture: " + e.what());
    }
    if (!doc.is_object())
      throw AdapterError(file_name + ":1: fixture must be a JSON object");

    Project project;
    project.file = file_name;
    project.name = doc.value("project", default_name);
    const std::string default_container = doc.value("container", std::string{});
    try {
      if (doc.contains("state")) {
        for (const auto& [key, value] : doc.at("state").items()) {
          if (!value.is_number_integer())
            throw AdapterError(file_name + ": state variable '" + key +
                               "' must be an integer");
          project.state[key] = value.get<std::int64_t>();
        }
      }
      std::size_t search_from = text.find("\"functions\"");
      if (search_from == std::string::npos) search_from = 0;
      for (const auto& jf : doc.value("functions", json::array())) {
        Function f;
        f.name = jf.at("name").get<std::string>();
        f.container = jf.value("container", default_container);
        f.declared_return = jf.value("returns", std::string("void"));
        f.return_type = parse_type_name(f.declared_return);
        for (const auto& jp : jf.value("params", json::array())) {
          Param p;
          p.name = jp.at("name").get<std::string>();
          p.type = jp.at("type").get<std::string>();
          p.parsed = parse_type_name(p.type);
          f.params.push_back(std::move(p));
        }
        f.body_text = jf.value("body", std::vector<std::string>{});
        f.statement_count =
            jf.value("statements", static_cast<int>(f.body_text.size()));
        f.is_constructor = jf.value("constructor", false);
        f.is_trivial_accessor = jf.value("trivial_accessor", false);
        f.is_compiler_generated = jf.value("compiler_generated", false);
        if (jf.contains("line")) {
          f.line = jf.at("line").get<int>();
        } else {
          const std::string needle = "\"" + f.name + "\"";
          const std::size_t at = text.find(needle, search_from);
          const std::size_t pos = at == std::string::npos ? search_from : at;
          f.line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + pos, '\n'));
          if (at != std::string::npos) search_from = at + needle.size();
        }
        for (const auto& stmt : f.body_text) {
          try {
            f.body.push_back(parse_statement(stmt));
          } catch (const ParseError& e) {
            throw AdapterError(file_name + ":" + std::to_string(f.line) +
                               ": function '" + f.name + "': " + e.what());
          }
        }
        if (project.find_function(f.name))
          throw AdapterError(file_name + ":" + std::to_string(f.line) +
                             ": duplicate function '" + f.name + "'");
        project.functions.push_back(std::move(f));
      }
      for (const auto& jt : doc.value("tests", json::array())) {
        Test t;
        t.name = jt.at("name").get<std::string>();
        t.duration_ms = jt.value("duration_ms", std::int64_t{0});
        if (t.duration_ms < 0)
          throw AdapterError(file_name + ": test '" + t.name +
                             "' has negative duration_ms");
        for (const auto& js : jt.value("steps", json::array())) {
          Step s;
          if (js.contains("call")) {
            s.kind = Step::Kind::kCall;
            s.function = js.at("call").get<std::string>();
            for (const auto& ja : js.value("args", json::array()))
              s.args.push_back(value_from_json(ja, file_name + ": test '" + t.name + "'"));
            if (js.contains("expect")) s.expect = js.at("expect");
            s.text = s.function + "(...)";
          } else if (js.contains("assert")) {
            s.kind = Step::Kind::kAssert;
            s.text = js.at("assert").get<std::string>();
            try {
              s.assertion = parse_expression(s.text);
            } catch (const ParseError& e) {
              throw AdapterError(file_name + ": test '" + t.name + "': " + e.what());
            }
          } else {
            throw AdapterError(file_name + ": test '" + t.name +
                               "' has a step without 'call' or 'assert'");
          }
          t.steps.push_back(std::move(s));
        }
        if (project.find_test(t.name))
          throw AdapterError(file_name + ": duplicate test '" + t.name + "'");
        project.tests.push_back(std::move(t));
      }
    } catch (const json::exception& e) {
      throw AdapterError(file_name + ": malformed fixture: " + e.what());
    }
    project.check_references();
    return project;
  }

 private:
  void check_references() const {
    auto check = [&](const std::string& callee, const std::string& where) {
      if (!find_function(callee))
        throw AdapterError(file + ": " + where + " references undeclared function '" +
                           callee + "'");
    };
    for (const auto& f : functions) {
      for (const auto& st : f.body) {
        if (!st.expr) continue;
        std::vector<std::string> calls;
        collect_calls(*st.expr, calls);
        for (const auto& c : calls) check(c, "function '" + f.name + "'");
      }
    }
    for (const auto& t : tests) {
      for (const auto& s : t.steps) {
        if (s.kind == Step::Kind::kCall) {
          check(s.function, "test '" + t.name + "'");
        } else {
          std::vector<std::string> calls;
          collect_calls(*s.assertion, calls);
          for (const auto& c : calls) check(c, "test '" + t.name + "'");
        }
      }
    }
  }
};

struct TestOutcome {
  bool passed = false;
  std::string message;
  std::set<std::string> executed;  // FunctionId keys
};

// Executes one test against a project (original or mutated).
class Interpreter final : public Environment {
 public:
  explicit Interpreter(const Project& project)
      : project_(project), state_(project.state) {}

  TestOutcome run(const Test& test) {
    TestOutcome outcome;
    try {
      for (const auto& step : test.steps) {
        if (step.kind == Step::Kind::kCall) {
          const Value result = call(step.function, step.args);
          if (step.expect && !matches_expectation(result, *step.expect)) {
            outcome.message = "expected " + step.expect->dump() + " from " +
                              step.function + ", got " + render(result);
            outcome.executed = std::move(executed_);
            return outcome;
          }
        } else {
          const Value result = evaluate(*step.assertion, *this);
          auto* b = std::get_if<bool>(&result);
          if (!b || !*b) {
            outcome.message = "assertion failed: " + step.text;
            outcome.executed = std::move(executed_);
            return outcome;
          }
        }
      }
      outcome.passed = true;
    } catch (const EvalError& e) {
      outcome.message = std::string("error: ") + e.what();
    }
    outcome.executed = std::move(executed_);
    return outcome;
  }

  Value lookup(const std::string& name) override {
    if (!frames_.empty()) {
      auto& frame = frames_.back();
      if (auto it = frame.find(name); it != frame.end()) return it->second;
    }
    if (auto it = state_.find(name); it != state_.end()) return it->second;
    throw EvalError("unknown name '" + name + "'");
  }

  Value call(const std::string& name, std::vector<Value> args) override {
    const Function* f = project_.find_function(name);
    if (!f) throw EvalError("unknown function '" + name + "'");
    if (args.size() != f->params.size())
      throw EvalError(name + ": expected " + std::to_string(f->params.size()) +
                      " arguments, got " + std::to_string(args.size()));
    if (frames_.size() >= kMaxDepth) throw EvalError("call depth exceeded");
    executed_.insert(f->id(project_.file).key());
    std::map<std::string, Value> frame;
    for (std::size_t i = 0; i < args.size(); ++i) {
      frame[f->params[i].name] =
          coerce(args[i], f->params[i].parsed, name + " argument " + f->params[i].name);
    }
    frames_.push_back(std::move(frame));
    struct Pop {
      std::vector<std::map<std::string, Value>>& frames;
      ~Pop() { frames.pop_back(); }
    } pop{frames_};

    for (const auto& st : f->body) {
      switch (st.kind) {
        case Statement::Kind::kReturn: {
          const Value v = st.expr ? evaluate(*st.expr, *this) : Value{Void{}};
          return coerce(v, f->return_type, name + " return value");
        }
        case Statement::Kind::kAssign: {
          auto it = state_.find(st.target);
          if (it == state_.end())
            throw EvalError("assignment to non-state name '" + st.target + "'");
          const Value rhs = evaluate(*st.expr, *this);
          const Value next = compound(st.op, Value{it->second}, rhs);
          auto* i = std::get_if<std::int64_t>(&next);
          if (!i) throw EvalError("state variable '" + st.target + "' is integer-only");
          it->second = *i;
          break;
        }
        case Statement::Kind::kExpr:
          evaluate(*st.expr, *this);
          break;
      }
    }
    if (f->return_type.kind != ReturnKind::kVoid)
      throw EvalError(name + ": missing return");
    return Void{};
  }

  const std::map<std::string, std::int64_t>& state() const { return state_; }

 private:
  static constexpr std::size_t kMaxDepth = 64;

  const Project& project_;
  std::map<std::string, std::int64_t> state_;
  std::vector<std::map<std::string, Value>> frames_;
  std::set<std::string> executed_;
};

}  // namespace fixture

// Materialized mutant of a fixture: a private copy of the whole project in
// which only the target function's body was replaced.
class FixtureMutatedProject final : public MutatedProject {
 public:
  FixtureMutatedProject(Mutant mutant, fixture::Project project)
      : MutatedProject(std::move(mutant)), project_(std::move(project)) {}

  const fixture::Project& project() const { return project_; }
  const fixture::Function& mutated_function() const {
    return *const_cast<fixture::Project&>(project_).find_function(mutant().function);
  }

 private:
  fixture::Project project_;
};

class FixtureAdapter final : public Adapter {
 public:
  // `root` is a `.fixture.json` file or a directory holding exactly one.
  // Options: {"simulate_runtime": bool} makes test executions sleep for their
  // declared duration (capped at the timeout).
  explicit FixtureAdapter(const fs::path& root,
                          const nlohmann::json& options = nlohmann::json::object())
      : file_(resolve(root)) {
    simulate_runtime_ = options.value("simulate_runtime", false);
    text_ = read_file(file_);
    const std::string file_name = file_.filename().string();
    std::string stem = file_name.substr(0, file_name.find(".fixture.json"));
    project_ = fixture::Project::parse(text_, file_name, stem);
  }

  std::string name() const override { return "fixture"; }
  std::string version() const override { return "1.0.0"; }
  AdapterCapabilities capabilities() const override {
    return {true, true, true, true};
  }
  std::string project_name() const override { return project_.name; }
  std::string snapshot_fingerprint() const override {
    return Fnv1a().field(text_).hex();
  }

  const fixture::Project& project() const { return project_; }
  const fs::path& file() const { return file_; }

  std::vector<FunctionUnderTest> discover_functions() override {
    std::vector<FunctionUnderTest> out;
    for (const auto& f : project_.functions) {
      FunctionUnderTest fut;
      fut.id = f.id(project_.file);
      fut.return_type = f.return_type;
      fut.statement_count = f.statement_count;
      fut.is_constructor = f.is_constructor;
      fut.is_trivial_accessor = f.is_trivial_accessor;
      fut.is_compiler_generated = f.is_compiler_generated;
      out.push_back(std::move(fut));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });
    return out;
  }

  Baseline run_tests_with_coverage(
      const std::optional<std::set<std::string>>& filter) override {
    Baseline baseline;
    baseline.coverage.set_all_function_count(project_.functions.size());
    for (const auto& test : project_.tests) {
      if (filter && !filter->count(test.name)) continue;
      fixture::Interpreter interpreter(project_);
      if (simulate_runtime_) sleep_for(test.duration_ms);
      auto outcome = interpreter.run(test);
      TestCase tc;
      tc.id = test.name;
      tc.display_name = test.name;
      if (outcome.passed) {
        tc.baseline_status = BaselineStatus::kPassed;
        baseline.coverage.add_test(test.name);
        tc.baseline_duration_ms = test.duration_ms;
        for (const auto& key : outcome.executed) baseline.coverage.record(test.name, key);
      } else {
        tc.baseline_status = BaselineStatus::kFailed;
      }
      baseline.tests.push_back(std::move(tc));
    }
    std::sort(baseline.tests.begin(), baseline.tests.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });
    return baseline;
  }

  std::unique_ptr<MutatedProject> materialize_mutant(
      const Mutant& mutant, const fs::path& /*workspace*/) override {
    fixture::Project copy = project_;
    fixture::Function* target = copy.find_function(mutant.function);
    if (!target)
      throw MaterializationError("function " + mutant.function.key() +
                                 " not found in " + project_.file);
    std::vector<std::string> body;
    if (mutant.variant != MutantVariant::kVoidEmpty)
      body.push_back("return " + mutant.substituted_value);
    try {
      target->body.clear();
      for (const auto& stmt : body) target->body.push_back(fixture::parse_statement(stmt));
    } catch (const fixture::ParseError& e) {
      throw MaterializationError("cannot apply " + mutant.mutant_id + ": " + e.what());
    }
    target->body_text = std::move(body);
    target->statement_count = static_cast<int>(target->body_text.size());
    return std::make_unique<FixtureMutatedProject>(mutant, std::move(copy));
  }

  ExecutionVerdict execute_test(MutatedProject& handle, const TestCase& test,
                                std::chrono::milliseconds timeout) override {
    auto* mutated = dynamic_cast<FixtureMutatedProject*>(&handle);
    if (!mutated) return ExecutionVerdict::kInconclusive;
    const fixture::Test* t = mutated->project().find_test(test.id);
    if (!t) return ExecutionVerdict::kInconclusive;
    if (t->duration_ms > timeout.count()) {
      if (simulate_runtime_) sleep_for(timeout.count());
      return ExecutionVerdict::kTimeout;
    }
    if (simulate_runtime_) sleep_for(t->duration_ms);
    fixture::Interpreter interpreter(mutated->project());
    return interpreter.run(*t).passed ? ExecutionVerdict::kSurvived
                                      : ExecutionVerdict::kKilled;
  }

  // Runs one test on the original project; used by tests and tooling.
  fixture::TestOutcome run_original(const std::string& test_name) const {
    const fixture::Test* t = project_.find_test(test_name);
    if (!t) throw AdapterError("unknown test '" + test_name + "'");
    fixture::Interpreter interpreter(project_);
    return interpreter.run(*t);
  }

 private:
  static fs::path resolve(const fs::path& root) {
    if (fs::is_regular_file(root)) return root;
    if (!fs::is_directory(root))
      throw AdapterError("fixture project " + root.string() + " does not exist");
    std::vector<fs::path> found;
    for (const auto& entry : fs::directory_iterator(root)) {
      if (entry.is_regular_file() &&
          entry.path().filename().string().ends_with(".fixture.json"))
        found.push_back(entry.path());
    }
    if (found.size() != 1)
      throw AdapterError(root.string() + ": expected exactly one .fixture.json, found " +
                         std::to_string(found.size()));
    return found.front();
  }

  static void sleep_for(std::int64_t ms) {
    if (ms > 0) std::this_thread::sleep_for(std::chrono::milliseconds(ms));
  }

  fs::path file_;
  std::string text_;
  fixture::Project project_;
  bool simulate_runtime_ = false;
};

}  // namespace pseudotest

#endif  // PSEUDOTEST_FIXTURE_ADAPTER_HPP
