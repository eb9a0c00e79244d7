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

// The contract through which the engine touches a target project. An
// adapter discovers functions, runs the baseline with per-test coverage,
// materializes one mutant into an isolated workspace, and runs one test
// against a materialized mutant.

#ifndef PSEUDOTEST_ADAPTER_HPP
#define PSEUDOTEST_ADAPTER_HPP

#include <chrono>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pseudotest/model.hpp"
#include "pseudotest/util.hpp"

namespace pseudotest {

// The project cannot be read, built or listed. Message carries file/line
// diagnostics where available.
class AdapterError : public Error {
 public:
  using Error::Error;
};

// A mutant cannot be applied (stale inventory, does not compile, ...). All
// test executions of that mutant become INCONCLUSIVE.
class MaterializationError : public Error {
 public:
  using Error::Error;
};

struct AdapterCapabilities {
  bool inventory = false;
  bool coverage = false;
  bool materialization = false;
  bool execution = false;

  bool complete() const {
    return inventory && coverage && materialization && execution;
  }
  bool read_only() const { return !materialization && !execution; }
};

// OBJECT type name -> recipe producing one deterministic instance. Lookup is
// by exact name only.
class ValueProviderRegistry {
 public:
  ValueProviderRegistry() = default;
  explicit ValueProviderRegistry(std::map<std::string, std::string> recipes)
      : recipes_(std::move(recipes)) {}

  void add(std::string type_name, std::string recipe) {
    recipes_[std::move(type_name)] = std::move(recipe);
  }
  std::optional<std::string> find(const std::string& type_name) const {
    auto it = recipes_.find(type_name);
    if (it == recipes_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const std::string& type_name) const {
    return recipes_.count(type_name) != 0;
  }
  const std::map<std::string, std::string>& recipes() const { return recipes_; }

 private:
  std::map<std::string, std::string> recipes_;
};

struct Baseline {
  std::vector<TestCase> tests;  // sorted by id
  CoverageMap coverage;
};

// Handle to a project in which exactly one mutant has been applied.
class MutatedProject {
 public:
  explicit MutatedProject(Mutant mutant) : mutant_(std::move(mutant)) {}
  virtual ~MutatedProject() = default;
  MutatedProject(const MutatedProject&) = delete;
  MutatedProject& operator=(const MutatedProject&) = delete;

  const Mutant& mutant() const { return mutant_; }

 private:
  Mutant mutant_;
};

// Adapters are bound to one project root at construction. discover_functions
// and run_tests_with_coverage run once before any concurrency; after that
// materialize_mutant/execute_test may be called from several threads, each
// on its own workspace.
class Adapter {
 public:
  virtual ~Adapter() = default;

  virtual std::string name() const = 0;
  virtual std::string version() const = 0;
  virtual AdapterCapabilities capabilities() const = 0;

  virtual std::string project_name() const = 0;
  // Changes whenever any project input changes.
  virtual std::string snapshot_fingerprint() const = 0;

  // Complete inventory sorted by FunctionId.
  virtual std::vector<FunctionUnderTest> discover_functions() = 0;

  // Runs every test (or only `filter`) once on the original code.
  virtual Baseline run_tests_with_coverage(
      const std::optional<std::set<std::string>>& filter = std::nullopt) = 0;

  virtual std::unique_ptr<MutatedProject> materialize_mutant(
      const Mutant& mutant, const fs::path& workspace) = 0;

  // Never throws for test-level problems: harness failures are reported as
  // INCONCLUSIVE.
  virtual ExecutionVerdict execute_test(MutatedProject& project,
                                        const TestCase& test,
                                        std::chrono::milliseconds timeout) = 0;
};

inline void verify_capabilities(const Adapter& adapter) {
  const auto caps = adapter.capabilities();
  if (!caps.complete()) {
    throw AdapterError("adapter '" + adapter.name() +
                       "' is read-only and cannot execute mutants");
  }
}

}  // namespace pseudotest

#endif  // PSEUDOTEST_ADAPTER_HPP
