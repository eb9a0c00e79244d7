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

// Mutant scheduling and execution. A bounded pool of workers pulls mutants
// from the plan; each worker owns one workspace, materializes the mutant
// there and runs its covering tests. Completed (mutant, test, verdict)
// records go through a single collector that updates the matrix and appends
// to the journal.

#ifndef PSEUDOTEST_EXECUTOR_HPP
#define PSEUDOTEST_EXECUTOR_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "pseudotest/adapter.hpp"
#include "pseudotest/journal.hpp"
#include "pseudotest/model.hpp"

namespace pseudotest {

class PlanningError : public Error {
 public:
  using Error::Error;
};

struct PlannedMutant {
  Mutant mutant;
  std::vector<TestCase> tests;  // ascending baseline duration, then id
};

struct RunPlan {
  std::vector<PlannedMutant> items;  // ascending mutant id
  std::int64_t timeout_ms = 0;
  int workers = 1;
  RunMode mode = RunMode::kFullMatrix;
};

struct PlanSettings {
  double timeout_factor = 2.0;
  std::int64_t timeout_floor_ms = 1000;
  int workers = 1;
  RunMode mode = RunMode::kFullMatrix;
};

// ceil(factor * longest passing baseline), but never below the floor.
inline std::int64_t compute_timeout_ms(const std::vector<TestCase>& tests,
                                       double factor, std::int64_t floor_ms) {
  std::int64_t longest = 0;
  for (const auto& t : tests)
    if (t.passed()) longest = std::max(longest, t.baseline_duration_ms);
  const auto scaled =
      static_cast<std::int64_t>(std::ceil(factor * static_cast<double>(longest)));
  return std::max(scaled, floor_ms);
}

inline RunPlan plan_run(const CoverageMap& coverage, const std::vector<Mutant>& mutants,
                        const std::vector<TestCase>& tests, const PlanSettings& settings) {
  std::map<std::string, const TestCase*> passing;
  for (const auto& t : tests)
    if (t.passed()) passing[t.id] = &t;
  if (passing.empty()) throw PlanningError("no usable baseline: no test passed");

  RunPlan plan;
  plan.timeout_ms =
      compute_timeout_ms(tests, settings.timeout_factor, settings.timeout_floor_ms);
  plan.workers = std::max(1, settings.workers);
  plan.mode = settings.mode;
  for (const auto& mutant : mutants) {
    PlannedMutant item{mutant, {}};
    for (const auto& test_id : coverage.covering(mutant.function.key())) {
      if (auto it = passing.find(test_id); it != passing.end())
        item.tests.push_back(*it->second);
    }
    if (item.tests.empty()) continue;
    std::sort(item.tests.begin(), item.tests.end(), [](const auto& a, const auto& b) {
      return std::tie(a.baseline_duration_ms, a.id) < std::tie(b.baseline_duration_ms, b.id);
    });
    plan.items.push_back(std::move(item));
  }
  std::sort(plan.items.begin(), plan.items.end(), [](const auto& a, const auto& b) {
    return a.mutant.mutant_id < b.mutant.mutant_id;
  });
  return plan;
}

class ExecutionMatrix {
 public:
  using Key = std::pair<std::string, std::string>;  // (mutant id, test id)

  void set(const std::string& mutant_id, const std::string& test_id,
           ExecutionVerdict verdict) {
    entries_[{mutant_id, test_id}] = verdict;
  }
  std::optional<ExecutionVerdict> get(const std::string& mutant_id,
                                      const std::string& test_id) const {
    auto it = entries_.find({mutant_id, test_id});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const std::string& mutant_id, const std::string& test_id) const {
    return entries_.count({mutant_id, test_id}) != 0;
  }

  // (test id, verdict) pairs of one mutant, ordered by test id.
  std::vector<std::pair<std::string, ExecutionVerdict>> row(
      const std::string& mutant_id) const {
    std::vector<std::pair<std::string, ExecutionVerdict>> out;
    for (auto it = entries_.lower_bound({mutant_id, std::string{}});
         it != entries_.end() && it->first.first == mutant_id; ++it) {
      out.emplace_back(it->first.second, it->second);
    }
    return out;
  }
  MutantResults results(const std::string& mutant_id) const {
    MutantResults out;
    for (const auto& [test, verdict] : row(mutant_id)) out.push_back(verdict);
    return out;
  }
  bool has_kill(const std::string& mutant_id) const {
    for (const auto& [test, verdict] : row(mutant_id))
      if (verdict == ExecutionVerdict::kKilled) return true;
    return false;
  }

  const std::map<Key, ExecutionVerdict>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  // Run metadata. Not part of equality: it varies with scheduling.
  std::int64_t timeout_ms = 0;
  int workers = 1;
  double wall_ms = 0.0;

  friend bool operator==(const ExecutionMatrix& a, const ExecutionMatrix& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::map<Key, ExecutionVerdict> entries_;
};

struct ExecutionOptions {
  fs::path workspace_root = "pseudotest-work";
  JournalWriter* journal = nullptr;
  // Verdicts already known from an interrupted run; those pairs are not run
  // again.
  const ExecutionMatrix* prior = nullptr;
  // Polled before each test execution; returning true stops scheduling new
  // work. In-flight executions complete and are recorded.
  std::function<bool()> should_stop;
  // Shuffles the order in which mutants are handed to workers.
  std::optional<std::uint64_t> shuffle_seed;
};

struct ExecutionResult {
  ExecutionMatrix matrix;
  bool interrupted = false;
};

namespace detail {

class Collector {
 public:
  Collector(ExecutionMatrix& matrix, JournalWriter* journal)
      : matrix_(matrix), journal_(journal) {}

  void record(const std::string& mutant_id, const std::string& test_id,
              ExecutionVerdict verdict) {
    std::lock_guard lock(mutex_);
    matrix_.set(mutant_id, test_id, verdict);
    if (journal_) journal_->write_verdict({mutant_id, test_id, verdict});
  }

 private:
  ExecutionMatrix& matrix_;
  JournalWriter* journal_;
  std::mutex mutex_;
};

}  // namespace detail

inline ExecutionResult execute_plan(const RunPlan& plan, Adapter& adapter,
                                    const ExecutionOptions& options = {}) {
  verify_capabilities(adapter);
  const auto started = std::chrono::steady_clock::now();

  ExecutionResult result;
  if (options.prior) {
    for (const auto& [key, verdict] : options.prior->entries())
      result.matrix.set(key.first, key.second, verdict);
  }
  detail::Collector collector(result.matrix, options.journal);

  std::vector<std::size_t> order(plan.items.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (options.shuffle_seed) {
    std::mt19937_64 rng(*options.shuffle_seed);
    std::shuffle(order.begin(), order.end(), rng);
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> stopped{false};
  const auto timeout = std::chrono::milliseconds(plan.timeout_ms);
  const bool fast = plan.mode == RunMode::kFast;

  auto stop_requested = [&] {
    if (stopped.load()) return true;
    if (options.should_stop && options.should_stop()) {
      stopped.store(true);
      return true;
    }
    return false;
  };

  auto worker = [&](int index) {
    const fs::path workspace = options.workspace_root / ("w" + std::to_string(index));
    while (!stop_requested()) {
      const std::size_t slot = next.fetch_add(1);
      if (slot >= order.size()) return;
      const PlannedMutant& item = plan.items[order[slot]];
      const std::string& mutant_id = item.mutant.mutant_id;

      std::vector<const TestCase*> pending;
      if (options.prior && fast && options.prior->has_kill(mutant_id)) continue;
      for (const auto& test : item.tests) {
        if (!options.prior || !options.prior->contains(mutant_id, test.id))
          pending.push_back(&test);
      }
      if (pending.empty()) continue;

      std::unique_ptr<MutatedProject> project;
      try {
        project = adapter.materialize_mutant(item.mutant, workspace);
      } catch (const std::exception&) {
        for (const TestCase* test : pending)
          collector.record(mutant_id, test->id, ExecutionVerdict::kInconclusive);
        continue;
      }
      for (const TestCase* test : pending) {
        if (stop_requested()) return;
        ExecutionVerdict verdict = ExecutionVerdict::kInconclusive;
        try {
          verdict = adapter.execute_test(*project, *test, timeout);
        } catch (const std::exception&) {
          verdict = ExecutionVerdict::kInconclusive;
        }
        collector.record(mutant_id, test->id, verdict);
        if (fast && verdict == ExecutionVerdict::kKilled) break;
      }
    }
  };

  const int workers = std::max(1, std::min<int>(plan.workers,
                                                static_cast<int>(std::max<std::size_t>(order.size(), 1))));
  {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker, i);
  }

  result.interrupted = stopped.load();
  result.matrix.timeout_ms = plan.timeout_ms;
  result.matrix.workers = plan.workers;
  result.matrix.wall_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - started).count();
  return result;
}

// True when every planned mutant has the results its mode requires.
inline bool matrix_accounts_for_plan(const RunPlan& plan, const ExecutionMatrix& matrix) {
  for (const auto& item : plan.items) {
    const auto& id = item.mutant.mutant_id;
    if (plan.mode == RunMode::kFast && matrix.has_kill(id)) continue;
    for (const auto& test : item.tests)
      if (!matrix.contains(id, test.id)) return false;
  }
  return true;
}

}  // namespace pseudotest

#endif  // PSEUDOTEST_EXECUTOR_HPP
