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

// Project-level effectiveness ratios and cross-project group statistics.
//
//   r(M_PT) = pseudo-tested / (tested + pseudo-tested)
//   r(M_T)  = 1 - r(M_PT)
//   CC      = test-executed functions / all functions
//   r(CT)   = CC * r(M_T)
//
// Ratios are kept at full precision; rounding happens only when rendering.

#ifndef PSEUDOTEST_METRICS_HPP
#define PSEUDOTEST_METRICS_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "pseudotest/model.hpp"

namespace pseudotest {

inline constexpr std::string_view kTestedCodeCaveat =
    "r(CT) extrapolates: it assumes that test-executed functions left out of "
    "the mutation analysis would show the same tested/pseudo-tested split as "
    "the analyzed ones.";

inline ProjectMetrics metrics_from_counts(std::size_t m_pt, std::size_t tested,
                                          std::size_t test_executed,
                                          std::size_t all_function_count) {
  ProjectMetrics m;
  m.m_pt = m_pt;
  m.tested = tested;
  m.mutated_executed = m_pt + tested;
  m.test_executed = test_executed;
  m.all_function_count = all_function_count;
  m.no_analyzable_functions = m.mutated_executed == 0;
  m.r_m_pt = m.no_analyzable_functions
                 ? 0.0
                 : static_cast<double>(m_pt) / static_cast<double>(m.mutated_executed);
  m.r_m_t = 1.0 - m.r_m_pt;
  m.cc = all_function_count == 0
             ? 0.0
             : static_cast<double>(test_executed) / static_cast<double>(all_function_count);
  m.r_ct = m.cc * m.r_m_t;
  return m;
}

// Functions whose every covering execution timed out carry an EXCLUDED
// verdict and so fall outside the denominator.
inline ProjectMetrics compute_project_metrics(const AnalysisReport& report,
                                              const CoverageMap& coverage) {
  std::size_t m_pt = 0;
  std::size_t tested = 0;
  std::size_t test_executed = 0;
  for (const auto& record : report.functions) {
    if (record.verdict.kind == VerdictKind::kPseudoTested) ++m_pt;
    if (record.verdict.kind == VerdictKind::kTested) ++tested;
    if (coverage.is_covered(record.function.id.key())) ++test_executed;
  }
  const std::size_t all = std::max(coverage.all_function_count(), report.functions.size());
  return metrics_from_counts(m_pt, tested, test_executed, all);
}

struct FiveNumberSummary {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
};

struct GroupStatistics {
  TestType group = TestType::kUnit;
  std::size_t n = 0;
  double mean = 0.0;
  std::optional<double> stddev;  // sample (n - 1); absent for n == 1
  FiveNumberSummary summary;
};

// Linear-interpolation quantile of sorted data (the common "type 7" rule).
inline double quantile_sorted(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) return 0.0;
  const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

inline GroupStatistics group_statistics(TestType group, std::vector<double> values) {
  GroupStatistics stats;
  stats.group = group;
  stats.n = values.size();
  if (values.empty()) return stats;
  // Sorting first makes the sums independent of input order.
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  stats.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double squares = 0.0;
    for (double v : values) squares += (v - stats.mean) * (v - stats.mean);
    stats.stddev = std::sqrt(squares / static_cast<double>(values.size() - 1));
  }
  stats.summary = {values.front(), quantile_sorted(values, 0.25),
                   quantile_sorted(values, 0.5), quantile_sorted(values, 0.75),
                   values.back()};
  return stats;
}

// Statistics of r(M_PT) per test type, UNIT first. Groups with no projects
// are omitted.
inline std::vector<GroupStatistics> aggregate_groups(
    const std::vector<std::pair<ProjectMetrics, TestType>>& projects) {
  std::vector<GroupStatistics> out;
  for (TestType group : {TestType::kUnit, TestType::kSystem}) {
    std::vector<double> values;
    for (const auto& [metrics, tag] : projects)
      if (tag == group) values.push_back(metrics.r_m_pt);
    if (!values.empty()) out.push_back(group_statistics(group, std::move(values)));
  }
  return out;
}

}  // namespace pseudotest

#endif  // PSEUDOTEST_METRICS_HPP
