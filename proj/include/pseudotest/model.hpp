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

// Domain types shared by every stage of the analysis, plus the rule that
// turns a function's execution results into a verdict.

#ifndef PSEUDOTEST_MODEL_HPP
#define PSEUDOTEST_MODEL_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace pseudotest {

// Base of every error thrown by the library. The CLI maps subclasses to exit
// codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed configuration or arguments.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Broken internal invariant (a bug, or inputs from different snapshots).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

namespace detail {

template <typename Enum, std::size_t N>
std::string_view enum_name(const std::array<std::string_view, N>& names,
                           Enum value) {
  const auto index = static_cast<std::size_t>(value);
  return index < N ? names[index] : std::string_view{"?"};
}

template <typename Enum, std::size_t N>
std::optional<Enum> enum_parse(const std::array<std::string_view, N>& names,
                               std::string_view text) {
  for (std::size_t i = 0; i < N; ++i) {
    if (names[i] == text) return static_cast<Enum>(i);
  }
  return std::nullopt;
}

template <typename Enum, std::size_t N>
Enum enum_parse_or_throw(const std::array<std::string_view, N>& names,
                         std::string_view text, std::string_view what) {
  if (auto parsed = enum_parse<Enum>(names, text)) return *parsed;
  throw ConfigError("unknown " + std::string(what) + " '" + std::string(text) +
                    "'");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Functions

struct SourceLocator {
  std::string file;  // relative to the project root
  int line_begin = 0;
  int line_end = 0;

  friend auto operator<=>(const SourceLocator&,
                          const SourceLocator&) = default;
};

// Identity of one analyzable function. Ordering and equality use only
// (container, name, signature); the locator is informational.
struct FunctionId {
  std::string container;  // class / module path, may be empty
  std::string name;
  std::string signature;  // parameter types, comma separated, no parens
  SourceLocator source_locator;

  // Canonical textual key, e.g. "Calculation::add(int)".
  std::string key() const {
    std::string out;
    if (!container.empty()) out += container + "::";
    out += name;
    out += '(' + signature + ')';
    return out;
  }

  friend bool operator==(const FunctionId& a, const FunctionId& b) {
    return a.container == b.container && a.name == b.name &&
           a.signature == b.signature;
  }
  friend auto operator<=>(const FunctionId& a, const FunctionId& b) {
    return std::tie(a.container, a.name, a.signature) <=>
           std::tie(b.container, b.name, b.signature);
  }
};

enum class ReturnKind { kVoid, kBoolean, kInteger, kFloating, kCharacter,
                        kString, kObject };

inline constexpr std::array<std::string_view, 7> kReturnKindNames = {
    "VOID", "BOOLEAN", "INTEGER", "FLOATING", "CHARACTER", "STRING", "OBJECT"};

inline std::string_view to_string(ReturnKind kind) {
  return detail::enum_name(kReturnKindNames, kind);
}
inline ReturnKind parse_return_kind(std::string_view text) {
  return detail::enum_parse_or_throw<ReturnKind>(kReturnKindNames, text,
                                                 "return kind");
}

// Return kind plus the type name for OBJECT returns.
struct ReturnType {
  ReturnKind kind = ReturnKind::kVoid;
  std::string object_type;

  bool is_primitive_or_string() const {
    return kind != ReturnKind::kVoid && kind != ReturnKind::kObject;
  }
  friend bool operator==(const ReturnType&, const ReturnType&) = default;
};

enum class ExclusionReason {
  kEmptyBody,
  kTrivialAccessor,
  kConstructor,
  kCompilerGenerated,
  kObjectReturnNoProvider,
  kAllCoveringTestsTimedOut,
};

inline constexpr std::array<std::string_view, 6> kExclusionReasonNames = {
    "EMPTY_BODY",        "TRIVIAL_ACCESSOR",
    "CONSTRUCTOR",       "COMPILER_GENERATED",
    "OBJECT_RETURN_NO_PROVIDER", "ALL_COVERING_TESTS_TIMED_OUT"};

inline std::string_view to_string(ExclusionReason reason) {
  return detail::enum_name(kExclusionReasonNames, reason);
}
inline ExclusionReason parse_exclusion_reason(std::string_view text) {
  return detail::enum_parse_or_throw<ExclusionReason>(kExclusionReasonNames,
                                                      text, "exclusion reason");
}

struct FunctionUnderTest {
  FunctionId id;
  ReturnType return_type;
  int statement_count = 0;
  bool is_constructor = false;
  bool is_compiler_generated = false;
  bool is_trivial_accessor = false;
  std::optional<ExclusionReason> exclusion;

  friend bool operator==(const FunctionUnderTest& a,
                         const FunctionUnderTest& b) {
    return a.id == b.id && a.id.source_locator == b.id.source_locator &&
           a.return_type == b.return_type &&
           a.statement_count == b.statement_count &&
           a.is_constructor == b.is_constructor &&
           a.is_compiler_generated == b.is_compiler_generated &&
           a.is_trivial_accessor == b.is_trivial_accessor &&
           a.exclusion == b.exclusion;
  }
};

// ---------------------------------------------------------------------------
// Tests and coverage

enum class BaselineStatus { kPassed, kFailed };

inline constexpr std::array<std::string_view, 2> kBaselineStatusNames = {
    "PASSED", "FAILED"};

inline std::string_view to_string(BaselineStatus status) {
  return detail::enum_name(kBaselineStatusNames, status);
}
inline BaselineStatus parse_baseline_status(std::string_view text) {
  return detail::enum_parse_or_throw<BaselineStatus>(kBaselineStatusNames,
                                                     text, "baseline status");
}

struct TestCase {
  std::string id;
  std::string display_name;
  BaselineStatus baseline_status = BaselineStatus::kPassed;
  std::int64_t baseline_duration_ms = 0;  // meaningful only when PASSED

  bool passed() const { return baseline_status == BaselineStatus::kPassed; }
  friend bool operator==(const TestCase&, const TestCase&) = default;
};

// Test <-> function execution relation. Keys are FunctionId::key() strings.
class CoverageMap {
 public:
  CoverageMap() = default;
  explicit CoverageMap(std::size_t all_function_count)
      : all_function_count_(all_function_count) {}

  void record(const std::string& test_id, const std::string& function_key) {
    executed_by_[test_id].insert(function_key);
    covering_tests_[function_key].insert(test_id);
  }
  // Registers a test that executed nothing (or whose coverage is discarded).
  void add_test(const std::string& test_id) { executed_by_[test_id]; }

  const std::map<std::string, std::set<std::string>>& executed_by() const {
    return executed_by_;
  }
  const std::map<std::string, std::set<std::string>>& covering_tests() const {
    return covering_tests_;
  }
  const std::set<std::string>& covering(const std::string& function_key) const {
    static const std::set<std::string> kEmpty;
    auto it = covering_tests_.find(function_key);
    return it == covering_tests_.end() ? kEmpty : it->second;
  }
  bool is_covered(const std::string& function_key) const {
    return !covering(function_key).empty();
  }

  std::size_t all_function_count() const { return all_function_count_; }
  void set_all_function_count(std::size_t n) { all_function_count_ = n; }

  friend bool operator==(const CoverageMap&, const CoverageMap&) = default;

 private:
  std::map<std::string, std::set<std::string>> executed_by_;
  std::map<std::string, std::set<std::string>> covering_tests_;
  std::size_t all_function_count_ = 0;
};

// ---------------------------------------------------------------------------
// Mutants and verdicts

enum class MutantVariant { kVoidEmpty, kReturnValueA, kReturnValueB,
                           kObjectProvided };

inline constexpr std::array<std::string_view, 4> kMutantVariantNames = {
    "VOID_EMPTY", "RETURN_VALUE_A", "RETURN_VALUE_B", "OBJECT_PROVIDED"};
inline constexpr std::array<std::string_view, 4> kMutantVariantTags = {
    "void", "A", "B", "object"};

inline std::string_view to_string(MutantVariant variant) {
  return detail::enum_name(kMutantVariantNames, variant);
}
inline MutantVariant parse_mutant_variant(std::string_view text) {
  return detail::enum_parse_or_throw<MutantVariant>(kMutantVariantNames, text,
                                                    "mutant variant");
}

struct Mutant {
  std::string mutant_id;  // "<function key>#<tag>"
  FunctionId function;
  MutantVariant variant = MutantVariant::kVoidEmpty;
  std::string substituted_value;  // empty for VOID_EMPTY

  static std::string make_id(const FunctionId& function,
                             MutantVariant variant) {
    return function.key() + "#" +
           std::string(detail::enum_name(kMutantVariantTags, variant));
  }
  friend bool operator==(const Mutant& a, const Mutant& b) {
    return a.mutant_id == b.mutant_id && a.function == b.function &&
           a.variant == b.variant && a.substituted_value == b.substituted_value;
  }
};

enum class ExecutionVerdict { kKilled, kSurvived, kTimeout, kInconclusive };

inline constexpr std::array<std::string_view, 4> kExecutionVerdictNames = {
    "KILLED", "SURVIVED", "TIMEOUT", "INCONCLUSIVE"};

inline std::string_view to_string(ExecutionVerdict verdict) {
  return detail::enum_name(kExecutionVerdictNames, verdict);
}
inline ExecutionVerdict parse_execution_verdict(std::string_view text) {
  return detail::enum_parse_or_throw<ExecutionVerdict>(kExecutionVerdictNames,
                                                       text, "verdict");
}

enum class VerdictKind { kTested, kPseudoTested, kExcluded, kUncovered };

inline constexpr std::array<std::string_view, 4> kVerdictKindNames = {
    "TESTED", "PSEUDO_TESTED", "EXCLUDED", "UNCOVERED"};

inline std::string_view to_string(VerdictKind kind) {
  return detail::enum_name(kVerdictKindNames, kind);
}
inline VerdictKind parse_verdict_kind(std::string_view text) {
  return detail::enum_parse_or_throw<VerdictKind>(kVerdictKindNames, text,
                                                  "function verdict");
}

struct FunctionVerdict {
  VerdictKind kind = VerdictKind::kUncovered;
  std::optional<ExclusionReason> reason;  // set iff kind == kExcluded

  static FunctionVerdict tested() { return {VerdictKind::kTested, {}}; }
  static FunctionVerdict pseudo_tested() {
    return {VerdictKind::kPseudoTested, {}};
  }
  static FunctionVerdict uncovered() { return {VerdictKind::kUncovered, {}}; }
  static FunctionVerdict excluded(ExclusionReason why) {
    return {VerdictKind::kExcluded, why};
  }

  std::string to_string() const {
    std::string out(pseudotest::to_string(kind));
    if (reason) out += "(" + std::string(pseudotest::to_string(*reason)) + ")";
    return out;
  }
  friend bool operator==(const FunctionVerdict&,
                         const FunctionVerdict&) = default;
};

// Verdicts of the covering tests against one mutant.
using MutantResults = std::vector<ExecutionVerdict>;

// Decides tested / pseudo-tested from the results of all mutants of one
// function. TIMEOUT and INCONCLUSIVE are neutral: they neither kill nor
// demonstrate survival. `covered` is whether the function has at least one
// passing covering test; callers handle pre-mutation exclusions themselves.
inline FunctionVerdict derive_function_verdict(
    std::span<const MutantResults> slice, bool covered) {
  if (!covered) return FunctionVerdict::uncovered();
  bool any_result = false;
  bool killed = false;
  bool survived = false;
  for (const auto& mutant : slice) {
    for (ExecutionVerdict v : mutant) {
      any_result = true;
      killed |= v == ExecutionVerdict::kKilled;
      survived |= v == ExecutionVerdict::kSurvived;
    }
  }
  if (!any_result) {
    throw ConsistencyError(
        "covered, non-excluded function has no execution results");
  }
  if (killed) return FunctionVerdict::tested();
  if (survived) return FunctionVerdict::pseudo_tested();
  return FunctionVerdict::excluded(ExclusionReason::kAllCoveringTestsTimedOut);
}

// ---------------------------------------------------------------------------
// Run-level tags

enum class TestType { kUnit, kSystem };

inline constexpr std::array<std::string_view, 2> kTestTypeNames = {"UNIT",
                                                                   "SYSTEM"};

inline std::string_view to_string(TestType type) {
  return detail::enum_name(kTestTypeNames, type);
}
// Accepts "UNIT"/"SYSTEM" in any case.
inline TestType parse_test_type(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return detail::enum_parse_or_throw<TestType>(kTestTypeNames, upper,
                                               "test type");
}

enum class Severity { kIrrelevant, kLow, kMedium, kHigh, kUnknown };

inline constexpr std::array<std::string_view, 5> kSeverityNames = {
    "IRRELEVANT", "LOW", "MEDIUM", "HIGH", "UNKNOWN"};

inline std::string_view to_string(Severity severity) {
  return detail::enum_name(kSeverityNames, severity);
}
inline Severity parse_severity(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return detail::enum_parse_or_throw<Severity>(kSeverityNames, upper,
                                               "severity");
}

enum class RunMode { kFullMatrix, kFast };

inline constexpr std::array<std::string_view, 2> kRunModeNames = {
    "FULL_MATRIX", "FAST"};

inline std::string_view to_string(RunMode mode) {
  return detail::enum_name(kRunModeNames, mode);
}


// ---------------------------------------------------------------------------
// Analysis results

struct ProjectMetrics {
  std::size_t m_pt = 0;              // pseudo-tested functions
  std::size_t mutated_executed = 0;  // ratio denominator
  std::size_t tested = 0;
  std::size_t test_executed = 0;     // functions with a passing covering test
  std::size_t all_function_count = 0;
  double r_m_pt = 0.0;
  double r_m_t = 0.0;
  double cc = 0.0;
  double r_ct = 0.0;
  bool no_analyzable_functions = false;  // mutated_executed == 0

  friend bool operator==(const ProjectMetrics&, const ProjectMetrics&) = default;
};

struct ReportMetadata {
  std::string project;
  TestType test_type = TestType::kUnit;
  std::string timestamp;
  std::string config_digest;
  std::string adapter;
  std::int64_t timeout_ms = 0;
  RunMode mode = RunMode::kFullMatrix;

  friend bool operator==(const ReportMetadata&, const ReportMetadata&) = default;
};

struct FunctionRecord {
  FunctionUnderTest function;
  FunctionVerdict verdict;
  std::string category;
  Severity severity = Severity::kUnknown;
  std::size_t covering_tests = 0;

  friend bool operator==(const FunctionRecord&, const FunctionRecord&) = default;
};

struct MutantRecord {
  Mutant mutant;
  std::vector<std::pair<std::string, ExecutionVerdict>> results;  // by test id

  friend bool operator==(const MutantRecord&, const MutantRecord&) = default;
};

struct AnalysisReport {
  ReportMetadata metadata;
  std::vector<FunctionRecord> functions;  // one per inventory entry, by id
  std::vector<MutantRecord> mutants;      // by mutant id
  ProjectMetrics metrics;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

}  // namespace pseudotest

#endif  // PSEUDOTEST_MODEL_HPP
