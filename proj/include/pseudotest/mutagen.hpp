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

// Exclusion filter and extreme-mutant generation. Every eligible function
// gets its whole body replaced: void bodies are emptied, primitive and string
// returns get two constant-return mutants, object returns get one mutant
// returning a provider-built instance.

#ifndef PSEUDOTEST_MUTAGEN_HPP
#define PSEUDOTEST_MUTAGEN_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pseudotest/adapter.hpp"
#include "pseudotest/model.hpp"

namespace pseudotest {

// Replacement constants per return kind, rendered as source literals.
class OperatorTable {
 public:
  OperatorTable() {
    values_[ReturnKind::kVoid] = {""};
    values_[ReturnKind::kBoolean] = {"false", "true"};
    values_[ReturnKind::kInteger] = {"0", "1"};
    values_[ReturnKind::kFloating] = {"0.0", "1.0"};
    values_[ReturnKind::kCharacter] = {"' '", "'A'"};
    values_[ReturnKind::kString] = {"\"\"", "\"A\""};
  }

  static const OperatorTable& defaults() {
    static const OperatorTable table;
    return table;
  }

  // Applies overrides keyed by return-kind name (any case). Only
  // primitive and string kinds can be overridden, always with two distinct
  // values.
  static OperatorTable with_overrides(
      const std::map<std::string, std::vector<std::string>>& overrides) {
    OperatorTable table;
    for (const auto& [key, values] : overrides) {
      std::string upper = key;
      for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      const ReturnKind kind = parse_return_kind(upper);
      if (kind == ReturnKind::kVoid || kind == ReturnKind::kObject)
        throw ConfigError("operator_table cannot override " + upper);
      if (values.size() != 2 || values[0] == values[1])
        throw ConfigError("operator_table entry " + upper +
                          " needs exactly two distinct values");
      table.values_[kind] = values;
    }
    return table;
  }

  const std::vector<std::string>& values(ReturnKind kind) const {
    static const std::vector<std::string> kNone;
    auto it = values_.find(kind);
    return it == values_.end() ? kNone : it->second;
  }

  friend bool operator==(const OperatorTable&, const OperatorTable&) = default;

 private:
  std::map<ReturnKind, std::vector<std::string>> values_;
};

// The first applicable pre-mutation exclusion rule, in fixed priority order.
inline std::optional<ExclusionReason> exclusion_for(
    const FunctionUnderTest& function, const ValueProviderRegistry& providers) {
  if (function.statement_count == 0) return ExclusionReason::kEmptyBody;
  if (function.is_constructor) return ExclusionReason::kConstructor;
  if (function.is_compiler_generated) return ExclusionReason::kCompilerGenerated;
  if (function.is_trivial_accessor) return ExclusionReason::kTrivialAccessor;
  if (function.return_type.kind == ReturnKind::kObject &&
      !providers.contains(function.return_type.object_type))
    return ExclusionReason::kObjectReturnNoProvider;
  return std::nullopt;
}

struct FilterResult {
  std::vector<FunctionUnderTest> eligible;
  std::vector<FunctionUnderTest> excluded;  // exclusion populated
};

inline FilterResult filter_functions(const std::vector<FunctionUnderTest>& inventory,
                                     const ValueProviderRegistry& providers) {
  FilterResult result;
  for (FunctionUnderTest function : inventory) {
    function.exclusion = exclusion_for(function, providers);
    (function.exclusion ? result.excluded : result.eligible)
        .push_back(std::move(function));
  }
  return result;
}

inline std::vector<Mutant> generate_mutants(const FunctionUnderTest& function,
                                            const OperatorTable& table,
                                            const ValueProviderRegistry& providers) {
  if (function.exclusion || exclusion_for(function, providers)) {
    throw ConsistencyError("generate_mutants called on excluded function " +
                           function.id.key());
  }
  auto make = [&](MutantVariant variant, std::string value) {
    return Mutant{Mutant::make_id(function.id, variant), function.id, variant,
                  std::move(value)};
  };
  const ReturnKind kind = function.return_type.kind;
  if (kind == ReturnKind::kVoid) return {make(MutantVariant::kVoidEmpty, "")};
  if (kind == ReturnKind::kObject) {
    return {make(MutantVariant::kObjectProvided,
                 *providers.find(function.return_type.object_type))};
  }
  const auto& values = table.values(kind);
  return {make(MutantVariant::kReturnValueA, values.at(0)),
          make(MutantVariant::kReturnValueB, values.at(1))};
}

// Mutants for every eligible function, sorted by mutant id.
inline std::vector<Mutant> generate_all_mutants(
    const std::vector<FunctionUnderTest>& eligible, const OperatorTable& table,
    const ValueProviderRegistry& providers) {
  std::vector<Mutant> all;
  for (const auto& function : eligible) {
    for (auto& m : generate_mutants(function, table, providers)) all.push_back(std::move(m));
  }
  std::sort(all.begin(), all.end(),
            [](const Mutant& a, const Mutant& b) { return a.mutant_id < b.mutant_id; });
  return all;
}

}  // namespace pseudotest

#endif  // PSEUDOTEST_MUTAGEN_HPP
