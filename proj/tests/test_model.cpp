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

#include <gtest/gtest.h>

#include <array>

#include "test_support.hpp"

namespace pseudotest {
namespace {

TEST(Model, EnumNamesRoundTrip) {
  for (auto v : {ExecutionVerdict::kKilled, ExecutionVerdict::kSurvived,
                 ExecutionVerdict::kTimeout, ExecutionVerdict::kInconclusive})
    EXPECT_EQ(parse_execution_verdict(to_string(v)), v);
  for (auto k : {ReturnKind::kVoid, ReturnKind::kBoolean, ReturnKind::kInteger,
                 ReturnKind::kFloating, ReturnKind::kCharacter, ReturnKind::kString,
                 ReturnKind::kObject})
    EXPECT_EQ(parse_return_kind(to_string(k)), k);
  for (auto r : {ExclusionReason::kEmptyBody, ExclusionReason::kConstructor,
                 ExclusionReason::kCompilerGenerated, ExclusionReason::kTrivialAccessor,
                 ExclusionReason::kObjectReturnNoProvider,
                 ExclusionReason::kAllCoveringTestsTimedOut})
    EXPECT_EQ(parse_exclusion_reason(to_string(r)), r);
  for (auto v : {MutantVariant::kVoidEmpty, MutantVariant::kReturnValueA,
                 MutantVariant::kReturnValueB, MutantVariant::kObjectProvided})
    EXPECT_EQ(parse_mutant_variant(to_string(v)), v);
  EXPECT_EQ(parse_test_type("SYSTEM"), TestType::kSystem);
  EXPECT_THROW(parse_execution_verdict("MAYBE"), ConfigError);
}

TEST(Model, FunctionKeyAndMutantId) {
  FunctionId id{"Calculation", "add", "int", {}};
  EXPECT_EQ(id.key(), "Calculation::add(int)");
  EXPECT_EQ(Mutant::make_id(id, MutantVariant::kVoidEmpty), "Calculation::add(int)#void");
  EXPECT_EQ(Mutant::make_id(id, MutantVariant::kReturnValueA), "Calculation::add(int)#A");
  FunctionId free_fn{"", "main", "", {}};
  EXPECT_EQ(free_fn.key(), "main()");
}

TEST(Model, VerdictToString) {
  EXPECT_EQ(FunctionVerdict::excluded(ExclusionReason::kEmptyBody).to_string(),
            "EXCLUDED(EMPTY_BODY)");
  EXPECT_EQ(FunctionVerdict::pseudo_tested().to_string(), "PSEUDO_TESTED");
}

using V = ExecutionVerdict;

TEST(DeriveVerdict, AnyKillMeansTested) {
  const std::vector<MutantResults> slice = {{V::kSurvived, V::kSurvived}, {V::kKilled}};
  EXPECT_EQ(derive_function_verdict(slice, true), FunctionVerdict::tested());
}

TEST(DeriveVerdict, AllSurvivedMeansPseudoTested) {
  const std::vector<MutantResults> slice = {{V::kSurvived}, {V::kSurvived}};
  EXPECT_EQ(derive_function_verdict(slice, true), FunctionVerdict::pseudo_tested());
}

TEST(DeriveVerdict, TimeoutsAreNeutral) {
  const std::vector<MutantResults> mixed = {{V::kTimeout, V::kSurvived}};
  EXPECT_EQ(derive_function_verdict(mixed, true), FunctionVerdict::pseudo_tested());
  const std::vector<MutantResults> only = {{V::kTimeout}, {V::kInconclusive}};
  EXPECT_EQ(derive_function_verdict(only, true),
            FunctionVerdict::excluded(ExclusionReason::kAllCoveringTestsTimedOut));
}

TEST(DeriveVerdict, UncoveredAndMissingResults) {
  EXPECT_EQ(derive_function_verdict({}, false), FunctionVerdict::uncovered());
  EXPECT_THROW(derive_function_verdict({}, true), ConsistencyError);
}

TEST(CoverageMap, RecordsBothDirections) {
  CoverageMap map(3);
  map.add_test("t1");
  map.add_test("t2");
  map.record("t1", "f()");
  map.record("t2", "f()");
  map.record("t2", "g()");
  EXPECT_TRUE(map.is_covered("f()"));
  EXPECT_FALSE(map.is_covered("h()"));
  EXPECT_EQ(map.covering("f()").size(), 2u);
  EXPECT_EQ(map.all_function_count(), 3u);
}

}  // namespace
}  // namespace pseudotest
