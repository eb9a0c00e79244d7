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

// Name-based functional categorization of pseudo-tested functions.
//
// A ruleset is an ordered list of (category, severity, patterns); the first
// rule with a matching pattern wins, so rules go most-specific first.
// Patterns are "<kind>:<text>", matched case-insensitively:
//
//   exact:hashCode     the whole name
//   prefix:set         a leading word: "setName", "set_name", "set"; not "settle"
//   suffix:Listener    the end of the name
//   word:cache         any camelCase/snake_case word: "addToCache"
//   contains:tmp       any substring
//
// Names matching nothing are (UNCLASSIFIED, UNKNOWN).

#ifndef PSEUDOTEST_CLASSIFY_HPP
#define PSEUDOTEST_CLASSIFY_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pseudotest/model.hpp"
#include "pseudotest/util.hpp"

namespace pseudotest {

inline constexpr std::string_view kUnclassified = "UNCLASSIFIED";

// Shipped default ruleset; identical to data/default_rules.json.
inline constexpr std::string_view kDefaultRulesJson = R"RULES({
  "format": "pseudotest-rules/1",
  "rules": [
    {"category": "hashcode", "severity": "irrelevant", "patterns": ["exact:hashCode"]},
    {"category": "toString", "severity": "medium", "patterns": ["exact:toString"]},
    {"category": "object identity", "severity": "high", "patterns": ["exact:equals", "exact:compareTo"]},
    {"category": "finalization", "severity": "low", "patterns": ["exact:finalize", "prefix:close", "prefix:dispose", "prefix:shutdown"]},
    {"category": "test-related", "severity": "irrelevant", "patterns": ["word:test", "word:mock", "word:stub"]},
    {"category": "non-deterministic", "severity": "irrelevant", "patterns": ["word:random", "word:seed"]},
    {"category": "preparation", "severity": "medium", "patterns": ["prefix:init", "prefix:setUp", "prefix:prepare"]},
    {"category": "optimization", "severity": "low", "patterns": ["word:cache"]},
    {"category": "monitoring", "severity": "low", "patterns": ["prefix:log", "prefix:trace", "prefix:monitor"]},
    {"category": "validation", "severity": "low", "patterns": ["prefix:check", "prefix:validate", "prefix:verify", "prefix:assert"]},
    {"category": "events", "severity": "medium", "patterns": ["prefix:fire", "prefix:notify", "prefix:emit"]},
    {"category": "setter and getter", "severity": "medium", "patterns": ["prefix:set", "prefix:get", "prefix:is"]},
    {"category": "transformation", "severity": "medium", "patterns": ["prefix:to", "prefix:from", "prefix:convert", "prefix:escape", "prefix:abs"]}
  ]
}
)RULES";

// Category -> severity for the fourteen reference categories.
inline const std::map<std::string, Severity>& reference_category_severities() {
  static const std::map<std::string, Severity> table = {
      {"hashcode", Severity::kIrrelevant},
      {"non-deterministic", Severity::kIrrelevant},
      {"test-related", Severity::kIrrelevant},
      {"finalization", Severity::kLow},
      {"monitoring", Severity::kLow},
      {"optimization", Severity::kLow},
      {"validation", Severity::kLow},
      {"events", Severity::kMedium},
      {"preparation", Severity::kMedium},
      {"setter and getter", Severity::kMedium},
      {"toString", Severity::kMedium},
      {"transformation", Severity::kMedium},
      {"object identity", Severity::kHigh},
      {"program logic", Severity::kHigh},
  };
  return table;
}

struct NamePattern {
  enum class Kind { kExact, kPrefix, kSuffix, kWord, kContains };
  Kind kind = Kind::kExact;
  std::string text;  // as written; compared case-insensitively

  static NamePattern parse(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos || colon + 1 == spec.size())
      throw ConfigError("pattern '" + std::string(spec) + "' must be <kind>:<text>");
    const std::string kind = to_lower(spec.substr(0, colon));
    NamePattern p;
    p.text = std::string(spec.substr(colon + 1));
    if (kind == "exact") p.kind = Kind::kExact;
    else if (kind == "prefix") p.kind = Kind::kPrefix;
    else if (kind == "suffix") p.kind = Kind::kSuffix;
    else if (kind == "word") p.kind = Kind::kWord;
    else if (kind == "contains") p.kind = Kind::kContains;
    else throw ConfigError("unknown pattern kind '" + kind + "'");
    return p;
  }

  std::string to_string() const {
    static constexpr std::string_view kNames[] = {"exact", "prefix", "suffix",
                                                  "word", "contains"};
    return std::string(kNames[static_cast<int>(kind)]) + ":" + text;
  }

  bool matches(std::string_view name) const {
    const std::string lname = to_lower(name);
    const std::string lpat = to_lower(text);
    switch (kind) {
      case Kind::kExact:
        return lname == lpat;
      case Kind::kPrefix: {
        if (!lname.starts_with(lpat)) return false;
        if (name.size() == lpat.size()) return true;
        const char next = name[lpat.size()];
        return std::isupper(static_cast<unsigned char>(next)) ||
               std::isdigit(static_cast<unsigned char>(next)) || next == '_';
      }
      case Kind::kSuffix:
        return lname.ends_with(lpat);
      case Kind::kContains:
        return lname.find(lpat) != std::string::npos;
      case Kind::kWord:
        for (const auto& w : split_words(name))
          if (w == lpat) return true;
        return false;
    }
    return false;
  }

  // "parseHTMLDoc2_fast" -> {"parse", "html", "doc", "2", "fast"}
  static std::vector<std::string> split_words(std::string_view name) {
    std::vector<std::string> words;
    std::string current;
    auto flush = [&] {
      if (!current.empty()) words.push_back(to_lower(current));
      current.clear();
    };
    for (std::size_t i = 0; i < name.size(); ++i) {
      const auto c = static_cast<unsigned char>(name[i]);
      if (!std::isalnum(c)) {
        flush();
        continue;
      }
      if (!current.empty()) {
        const auto prev = static_cast<unsigned char>(current.back());
        const bool next_lower =
            i + 1 < name.size() && std::islower(static_cast<unsigned char>(name[i + 1]));
        const bool boundary =
            (std::isupper(c) && std::islower(prev)) ||
            (std::isupper(c) && std::isupper(prev) && next_lower) ||
            (std::isdigit(c) != 0) != (std::isdigit(prev) != 0);
        if (boundary) flush();
      }
      current += static_cast<char>(c);
    }
    flush();
    return words;
  }

  friend bool operator==(const NamePattern&, const NamePattern&) = default;
};

struct CategoryRule {
  std::string category;
  Severity severity = Severity::kUnknown;
  std::vector<NamePattern> patterns;

  friend bool operator==(const CategoryRule&, const CategoryRule&) = default;
};

struct Classification {
  std::string category;
  Severity severity = Severity::kUnknown;

  friend bool operator==(const Classification&, const Classification&) = default;
};

using Ruleset = std::vector<CategoryRule>;

inline Ruleset parse_ruleset(std::string_view text, std::string_view origin = "rules") {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string(origin) + " is not valid JSON: " + e.what());
  }
  Ruleset rules;
  try {
    for (const auto& jr : doc.at("rules")) {
      CategoryRule rule;
      rule.category = jr.at("category").get<std::string>();
      rule.severity = parse_severity(jr.at("severity").get<std::string>());
      for (const auto& jp : jr.at("patterns"))
        rule.patterns.push_back(NamePattern::parse(jp.get<std::string>()));
      rules.push_back(std::move(rule));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string(origin) + ": malformed ruleset: " + e.what());
  }
  if (rules.empty()) throw ConfigError(std::string(origin) + ": ruleset is empty");
  return rules;
}

inline const Ruleset& default_ruleset() {
  static const Ruleset rules = parse_ruleset(kDefaultRulesJson, "default rules");
  return rules;
}

inline std::string ruleset_to_json(const Ruleset& rules) {
  nlohmann::json doc;
  doc["format"] = "pseudotest-rules/1";
  doc["rules"] = nlohmann::json::array();
  for (const auto& rule : rules) {
    nlohmann::json patterns = nlohmann::json::array();
    for (const auto& p : rule.patterns) patterns.push_back(p.to_string());
    doc["rules"].push_back({{"category", rule.category},
                            {"severity", to_lower(to_string(rule.severity))},
                            {"patterns", patterns}});
  }
  return doc.dump(2) + "\n";
}

// First matching rule wins. Depends only on the function's name.
inline Classification classify_function(const FunctionUnderTest& function,
                                        const Ruleset& rules) {
  if (rules.empty()) throw ConfigError("classification needs a nonempty ruleset");
  for (const auto& rule : rules) {
    for (const auto& pattern : rule.patterns) {
      if (pattern.matches(function.id.name)) return {rule.category, rule.severity};
    }
  }
  return {std::string(kUnclassified), Severity::kUnknown};
}

struct SeverityBin {
  std::size_t count = 0;
  double ratio = 0.0;  // share of all pseudo-tested functions

  friend bool operator==(const SeverityBin&, const SeverityBin&) = default;
};

// Severity distribution of the pseudo-tested functions. All five severities
// are present; ratios are 0 when nothing is pseudo-tested.
inline std::map<Severity, SeverityBin> severity_histogram(const AnalysisReport& report) {
  std::map<Severity, SeverityBin> bins;
  for (std::size_t i = 0; i < kSeverityNames.size(); ++i)
    bins[static_cast<Severity>(i)] = {};
  std::size_t total = 0;
  for (const auto& record : report.functions) {
    if (record.verdict.kind != VerdictKind::kPseudoTested) continue;
    ++bins[record.severity].count;
    ++total;
  }
  if (total > 0) {
    for (auto& [severity, bin] : bins)
      bin.ratio = static_cast<double>(bin.count) / static_cast<double>(total);
  }
  return bins;
}

}  // namespace pseudotest

#endif  // PSEUDOTEST_CLASSIFY_HPP
