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

#ifndef PSEUDOTEST_CONFIG_HPP
#define PSEUDOTEST_CONFIG_HPP

#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "pseudotest/model.hpp"
#include "pseudotest/util.hpp"

namespace pseudotest {

using json = nlohmann::json;

// Effective analysis configuration. Loaded from a JSON config file; command
// line flags are applied on top by the caller.
struct AnalysisConfig {
  std::string adapter;
  TestType test_type = TestType::kUnit;
  double timeout_factor = 2.0;
  std::int64_t timeout_floor_ms = 1000;
  std::optional<int> workers;
  RunMode mode = RunMode::kFullMatrix;
  double baseline_failure_threshold = 0.10;
  std::optional<std::string> rules_path;
  // Return-kind name -> replacement constants, overriding the defaults.
  std::map<std::string, std::vector<std::string>> operator_table;
  // OBJECT type name -> expression producing one instance.
  std::map<std::string, std::string> value_providers;
  std::string output_dir = "pseudotest-out";
  json adapter_options = json::object();
  std::optional<std::string> project_name;
  std::optional<std::string> timestamp;
};

inline constexpr std::string_view kKnownConfigKeys[] = {
    "adapter",        "test_type",       "timeout_factor",
    "timeout_floor_ms", "workers",       "mode",
    "baseline_failure_threshold", "rules", "operator_table",
    "value_providers", "output",         "adapter_options",
    "project",        "timestamp"};

inline RunMode parse_run_mode(std::string_view text) {
  const std::string lower = to_lower(text);
  if (lower == "full" || lower == "full_matrix") return RunMode::kFullMatrix;
  if (lower == "fast") return RunMode::kFast;
  throw ConfigError("unknown mode '" + std::string(text) +
                    "' (expected full or fast)");
}

// Parses a config document. Missing keys keep their defaults; required keys
// are checked by validate_config once flags have been applied.
inline AnalysisConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    bool known = false;
    for (auto k : kKnownConfigKeys) known |= (k == key);
    if (!known) throw ConfigError("unknown config key '" + key + "'");
  }
  AnalysisConfig config;
  try {
    if (doc.contains("adapter")) config.adapter = doc.at("adapter").get<std::string>();
    if (doc.contains("test_type"))
      config.test_type = parse_test_type(doc.at("test_type").get<std::string>());
    if (doc.contains("timeout_factor"))
      config.timeout_factor = doc.at("timeout_factor").get<double>();
    if (doc.contains("timeout_floor_ms"))
      config.timeout_floor_ms = doc.at("timeout_floor_ms").get<std::int64_t>();
    if (doc.contains("workers")) config.workers = doc.at("workers").get<int>();
    if (doc.contains("mode"))
      config.mode = parse_run_mode(doc.at("mode").get<std::string>());
    if (doc.contains("baseline_failure_threshold"))
      config.baseline_failure_threshold =
          doc.at("baseline_failure_threshold").get<double>();
    if (doc.contains("rules")) config.rules_path = doc.at("rules").get<std::string>();
    if (doc.contains("operator_table"))
      config.operator_table =
          doc.at("operator_table").get<std::map<std::string, std::vector<std::string>>>();
    if (doc.contains("value_providers"))
      config.value_providers =
          doc.at("value_providers").get<std::map<std::string, std::string>>();
    if (doc.contains("output")) config.output_dir = doc.at("output").get<std::string>();
    if (doc.contains("adapter_options")) {
      config.adapter_options = doc.at("adapter_options");
      if (!config.adapter_options.is_object())
        throw ConfigError("config key 'adapter_options' must be an object");
    }
    if (doc.contains("project")) config.project_name = doc.at("project").get<std::string>();
    if (doc.contains("timestamp")) config.timestamp = doc.at("timestamp").get<std::string>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid config value: ") + e.what());
  }
  return config;
}

inline AnalysisConfig load_config_file(const fs::path& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ConfigError("config " + path.string() + " is not valid JSON: " +
                      e.what());
  }
  return parse_config(doc);
}

inline void validate_config(const AnalysisConfig& config) {
  if (config.adapter.empty())
    throw ConfigError("missing config key 'adapter'");
  if (!(config.timeout_factor > 0.0))
    throw ConfigError("config key 'timeout_factor' must be positive");
  if (config.timeout_floor_ms < 0)
    throw ConfigError("config key 'timeout_floor_ms' must be non-negative");
  if (config.workers && *config.workers < 1)
    throw ConfigError("config key 'workers' must be at least 1");
  if (config.baseline_failure_threshold < 0.0 ||
      config.baseline_failure_threshold > 1.0)
    throw ConfigError(
        "config key 'baseline_failure_threshold' must be within [0, 1]");
}

inline json config_to_json(const AnalysisConfig& config) {
  json doc = json::object();
  doc["adapter"] = config.adapter;
  doc["test_type"] = to_lower(to_string(config.test_type));
  doc["timeout_factor"] = config.timeout_factor;
  doc["timeout_floor_ms"] = config.timeout_floor_ms;
  if (config.workers) doc["workers"] = *config.workers;
  doc["mode"] = config.mode == RunMode::kFast ? "fast" : "full";
  doc["baseline_failure_threshold"] = config.baseline_failure_threshold;
  if (config.rules_path) doc["rules"] = *config.rules_path;
  doc["operator_table"] = config.operator_table;
  doc["value_providers"] = config.value_providers;
  doc["output"] = config.output_dir;
  doc["adapter_options"] = config.adapter_options;
  if (config.project_name) doc["project"] = *config.project_name;
  if (config.timestamp) doc["timestamp"] = *config.timestamp;
  return doc;
}

// Settings that can change analysis results. Worker count, output location
// and timestamp are left out.
inline json config_digest_material(const AnalysisConfig& config) {
  json doc = config_to_json(config);
  doc.erase("workers");
  doc.erase("output");
  doc.erase("timestamp");
  doc.erase("rules");
  return doc;
}

// Worker count: explicit setting, then PSEUDOTEST_WORKERS, then CPU count.
inline int resolve_workers(const AnalysisConfig& config) {
  if (config.workers) return *config.workers;
  if (const char* env = std::getenv("PSEUDOTEST_WORKERS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n >= 1) return static_cast<int>(n);
    throw ConfigError("PSEUDOTEST_WORKERS must be a positive integer");
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace pseudotest

#endif  // PSEUDOTEST_CONFIG_HPP
