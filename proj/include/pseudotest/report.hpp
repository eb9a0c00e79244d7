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

// Report serialization: JSON (lossless, the interchange format), CSV, SQL
// statements, a text table, and columnar plot data. All emitters are pure
// functions of the in-memory report; the only arithmetic here is display
// rounding.

#ifndef PSEUDOTEST_REPORT_HPP
#define PSEUDOTEST_REPORT_HPP

#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pseudotest/classify.hpp"
#include "pseudotest/metrics.hpp"
#include "pseudotest/model.hpp"
#include "pseudotest/util.hpp"

namespace pseudotest {

inline constexpr std::string_view kReportFormat = "pseudotest-report/1";

// Relational schema for emit_sql; identical to data/schema.sql.
inline constexpr std::string_view kSqlSchema = R"SQL(CREATE TABLE analysis_run (
  project VARCHAR(255) NOT NULL,
  test_type VARCHAR(16) NOT NULL,
  run_timestamp VARCHAR(64) NOT NULL,
  config_digest VARCHAR(64) NOT NULL,
  adapter VARCHAR(64) NOT NULL,
  timeout_ms BIGINT NOT NULL,
  run_mode VARCHAR(16) NOT NULL
);
CREATE TABLE function_result (
  project VARCHAR(255) NOT NULL,
  function_key VARCHAR(1024) NOT NULL,
  container VARCHAR(512) NOT NULL,
  function_name VARCHAR(255) NOT NULL,
  signature VARCHAR(512) NOT NULL,
  source_file VARCHAR(1024) NOT NULL,
  line_begin INTEGER NOT NULL,
  line_end INTEGER NOT NULL,
  return_kind VARCHAR(16) NOT NULL,
  object_type VARCHAR(255),
  statement_count INTEGER NOT NULL,
  verdict VARCHAR(32) NOT NULL,
  exclusion_reason VARCHAR(64),
  category VARCHAR(64) NOT NULL,
  severity VARCHAR(16) NOT NULL,
  covering_tests INTEGER NOT NULL
);
CREATE TABLE mutant_result (
  project VARCHAR(255) NOT NULL,
  mutant_id VARCHAR(1024) NOT NULL,
  function_key VARCHAR(1024) NOT NULL,
  variant VARCHAR(32) NOT NULL,
  substituted_value VARCHAR(1024) NOT NULL,
  test_id VARCHAR(1024) NOT NULL,
  verdict VARCHAR(16) NOT NULL
);
CREATE TABLE project_metric (
  project VARCHAR(255) NOT NULL,
  metric_name VARCHAR(64) NOT NULL,
  metric_value DOUBLE PRECISION NOT NULL
);
)SQL";

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::json report_to_json(const AnalysisReport& report) {
  using nlohmann::json;
  const auto& md = report.metadata;
  json doc;
  doc["format"] = kReportFormat;
  doc["metadata"] = {{"project", md.project},
                     {"test_type", to_string(md.test_type)},
                     {"timestamp", md.timestamp},
                     {"config_digest", md.config_digest},
                     {"adapter", md.adapter},
                     {"timeout_ms", md.timeout_ms},
                     {"mode", to_string(md.mode)}};
  json functions = json::array();
  for (const auto& r : report.functions) {
    const auto& f = r.function;
    json jf;
    jf["key"] = f.id.key();
    jf["container"] = f.id.container;
    jf["name"] = f.id.name;
    jf["signature"] = f.id.signature;
    jf["file"] = f.id.source_locator.file;
    jf["line_begin"] = f.id.source_locator.line_begin;
    jf["line_end"] = f.id.source_locator.line_end;
    jf["return_kind"] = to_string(f.return_type.kind);
    jf["object_type"] = f.return_type.object_type;
    jf["statement_count"] = f.statement_count;
    jf["is_constructor"] = f.is_constructor;
    jf["is_compiler_generated"] = f.is_compiler_generated;
    jf["is_trivial_accessor"] = f.is_trivial_accessor;
    jf["exclusion"] = f.exclusion ? json(to_string(*f.exclusion)) : json(nullptr);
    jf["verdict"] = to_string(r.verdict.kind);
    jf["verdict_reason"] =
        r.verdict.reason ? json(to_string(*r.verdict.reason)) : json(nullptr);
    jf["category"] = r.category;
    jf["severity"] = to_string(r.severity);
    jf["covering_tests"] = r.covering_tests;
    functions.push_back(std::move(jf));
  }
  doc["functions"] = std::move(functions);
  json mutants = json::array();
  for (const auto& m : report.mutants) {
    json results = json::array();
    for (const auto& [test, verdict] : m.results)
      results.push_back({{"test", test}, {"verdict", to_string(verdict)}});
    const auto& fid = m.mutant.function;
    mutants.push_back({{"id", m.mutant.mutant_id},
                       {"function",
                        {{"container", fid.container},
                         {"name", fid.name},
                         {"signature", fid.signature},
                         {"file", fid.source_locator.file},
                         {"line_begin", fid.source_locator.line_begin},
                         {"line_end", fid.source_locator.line_end}}},
                       {"variant", to_string(m.mutant.variant)},
                       {"value", m.mutant.substituted_value},
                       {"results", std::move(results)}});
  }
  doc["mutants"] = std::move(mutants);
  const auto& mt = report.metrics;
  doc["metrics"] = {{"m_pt", mt.m_pt},
                    {"mutated_executed", mt.mutated_executed},
                    {"tested", mt.tested},
                    {"test_executed", mt.test_executed},
                    {"all_function_count", mt.all_function_count},
                    {"r_m_pt", mt.r_m_pt},
                    {"r_m_t", mt.r_m_t},
                    {"cc", mt.cc},
                    {"r_ct", mt.r_ct},
                    {"no_analyzable_functions", mt.no_analyzable_functions}};
  return doc;
}

inline std::string emit_json(const AnalysisReport& report) {
  return report_to_json(report).dump(2) + "\n";
}

inline AnalysisReport report_from_json(const nlohmann::json& doc) {
  AnalysisReport report;
  try {
    if (doc.at("format").get<std::string>() != kReportFormat)
      throw ConfigError("unsupported report format");
    const auto& md = doc.at("metadata");
    report.metadata.project = md.at("project").get<std::string>();
    report.metadata.test_type = parse_test_type(md.at("test_type").get<std::string>());
    report.metadata.timestamp = md.at("timestamp").get<std::string>();
    report.metadata.config_digest = md.at("config_digest").get<std::string>();
    report.metadata.adapter = md.at("adapter").get<std::string>();
    report.metadata.timeout_ms = md.at("timeout_ms").get<std::int64_t>();
    report.metadata.mode = md.at("mode").get<std::string>() == "FAST"
                               ? RunMode::kFast
                               : RunMode::kFullMatrix;
    for (const auto& jf : doc.at("functions")) {
      FunctionRecord r;
      auto& f = r.function;
      f.id.container = jf.at("container").get<std::string>();
      f.id.name = jf.at("name").get<std::string>();
      f.id.signature = jf.at("signature").get<std::string>();
      f.id.source_locator = {jf.at("file").get<std::string>(),
                             jf.at("line_begin").get<int>(),
                             jf.at("line_end").get<int>()};
      f.return_type.kind = parse_return_kind(jf.at("return_kind").get<std::string>());
      f.return_type.object_type = jf.at("object_type").get<std::string>();
      f.statement_count = jf.at("statement_count").get<int>();
      f.is_constructor = jf.at("is_constructor").get<bool>();
      f.is_compiler_generated = jf.at("is_compiler_generated").get<bool>();
      f.is_trivial_accessor = jf.at("is_trivial_accessor").get<bool>();
      if (!jf.at("exclusion").is_null())
        f.exclusion = parse_exclusion_reason(jf.at("exclusion").get<std::string>());
      r.verdict.kind = parse_verdict_kind(jf.at("verdict").get<std::string>());
      if (!jf.at("verdict_reason").is_null())
        r.verdict.reason = parse_exclusion_reason(jf.at("verdict_reason").get<std::string>());
      r.category = jf.at("category").get<std::string>();
      r.severity = parse_severity(jf.at("severity").get<std::string>());
      r.covering_tests = jf.at("covering_tests").get<std::size_t>();
      report.functions.push_back(std::move(r));
    }
    for (const auto& jm : doc.at("mutants")) {
      MutantRecord m;
      m.mutant.mutant_id = jm.at("id").get<std::string>();
      const auto& jf = jm.at("function");
      m.mutant.function.container = jf.at("container").get<std::string>();
      m.mutant.function.name = jf.at("name").get<std::string>();
      m.mutant.function.signature = jf.at("signature").get<std::string>();
      m.mutant.function.source_locator = {jf.at("file").get<std::string>(),
                                          jf.at("line_begin").get<int>(),
                                          jf.at("line_end").get<int>()};
      m.mutant.variant = parse_mutant_variant(jm.at("variant").get<std::string>());
      m.mutant.substituted_value = jm.at("value").get<std::string>();
      for (const auto& jr : jm.at("results"))
        m.results.emplace_back(jr.at("test").get<std::string>(),
                               parse_execution_verdict(jr.at("verdict").get<std::string>()));
      report.mutants.push_back(std::move(m));
    }
    const auto& mt = doc.at("metrics");
    report.metrics.m_pt = mt.at("m_pt").get<std::size_t>();
    report.metrics.mutated_executed = mt.at("mutated_executed").get<std::size_t>();
    report.metrics.tested = mt.at("tested").get<std::size_t>();
    report.metrics.test_executed = mt.at("test_executed").get<std::size_t>();
    report.metrics.all_function_count = mt.at("all_function_count").get<std::size_t>();
    report.metrics.r_m_pt = mt.at("r_m_pt").get<double>();
    report.metrics.r_m_t = mt.at("r_m_t").get<double>();
    report.metrics.cc = mt.at("cc").get<double>();
    report.metrics.r_ct = mt.at("r_ct").get<double>();
    report.metrics.no_analyzable_functions = mt.at("no_analyzable_functions").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed report: ") + e.what());
  }
  return report;
}

inline AnalysisReport parse_report(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("report is not valid JSON: ") + e.what());
  }
  return report_from_json(doc);
}

inline AnalysisReport load_report(const fs::path& path) {
  try {
    return parse_report(read_file(path));
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  } catch (const IoError& e) {
    throw ConfigError(e.what());
  }
}

// ---------------------------------------------------------------------------
// Text

// Overview table, one row per report: project, M_PT, r(M_PT), CC, r(CT).
inline std::string render_table(const std::vector<AnalysisReport>& reports) {
  std::vector<std::vector<std::string>> rows = {
      {"project", "M_PT", "r(M_PT)", "CC", "r(CT)"}};
  for (const auto& r : reports) {
    rows.push_back({r.metadata.project, std::to_string(r.metrics.m_pt),
                    format_percent(r.metrics.r_m_pt), format_percent(r.metrics.cc),
                    format_percent(r.metrics.r_ct)});
  }
  std::vector<std::size_t> width(5, 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  auto line = [&](const std::vector<std::string>& row) {
    std::string out;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += " | ";
      const std::string pad(width[c] - row[c].size(), ' ');
      out += c == 0 ? row[c] + pad : pad + row[c];
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out + "\n";
  };
  std::string out = line(rows[0]);
  for (std::size_t c = 0; c < width.size(); ++c) {
    if (c) out += "-+-";
    out += std::string(width[c], '-');
  }
  out += "\n";
  for (std::size_t i = 1; i < rows.size(); ++i) out += line(rows[i]);
  return out;
}

inline std::string render_report_text(const AnalysisReport& report) {
  std::ostringstream out;
  const auto& md = report.metadata;
  out << "pseudo-tested function analysis: " << md.project << " ("
      << to_lower(to_string(md.test_type)) << " tests)\n";
  out << "timestamp: " << md.timestamp << "\n";
  out << "config digest: " << md.config_digest << "\n";
  out << "adapter: " << md.adapter << ", mode " << to_string(md.mode)
      << ", timeout " << md.timeout_ms << " ms\n\n";
  out << render_table({report}) << "\n";

  std::size_t name_width = 0;
  std::size_t verdict_width = 0;
  for (const auto& r : report.functions) {
    name_width = std::max(name_width, r.function.id.key().size());
    verdict_width = std::max(verdict_width, r.verdict.to_string().size());
  }
  out << "functions (" << report.functions.size() << "):\n";
  for (const auto& r : report.functions) {
    const std::string verdict = r.verdict.to_string();
    const std::string key = r.function.id.key();
    out << "  " << verdict << std::string(verdict_width - verdict.size(), ' ') << "  "
        << key << std::string(name_width - key.size(), ' ') << "  " << r.category
        << " / " << to_string(r.severity) << "\n";
  }
  out << "\nseverity of pseudo-tested functions:\n";
  for (const auto& [severity, bin] : severity_histogram(report)) {
    out << "  " << to_string(severity) << ": " << bin.count << " ("
        << format_percent(bin.ratio) << ")\n";
  }
  out << "\n";
  if (report.metrics.no_analyzable_functions) {
    out << "WARNING: no analyzable functions; r(M_PT) is reported as 0.\n";
  }
  out << "note: " << kTestedCodeCaveat << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// CSV

inline std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// One row per function.
inline std::string emit_csv(const AnalysisReport& report) {
  std::string out =
      "function,container,name,signature,file,line_begin,line_end,return_kind,"
      "verdict,exclusion,category,severity,covering_tests\n";
  for (const auto& r : report.functions) {
    const auto& f = r.function;
    const std::vector<std::string> fields = {
        f.id.key(),
        f.id.container,
        f.id.name,
        f.id.signature,
        f.id.source_locator.file,
        std::to_string(f.id.source_locator.line_begin),
        std::to_string(f.id.source_locator.line_end),
        std::string(to_string(f.return_type.kind)),
        std::string(to_string(r.verdict.kind)),
        r.verdict.reason ? std::string(to_string(*r.verdict.reason)) : std::string(),
        r.category,
        std::string(to_string(r.severity)),
        std::to_string(r.covering_tests)};
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ',';
      out += csv_field(fields[i]);
    }
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// SQL

inline std::string sql_string(std::string_view text) {
  std::string out = "'";
  for (char c : text) {
    if (c == '\'') out += '\'';
    out += c;
  }
  return out + "'";
}

// Schema followed by one INSERT per run, function, (mutant, test) result and
// metric.
inline std::string emit_sql(const AnalysisReport& report) {
  const std::string project = sql_string(report.metadata.project);
  std::string out(kSqlSchema);
  const auto& md = report.metadata;
  out += "INSERT INTO analysis_run VALUES (" + project + ", " +
         sql_string(to_string(md.test_type)) + ", " + sql_string(md.timestamp) + ", " +
         sql_string(md.config_digest) + ", " + sql_string(md.adapter) + ", " +
         std::to_string(md.timeout_ms) + ", " + sql_string(to_string(md.mode)) + ");\n";
  for (const auto& r : report.functions) {
    const auto& f = r.function;
    out += "INSERT INTO function_result VALUES (" + project + ", " +
           sql_string(f.id.key()) + ", " + sql_string(f.id.container) + ", " +
           sql_string(f.id.name) + ", " + sql_string(f.id.signature) + ", " +
           sql_string(f.id.source_locator.file) + ", " +
           std::to_string(f.id.source_locator.line_begin) + ", " +
           std::to_string(f.id.source_locator.line_end) + ", " +
           sql_string(to_string(f.return_type.kind)) + ", " +
           (f.return_type.object_type.empty() ? std::string("NULL")
                                              : sql_string(f.return_type.object_type)) +
           ", " + std::to_string(f.statement_count) + ", " +
           sql_string(to_string(r.verdict.kind)) + ", " +
           (r.verdict.reason ? sql_string(to_string(*r.verdict.reason)) : std::string("NULL")) +
           ", " + sql_string(r.category) + ", " + sql_string(to_string(r.severity)) + ", " +
           std::to_string(r.covering_tests) + ");\n";
  }
  for (const auto& m : report.mutants) {
    for (const auto& [test, verdict] : m.results) {
      out += "INSERT INTO mutant_result VALUES (" + project + ", " +
             sql_string(m.mutant.mutant_id) + ", " + sql_string(m.mutant.function.key()) +
             ", " + sql_string(to_string(m.mutant.variant)) + ", " +
             sql_string(m.mutant.substituted_value) + ", " + sql_string(test) + ", " +
             sql_string(to_string(verdict)) + ");\n";
    }
  }
  const auto& mt = report.metrics;
  const std::vector<std::pair<std::string, std::string>> metrics = {
      {"m_pt", std::to_string(mt.m_pt)},
      {"mutated_executed", std::to_string(mt.mutated_executed)},
      {"tested", std::to_string(mt.tested)},
      {"test_executed", std::to_string(mt.test_executed)},
      {"all_function_count", std::to_string(mt.all_function_count)},
      {"r_m_pt", format_double(mt.r_m_pt)},
      {"r_m_t", format_double(mt.r_m_t)},
      {"cc", format_double(mt.cc)},
      {"r_ct", format_double(mt.r_ct)},
      {"no_analyzable_functions", mt.no_analyzable_functions ? "1" : "0"}};
  for (const auto& [name, value] : metrics) {
    out += "INSERT INTO project_metric VALUES (" + project + ", " + sql_string(name) +
           ", " + value + ");\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Plot data

struct PlotData {
  std::string boxplot;   // plots/boxplot.dat
  std::string severity;  // plots/severity.dat
};

// Tab-separated columns. Box statistics are r(M_PT) fractions per group;
// severity rows carry each project's pseudo-tested counts and shares.
inline PlotData emit_plot_data(const std::vector<GroupStatistics>& groups,
                               const std::vector<AnalysisReport>& reports) {
  PlotData data;
  data.boxplot = "# group\tn\tmin\tq1\tmedian\tq3\tmax\tmean\tstddev\n";
  for (const auto& g : groups) {
    data.boxplot += std::string(to_string(g.group)) + "\t" + std::to_string(g.n) + "\t" +
                    format_double(g.summary.min) + "\t" + format_double(g.summary.q1) +
                    "\t" + format_double(g.summary.median) + "\t" +
                    format_double(g.summary.q3) + "\t" + format_double(g.summary.max) +
                    "\t" + format_double(g.mean) + "\t" +
                    (g.stddev ? format_double(*g.stddev) : std::string("NA")) + "\n";
  }
  data.severity = "# project\tseverity\tcount\tratio\n";
  for (const auto& report : reports) {
    for (const auto& [severity, bin] : severity_histogram(report)) {
      data.severity += report.metadata.project + "\t" + std::string(to_string(severity)) +
                       "\t" + std::to_string(bin.count) + "\t" + format_double(bin.ratio) +
                       "\n";
    }
  }
  return data;
}

inline std::vector<GroupStatistics> group_reports(const std::vector<AnalysisReport>& reports) {
  std::vector<std::pair<ProjectMetrics, TestType>> projects;
  for (const auto& r : reports) projects.emplace_back(r.metrics, r.metadata.test_type);
  return aggregate_groups(projects);
}

// Writes report.{json,csv,sql,txt} and plots/ into `dir`.
inline void write_report_files(const fs::path& dir, const AnalysisReport& report) {
  write_file(dir / "report.json", emit_json(report));
  write_file(dir / "report.csv", emit_csv(report));
  write_file(dir / "report.sql", emit_sql(report));
  write_file(dir / "report.txt", render_report_text(report));
  const auto plots = emit_plot_data(group_reports({report}), {report});
  write_file(dir / "plots" / "boxplot.dat", plots.boxplot);
  write_file(dir / "plots" / "severity.dat", plots.severity);
}

inline std::string render_group_table(const std::vector<GroupStatistics>& groups) {
  std::ostringstream out;
  out << "group  | n  | mean r(M_PT) | stddev  | min    | q1     | median | q3     | max\n";
  out << "-------+----+--------------+---------+--------+--------+--------+--------+-------\n";
  auto pct = [](double v) { return format_percent(v); };
  for (const auto& g : groups) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-6s | %-2zu | %-12s | %-7s | %-6s | %-6s | %-6s | %-6s | %s\n",
                  std::string(to_string(g.group)).c_str(), g.n,
                  (format_double(std::round(g.mean * 10000.0) / 100.0) + "%").c_str(),
                  g.stddev ? (format_double(std::round(*g.stddev * 10000.0) / 100.0) + "%").c_str()
                           : "n/a",
                  pct(g.summary.min).c_str(), pct(g.summary.q1).c_str(),
                  pct(g.summary.median).c_str(), pct(g.summary.q3).c_str(),
                  pct(g.summary.max).c_str());
    out << buf;
  }
  return out.str();
}

}  // namespace pseudotest

#endif  // PSEUDOTEST_REPORT_HPP
