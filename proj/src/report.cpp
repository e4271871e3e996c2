#include "pldiv/report.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pldiv/csv.hpp"
#include "pldiv/errors.hpp"

namespace pldiv {

std::string report_to_json(const DiversityReport& report) {
  nlohmann::ordered_json j;
  j["dataset_id"] = report.dataset_id;
  j["n"] = report.n;
  j["metrics"] = nlohmann::ordered_json::array();
  for (const auto& m : report.metrics) {
    nlohmann::ordered_json entry;
    entry["metric"] = m.metric;
    entry["value"] = m.value;
    entry["params"] = m.params;
    j["metrics"].push_back(std::move(entry));
  }
  j["timings_ms"] = report.timings_ms;
  j["params_echo"] = report.params_echo;
  j["tool_version"] = report.tool_version;
  return j.dump(2);
}

void write_report_csv(const std::filesystem::path& path, const DiversityReport& report) {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot write '" + path.string() + "'");
  }
  out << "metric,value,time_ms\n";
  for (const auto& m : report.metrics) {
    const auto it = report.timings_ms.find(m.metric);
    out << m.metric << ',' << format_double(m.value) << ','
        << (it != report.timings_ms.end() ? format_double(it->second) : "") << '\n';
  }
}

bool StudyResult::all_hard_verdicts_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const StudyVerdict& v) { return v.informational || v.pass; });
}

namespace {

std::vector<std::string> ordered_unique_cases(const StudyResult& result) {
  std::vector<std::string> cases;
  for (const auto& row : result.rows) {
    if (std::find(cases.begin(), cases.end(), row.case_id) == cases.end()) {
      cases.push_back(row.case_id);
    }
  }
  return cases;
}

std::vector<std::string> ordered_unique_metrics(const StudyResult& result) {
  std::vector<std::string> metrics;
  for (const auto& row : result.rows) {
    if (std::find(metrics.begin(), metrics.end(), row.metric) == metrics.end()) {
      metrics.push_back(row.metric);
    }
  }
  return metrics;
}

double median_of(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return 0.5 * (values[mid - 1] + values[mid]);
}

}  // namespace

void print_study(std::ostream& os, const StudyResult& result) {
  const auto cases = ordered_unique_cases(result);
  const auto metrics = ordered_unique_metrics(result);

  std::set<std::uint64_t> seeds;
  for (const auto& row : result.rows) seeds.insert(row.seed);
  os << result.study << " study (" << seeds.size() << " seed"
     << (seeds.size() == 1 ? "" : "s") << ", medians)\n";

  std::size_t case_w = 4;
  for (const auto& c : cases) case_w = std::max(case_w, c.size());

  os << std::left << std::setw(static_cast<int>(case_w) + 2) << "case";
  for (const auto& m : metrics) os << std::right << std::setw(14) << m;
  os << '\n';
  for (const auto& c : cases) {
    os << std::left << std::setw(static_cast<int>(case_w) + 2) << c;
    for (const auto& m : metrics) {
      std::vector<double> vals;
      for (const auto& row : result.rows) {
        if (row.case_id == c && row.metric == m) vals.push_back(row.value);
      }
      if (vals.empty()) {
        os << std::right << std::setw(14) << "-";
      } else {
        os << std::right << std::setw(14) << std::setprecision(5) << std::fixed
           << median_of(vals) << std::defaultfloat;
      }
    }
    os << '\n';
  }
  for (const auto& v : result.verdicts) {
    os << "verdict: " << v.claim << ": " << (v.pass ? "pass" : "FAIL")
       << (v.informational ? " (informational)" : "") << '\n';
  }
}

void write_study_csv(const std::filesystem::path& path, const StudyResult& result) {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot write '" + path.string() + "'");
  }
  out << "case,metric,seed,value,time_ms\n";
  for (const auto& row : result.rows) {
    out << row.case_id << ',' << row.metric << ',' << row.seed << ','
        << format_double(row.value) << ','
        << (row.time_ms >= 0.0 ? format_double(row.time_ms) : "") << '\n';
  }
}

}  // namespace pldiv
