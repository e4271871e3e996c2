#pragma once

#include <Eigen/Core>
#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "pldiv/baselines.hpp"

namespace pldiv {

inline constexpr const char* kToolVersion = "0.1.0";

// The CLI's output record for a single dataset.
struct DiversityReport {
  std::string dataset_id;
  Eigen::Index n = 0;
  std::vector<DiversityValue> metrics;
  std::map<std::string, double> timings_ms;
  std::map<std::string, std::string> params_echo;
  std::string tool_version = kToolVersion;
};

// JSON with stable key order; see README for the schema.
std::string report_to_json(const DiversityReport& report);

void write_report_csv(const std::filesystem::path& path, const DiversityReport& report);

struct StudyRow {
  std::string case_id;
  std::string metric;
  double value = 0.0;
  std::uint64_t seed = 0;
  double time_ms = -1.0;  // < 0 when not timed
};

struct StudyVerdict {
  std::string claim;
  bool pass = false;
  bool informational = false;  // never affects the exit status
};

struct StudyResult {
  std::string study;
  std::vector<StudyRow> rows;
  std::vector<StudyVerdict> verdicts;

  // The gate for the process exit status: every non-informational verdict
  // must hold.
  bool all_hard_verdicts_pass() const;
};

// Median table plus verdict lines, in the layout of the originating
// experiment.
void print_study(std::ostream& os, const StudyResult& result);

void write_study_csv(const std::filesystem::path& path, const StudyResult& result);

}  // namespace pldiv
