#pragma once

#include <cstdint>
#include <vector>

#include "pldiv/report.hpp"

namespace pldiv {

enum class MetricKind { pldiv, vendi, dcscore, magarea };

const char* to_string(MetricKind kind);
// Accepts a comma-separated list or "all".
std::vector<MetricKind> parse_metrics(const std::string& list);

struct StudyOptions {
  int seeds = 10;
  std::uint64_t base_seed = 0;
  std::vector<MetricKind> metrics = {MetricKind::pldiv};
  double gamma = 1.0;  // rbf bandwidth for vendi/dcscore
  double tau = 1.0;    // dcscore temperature
  double t0 = 0.01;    // magarea grid start
  int mag_grid = 64;
  // Test hook: swaps the generators behind the most and least diverse toy
  // cases so the ordering claim must fail.
  bool mutate_toy = false;
};

// Four toy clouds, median metrics over seeds, ordering verdicts
// (medians must fall as D1 > D2 > D3 > D4, with a 4x gap between the
// extremes for the landscape metric).
StudyResult run_toy_study(const StudyOptions& opt);

// Gaussian core plus {0,20,...,100} uniform outliers; the landscape
// metric's median must increase strictly with the outlier count.
StudyResult run_longtail_study(const StudyOptions& opt);

// Eight A/B scenario pairs; counts how often each metric ranks B above A
// on medians. 8/8 is required for the landscape metric, the baseline
// counts are informational.
StudyResult run_pairs_study(const StudyOptions& opt);

struct BenchOptions {
  std::vector<int> sizes = {500, 1000, 2000, 4000};
  std::vector<double> epsilons = {0.95, 10.0};
  std::uint64_t seed = 0;
  int reps = 3;            // best-of-k timing for the cheap paths
  int vendi_max_n = 2000;  // eigendecomposition gets slow fast
};

// Times the metric paths on Gaussian-mixture clouds from shared
// preparation (distance matrix, similarity kernel, farthest-point
// ordering are built once per size and reported as prep rows). Sparse
// timings cover graph assembly, MST, and the closed-form sum for one
// epsilon. Also reports sparse/dense relative value errors and log-log
// growth exponents between consecutive sizes.
StudyResult run_bench(const BenchOptions& opt);

// Gaussian-mixture cloud used by the bench harness.
PointCloud bench_cloud(int n, std::uint64_t seed);

}  // namespace pldiv
