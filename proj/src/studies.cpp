#include "pldiv/studies.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "pldiv/landscape.hpp"
#include "pldiv/rng.hpp"
#include "pldiv/sparse_rips.hpp"
#include "pldiv/synthgen.hpp"

namespace pldiv {

const char* to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::pldiv: return "pldiv";
    case MetricKind::vendi: return "vendi";
    case MetricKind::dcscore: return "dcscore";
    case MetricKind::magarea: return "magarea";
  }
  return "?";
}

std::vector<MetricKind> parse_metrics(const std::string& list) {
  if (list == "all") {
    return {MetricKind::pldiv, MetricKind::vendi, MetricKind::dcscore,
            MetricKind::magarea};
  }
  std::vector<MetricKind> out;
  std::stringstream ss(list);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    if (token == "pldiv") {
      out.push_back(MetricKind::pldiv);
    } else if (token == "vendi") {
      out.push_back(MetricKind::vendi);
    } else if (token == "dcscore") {
      out.push_back(MetricKind::dcscore);
    } else if (token == "magarea") {
      out.push_back(MetricKind::magarea);
    } else {
      throw ParameterError("unknown metric '" + token + "'");
    }
  }
  if (out.empty()) {
    throw ParameterError("no metrics requested");
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

double median_of(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return 0.5 * (values[mid - 1] + values[mid]);
}

bool wants(const StudyOptions& opt, MetricKind kind) {
  return std::find(opt.metrics.begin(), opt.metrics.end(), kind) != opt.metrics.end();
}

// Magnitude areas are only comparable over a shared scale interval, so a
// study family integrates every cloud up to the family's largest
// convergence scale for that seed.
double shared_magnitude_scale(const StudyOptions& opt,
                              const std::vector<const PointCloud*>& family) {
  if (!wants(opt, MetricKind::magarea)) return 0.0;
  double t_cut = 0.0;
  for (const PointCloud* cloud : family) {
    const DistanceMatrix dist = pairwise_distances(*cloud, Metric::euclidean);
    t_cut = std::max(t_cut, magnitude_convergence_scale(dist, opt.t0));
  }
  return t_cut;
}

// Evaluates the requested metrics for one cloud; the euclidean distance
// matrix is computed once, the rbf kernel only when a spectral metric
// asks for it.
void eval_metrics(const PointCloud& cloud, const std::string& case_id,
                  std::uint64_t seed, const StudyOptions& opt,
                  std::vector<StudyRow>& rows, double magarea_t_cut = 0.0) {
  const DistanceMatrix dist = pairwise_distances(cloud, Metric::euclidean);
  std::optional<SimilarityMatrix> kernel;
  for (MetricKind kind : opt.metrics) {
    double value = 0.0;
    switch (kind) {
      case MetricKind::pldiv:
        value = pldiv_dense(dist);
        break;
      case MetricKind::vendi:
      case MetricKind::dcscore:
        if (!kernel) kernel = kernel_matrix(dist, Kernel::rbf, opt.gamma);
        value = kind == MetricKind::vendi ? vendi_score(*kernel).value
                                          : dcscore(*kernel, opt.tau).value;
        break;
      case MetricKind::magarea:
        value = magarea(dist, opt.t0, opt.mag_grid, magarea_t_cut).value;
        break;
    }
    rows.push_back({case_id, to_string(kind), value, seed});
  }
}

std::vector<double> case_medians(const std::vector<StudyRow>& rows,
                                 const std::vector<std::string>& cases,
                                 const std::string& metric) {
  std::vector<double> medians;
  for (const auto& c : cases) {
    std::vector<double> vals;
    for (const auto& row : rows) {
      if (row.case_id == c && row.metric == metric) vals.push_back(row.value);
    }
    medians.push_back(median_of(std::move(vals)));
  }
  return medians;
}

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i - 1] > v[i])) return false;
  }
  return true;
}

}  // namespace

StudyResult run_toy_study(const StudyOptions& opt) {
  StudyResult result;
  result.study = "toy";
  const std::vector<std::string> cases = {"D1", "D2", "D3", "D4"};
  for (int s = 0; s < opt.seeds; ++s) {
    const std::uint64_t seed = opt.base_seed + static_cast<std::uint64_t>(s);
    std::vector<PointCloud> clouds;
    for (int c = 0; c < 4; ++c) {
      ToyDataset which = static_cast<ToyDataset>(c);
      if (opt.mutate_toy) {
        if (which == ToyDataset::d1) which = ToyDataset::d4;
        else if (which == ToyDataset::d4) which = ToyDataset::d1;
      }
      clouds.push_back(toy_dataset(which, seed));
    }
    std::vector<const PointCloud*> family;
    for (const auto& c : clouds) family.push_back(&c);
    const double t_cut = shared_magnitude_scale(opt, family);
    for (int c = 0; c < 4; ++c) {
      eval_metrics(clouds[static_cast<std::size_t>(c)],
                   cases[static_cast<std::size_t>(c)], seed, opt, result.rows, t_cut);
    }
  }

  for (MetricKind kind : opt.metrics) {
    const std::string metric = to_string(kind);
    const std::vector<double> med = case_medians(result.rows, cases, metric);
    const bool hard = kind == MetricKind::pldiv;
    result.verdicts.push_back(
        {metric + ": D1 > D2 > D3 > D4", strictly_decreasing(med), !hard});
    if (kind == MetricKind::pldiv) {
      result.verdicts.push_back(
          {"pldiv: median(D4) < 0.25 * median(D1)", med[3] < 0.25 * med[0], false});
    }
  }
  return result;
}

StudyResult run_longtail_study(const StudyOptions& opt) {
  StudyResult result;
  result.study = "longtail";
  const std::vector<int> outliers = {0, 20, 40, 60, 80, 100};
  std::vector<std::string> cases;
  for (int k : outliers) cases.push_back("outliers=" + std::to_string(k));

  for (int s = 0; s < opt.seeds; ++s) {
    const std::uint64_t seed = opt.base_seed + static_cast<std::uint64_t>(s);
    std::vector<PointCloud> clouds;
    for (int k : outliers) clouds.push_back(longtail_dataset(k, seed));
    std::vector<const PointCloud*> family;
    for (const auto& c : clouds) family.push_back(&c);
    const double t_cut = shared_magnitude_scale(opt, family);
    for (std::size_t c = 0; c < outliers.size(); ++c) {
      eval_metrics(clouds[c], cases[c], seed, opt, result.rows, t_cut);
    }
  }

  for (MetricKind kind : opt.metrics) {
    const std::string metric = to_string(kind);
    std::vector<double> med = case_medians(result.rows, cases, metric);
    std::reverse(med.begin(), med.end());
    const bool hard = kind == MetricKind::pldiv;
    result.verdicts.push_back({metric + ": strictly increasing in outliers",
                               strictly_decreasing(med), !hard});
  }
  return result;
}

StudyResult run_pairs_study(const StudyOptions& opt) {
  StudyResult result;
  result.study = "pairs";
  const auto& names = pair_dataset_names();

  for (int s = 0; s < opt.seeds; ++s) {
    const std::uint64_t seed = opt.base_seed + static_cast<std::uint64_t>(s);
    for (const auto& name : names) {
      const LabeledCloudPair pair = pair_dataset(name, seed);
      const double t_cut =
          shared_magnitude_scale(opt, {&pair.cloud_a, &pair.cloud_b});
      eval_metrics(pair.cloud_a, name + ":A", seed, opt, result.rows, t_cut);
      eval_metrics(pair.cloud_b, name + ":B", seed, opt, result.rows, t_cut);
    }
  }

  for (MetricKind kind : opt.metrics) {
    const std::string metric = to_string(kind);
    int consistent = 0;
    for (const auto& name : names) {
      const std::vector<double> med =
          case_medians(result.rows, {name + ":A", name + ":B"}, metric);
      if (med[1] > med[0]) ++consistent;
    }
    const bool hard = kind == MetricKind::pldiv;
    result.verdicts.push_back(
        {metric + ": B > A in " + std::to_string(consistent) + "/8 pairs",
         consistent == 8, !hard});
  }
  return result;
}

PointCloud bench_cloud(int n, std::uint64_t seed) {
  // Four-component Gaussian mixture over the [0,2]^2 window.
  Rng root(seed);
  Rng centers_stream = root.split(1);
  std::vector<std::pair<double, double>> centers;
  for (int c = 0; c < 4; ++c) {
    Rng r = centers_stream.split(static_cast<std::uint64_t>(c));
    centers.emplace_back(r.uniform(0.3, 1.7), r.uniform(0.3, 1.7));
  }
  Rng pts_stream = root.split(2);
  Eigen::MatrixXd pts(n, 2);
  for (int i = 0; i < n; ++i) {
    Rng r = pts_stream.split(static_cast<std::uint64_t>(i));
    const auto& [cx, cy] = centers[static_cast<std::size_t>(r.below(4))];
    pts(i, 0) = cx + 0.25 * r.normal();
    pts(i, 1) = cy + 0.25 * r.normal();
  }
  return PointCloud(std::move(pts));
}

StudyResult run_bench(const BenchOptions& opt) {
  StudyResult result;
  result.study = "bench";

  struct Timing {
    int n = 0;
    double dense_ms = 0.0;
    double sparse10_ms = -1.0;
  };
  std::vector<Timing> timings;
  double vendi_ms_at = -1.0;
  double dense_ms_at_vendi_n = -1.0;
  bool err095_ok = true, err095_present = false;
  bool err10_ok = true, err10_present = false;

  for (int n : opt.sizes) {
    const std::string case_id = "n=" + std::to_string(n);
    Timing timing;
    timing.n = n;

    auto t = Clock::now();
    const PointCloud cloud = bench_cloud(n, opt.seed);
    const DistanceMatrix dist = pairwise_distances(cloud, Metric::euclidean);
    result.rows.push_back({case_id, "prep:distances", 0.0, opt.seed, ms_since(t)});

    t = Clock::now();
    const GreedyPermutation perm = greedy_permutation(dist);
    result.rows.push_back({case_id, "prep:greedy_perm", 0.0, opt.seed, ms_since(t)});

    double dense_value = 0.0;
    double dense_ms = std::numeric_limits<double>::infinity();
    for (int rep = 0; rep < opt.reps; ++rep) {
      t = Clock::now();
      dense_value = pldiv_dense(dist);
      dense_ms = std::min(dense_ms, ms_since(t));
    }
    timing.dense_ms = dense_ms;
    result.rows.push_back({case_id, "pldiv_dense", dense_value, opt.seed, dense_ms});

    for (double eps : opt.epsilons) {
      double sparse_value = 0.0;
      double sparse_ms = std::numeric_limits<double>::infinity();
      for (int rep = 0; rep < opt.reps; ++rep) {
        t = Clock::now();
        const SparseGraph graph = sparse_rips_graph(dist, {eps}, perm);
        sparse_value = pldiv_closed_form(h0_sparse(graph));
        sparse_ms = std::min(sparse_ms, ms_since(t));
      }
      std::ostringstream label;
      label << "pldiv_sparse(eps=" << eps << ")";
      result.rows.push_back({case_id, label.str(), sparse_value, opt.seed, sparse_ms});
      const double rel_err = std::abs(sparse_value - dense_value) / dense_value;
      result.rows.push_back({case_id, label.str() + ":rel_err", rel_err, opt.seed});
      if (eps == 0.95) {
        err095_present = true;
        err095_ok = err095_ok && rel_err <= 1e-3;
      }
      if (eps == 10.0) {
        err10_present = true;
        err10_ok = err10_ok && rel_err <= 5e-2;
        timing.sparse10_ms = sparse_ms;
      }
    }

    t = Clock::now();
    const SimilarityMatrix kernel = kernel_matrix(dist, Kernel::rbf, 1.0);
    result.rows.push_back({case_id, "prep:rbf_kernel", 0.0, opt.seed, ms_since(t)});

    double dc_ms = std::numeric_limits<double>::infinity();
    double dc_value = 0.0;
    for (int rep = 0; rep < opt.reps; ++rep) {
      t = Clock::now();
      dc_value = dcscore(kernel, 1.0).value;
      dc_ms = std::min(dc_ms, ms_since(t));
    }
    result.rows.push_back({case_id, "dcscore", dc_value, opt.seed, dc_ms});

    if (n <= opt.vendi_max_n) {
      t = Clock::now();
      const double vendi = vendi_score(kernel).value;
      const double vendi_ms = ms_since(t);
      result.rows.push_back({case_id, "vendi", vendi, opt.seed, vendi_ms});
      // Sizes ascend, so this keeps the largest size where vendi ran.
      vendi_ms_at = vendi_ms;
      dense_ms_at_vendi_n = dense_ms;
    }
    timings.push_back(timing);
  }

  // Log-log growth exponents between consecutive sizes.
  for (std::size_t i = 1; i < timings.size(); ++i) {
    const auto& a = timings[i - 1];
    const auto& b = timings[i];
    const std::string span =
        std::to_string(a.n) + "->" + std::to_string(b.n);
    const double ratio = std::log(static_cast<double>(b.n) / a.n);
    result.rows.push_back({"growth", "dense:" + span,
                           std::log(b.dense_ms / a.dense_ms) / ratio, opt.seed});
    if (a.sparse10_ms > 0.0 && b.sparse10_ms > 0.0) {
      result.rows.push_back({"growth", "sparse(eps=10):" + span,
                             std::log(b.sparse10_ms / a.sparse10_ms) / ratio,
                             opt.seed});
    }
  }

  if (err095_present) {
    result.verdicts.push_back(
        {"pldiv sparse(eps=0.95) within 0.1% of dense at all sizes", err095_ok, false});
  }
  if (err10_present) {
    result.verdicts.push_back(
        {"pldiv sparse(eps=10) within 5% of dense at all sizes", err10_ok, false});
  }
  if (!timings.empty() && timings.back().sparse10_ms > 0.0) {
    const auto& lo = timings.front();
    const auto& hi = timings.back();
    result.verdicts.push_back(
        {"pldiv sparse(eps=10) faster than dense at n=" + std::to_string(hi.n),
         hi.sparse10_ms < hi.dense_ms, false});
    if (lo.sparse10_ms > 0.0 && hi.n > lo.n) {
      const double speedup_lo = lo.dense_ms / lo.sparse10_ms;
      const double speedup_hi = hi.dense_ms / hi.sparse10_ms;
      result.verdicts.push_back(
          {"pldiv dense/sparse speedup grows from n=" + std::to_string(lo.n) +
               " to n=" + std::to_string(hi.n),
           speedup_hi > speedup_lo, false});
    }
  }
  if (vendi_ms_at >= 0.0) {
    result.verdicts.push_back({"vendi slower than dense pldiv at its largest size",
                               vendi_ms_at > dense_ms_at_vendi_n, false});
  }
  return result;
}

}  // namespace pldiv
