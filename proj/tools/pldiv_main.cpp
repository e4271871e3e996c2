#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pldiv/csv.hpp"
#include "pldiv/landscape.hpp"
#include "pldiv/sparse_rips.hpp"
#include "pldiv/studies.hpp"
#include "pldiv/synthgen.hpp"

namespace {

using pldiv::DistanceMatrix;
using pldiv::PointCloud;
namespace fs = std::filesystem;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct ComputeArgs {
  std::string input;
  std::string input_kind = "points";
  std::string metrics = "pldiv";
  std::string distance = "euclidean";
  std::optional<std::string> kernel;
  double gamma = 1.0;
  double tau = 1.0;
  std::optional<double> epsilon;
  double t0 = 0.01;
  double t_cut = 0.0;
  int mag_grid = 64;
  std::uint64_t seed = 0;
  int vendi_max_n = 5000;
  bool allow_large_vendi = false;
  std::string out;
};

// Loads either raw points or a precomputed distance matrix; returns the
// distance matrix used by the geometric metrics plus the cloud when one
// is available (spectral kernels may need it).
std::pair<DistanceMatrix, std::optional<PointCloud>> load_distances(
    const ComputeArgs& args) {
  if (args.input_kind == "points") {
    PointCloud cloud = pldiv::load_points_csv(args.input);
    DistanceMatrix dist =
        pldiv::pairwise_distances(cloud, pldiv::parse_metric(args.distance));
    return {std::move(dist), std::move(cloud)};
  }
  if (args.input_kind == "distances") {
    return {pldiv::validate_distance_matrix(pldiv::load_matrix_csv(args.input)),
            std::nullopt};
  }
  throw pldiv::ParameterError("--input-kind must be 'points' or 'distances'");
}

int cmd_compute(const ComputeArgs& args) {
  pldiv::DiversityReport report;
  report.dataset_id = fs::path(args.input).filename().string();

  auto t = Clock::now();
  auto [dist, cloud] = load_distances(args);
  report.timings_ms["prep"] = ms_since(t);
  report.n = dist.size();

  const auto metrics = pldiv::parse_metrics(args.metrics);
  std::optional<pldiv::SimilarityMatrix> kernel;
  auto similarity = [&]() -> const pldiv::SimilarityMatrix& {
    if (!kernel) {
      if (cloud) {
        const pldiv::Kernel k =
            pldiv::parse_kernel(args.kernel.value_or("rbf"));
        kernel = pldiv::kernel_matrix(*cloud, k, args.gamma);
      } else {
        if (!args.kernel) {
          throw pldiv::ParameterError(
              "similarity metrics on a distance-matrix input need --kernel");
        }
        kernel = pldiv::kernel_matrix(dist, pldiv::parse_kernel(*args.kernel),
                                      args.gamma);
      }
    }
    return *kernel;
  };

  for (pldiv::MetricKind kind : metrics) {
    const std::string name = pldiv::to_string(kind);
    try {
      t = Clock::now();
      pldiv::DiversityValue value;
      switch (kind) {
        case pldiv::MetricKind::pldiv:
          if (args.epsilon) {
            value = {"pldiv", pldiv::pldiv_sparse(dist, {*args.epsilon}),
                     {{"epsilon", *args.epsilon}}};
          } else {
            value = {"pldiv", pldiv::pldiv_dense(dist), {}};
          }
          break;
        case pldiv::MetricKind::vendi: {
          if (dist.size() > args.vendi_max_n && !args.allow_large_vendi) {
            throw pldiv::ParameterError(
                "vendi at n > " + std::to_string(args.vendi_max_n) +
                " is disabled by default (cubic eigendecomposition); pass "
                "--allow-large-vendi to override");
          }
          value = pldiv::vendi_score(similarity());
          break;
        }
        case pldiv::MetricKind::dcscore:
          value = pldiv::dcscore(similarity(), args.tau);
          break;
        case pldiv::MetricKind::magarea:
          value = pldiv::magarea(dist, args.t0, args.mag_grid, args.t_cut);
          break;
      }
      report.timings_ms[name] = ms_since(t);
      report.metrics.push_back(std::move(value));
    } catch (const pldiv::Error& e) {
      throw pldiv::Error(name + ": " + e.what());
    }
  }

  report.params_echo = {{"input", args.input},
                        {"input_kind", args.input_kind},
                        {"metrics", args.metrics},
                        {"distance", args.distance},
                        {"kernel", args.kernel.value_or("")},
                        {"gamma", pldiv::format_double(args.gamma)},
                        {"tau", pldiv::format_double(args.tau)},
                        {"epsilon", args.epsilon ? pldiv::format_double(*args.epsilon) : ""},
                        {"t0", pldiv::format_double(args.t0)},
                        {"seed", std::to_string(args.seed)}};

  std::cout << pldiv::report_to_json(report) << std::endl;
  if (!args.out.empty()) pldiv::write_report_csv(args.out, report);
  return 0;
}

struct SynthArgs {
  std::string generator;
  std::string pair_name;
  int n_outliers = 20;
  std::uint64_t seed = 0;
  std::string out;
};

void write_sidecar(const fs::path& csv_path, const std::string& generator,
                   std::uint64_t seed, Eigen::Index n,
                   const std::string& extra_key = "", double extra_value = 0.0) {
  nlohmann::ordered_json j;
  j["generator"] = generator;
  j["seed"] = seed;
  j["n"] = n;
  if (!extra_key.empty()) j[extra_key] = extra_value;
  fs::path sidecar = csv_path;
  sidecar.replace_extension(".json");
  std::ofstream out(sidecar);
  out << j.dump(2) << "\n";
}

int cmd_synth(const SynthArgs& args) {
  if (args.out.empty()) {
    throw pldiv::ParameterError("synth requires --out");
  }
  const fs::path out(args.out);
  if (args.generator == "pair") {
    const pldiv::LabeledCloudPair pair = pldiv::pair_dataset(args.pair_name, args.seed);
    auto suffixed = [&](const char* suffix) {
      fs::path p = out;
      p.replace_filename(p.stem().string() + suffix + p.extension().string());
      return p;
    };
    const fs::path path_a = suffixed("_A");
    const fs::path path_b = suffixed("_B");
    std::ostringstream comment;
    comment << "pair " << pair.name << " seed " << args.seed;
    pldiv::write_points_csv(path_a, pair.cloud_a, comment.str() + " cloud A");
    pldiv::write_points_csv(path_b, pair.cloud_b, comment.str() + " cloud B");
    write_sidecar(path_a, "pair:" + pair.name + ":A", args.seed, pair.cloud_a.size());
    write_sidecar(path_b, "pair:" + pair.name + ":B", args.seed, pair.cloud_b.size());
    std::cout << "wrote " << path_a.string() << " and " << path_b.string() << "\n";
    return 0;
  }
  PointCloud cloud = [&] {
    if (args.generator == "longtail") {
      return pldiv::longtail_dataset(args.n_outliers, args.seed);
    }
    return pldiv::toy_dataset(pldiv::parse_toy_dataset(args.generator), args.seed);
  }();
  std::ostringstream comment;
  comment << args.generator << " seed " << args.seed;
  pldiv::write_points_csv(out, cloud, comment.str());
  if (args.generator == "longtail") {
    write_sidecar(out, args.generator, args.seed, cloud.size(), "n_outliers",
                  args.n_outliers);
  } else {
    write_sidecar(out, args.generator, args.seed, cloud.size());
  }
  std::cout << "wrote " << out.string() << "\n";
  return 0;
}

struct StudyArgs {
  std::string study;
  int seeds = 10;
  std::uint64_t base_seed = 0;
  std::string metrics = "pldiv";
  double gamma = 1.0;
  double tau = 1.0;
  double t0 = 0.01;
  std::string mutate;
  std::string out;
};

int cmd_study(const StudyArgs& args) {
  pldiv::StudyOptions opt;
  opt.seeds = args.seeds;
  opt.base_seed = args.base_seed;
  opt.metrics = pldiv::parse_metrics(args.metrics);
  opt.gamma = args.gamma;
  opt.tau = args.tau;
  opt.t0 = args.t0;
  if (!args.mutate.empty()) {
    if (args.mutate != "swap-extremes") {
      throw pldiv::ParameterError("unknown mutation '" + args.mutate + "'");
    }
    opt.mutate_toy = true;
  }

  pldiv::StudyResult result;
  if (args.study == "toy") {
    result = pldiv::run_toy_study(opt);
  } else if (args.study == "longtail") {
    result = pldiv::run_longtail_study(opt);
  } else if (args.study == "pairs") {
    result = pldiv::run_pairs_study(opt);
  } else {
    throw pldiv::ParameterError("unknown study '" + args.study +
                                "' (expected toy, longtail, or pairs)");
  }
  pldiv::print_study(std::cout, result);
  if (!args.out.empty()) pldiv::write_study_csv(args.out, result);
  return result.all_hard_verdicts_pass() ? 0 : 1;
}

struct BenchArgs {
  std::vector<int> sizes = {500, 1000, 2000, 4000};
  std::vector<double> epsilons = {0.95, 10.0};
  std::uint64_t seed = 0;
  int reps = 3;
  std::string out;
};

int cmd_bench(const BenchArgs& args) {
  pldiv::BenchOptions opt;
  opt.sizes = args.sizes;
  opt.epsilons = args.epsilons;
  opt.seed = args.seed;
  opt.reps = args.reps;
  const pldiv::StudyResult result = pldiv::run_bench(opt);

  std::cout << "bench (seed " << args.seed << ", best of " << args.reps << ")\n";
  std::cout << "  timings are per-path: prep rows carry the shared distance/kernel/"
               "ordering costs\n";
  for (const auto& row : result.rows) {
    std::cout << "  " << row.case_id << "  " << row.metric;
    if (row.time_ms >= 0.0) std::cout << "  " << row.time_ms << " ms";
    if (row.metric.find("rel_err") != std::string::npos ||
        row.case_id == "growth") {
      std::cout << "  value " << row.value;
    } else if (row.metric.rfind("prep:", 0) != 0) {
      std::cout << "  value " << row.value;
    }
    std::cout << "\n";
  }
  for (const auto& v : result.verdicts) {
    std::cout << "verdict: " << v.claim << ": " << (v.pass ? "pass" : "FAIL") << "\n";
  }
  if (!args.out.empty()) pldiv::write_study_csv(args.out, result);
  return result.all_hard_verdicts_pass() ? 0 : 1;
}

struct LandscapeArgs {
  std::string input;
  std::string input_kind = "points";
  std::string distance = "euclidean";
  int t_steps = 256;
  std::string out;
};

int cmd_landscape(const LandscapeArgs& args) {
  if (args.out.empty()) {
    throw pldiv::ParameterError("landscape requires --out");
  }
  ComputeArgs load;
  load.input = args.input;
  load.input_kind = args.input_kind;
  load.distance = args.distance;
  auto [dist, cloud] = load_distances(load);

  const pldiv::PersistenceDiagram diagram = pldiv::h0_dense(dist);
  const pldiv::PersistenceLandscape landscape = pldiv::build_landscape(diagram);

  double t_max = 0.0;
  for (const auto& p : diagram.pairs()) t_max = std::max(t_max, p.death);
  if (t_max <= 0.0) t_max = 1.0;  // degenerate diagrams still get a grid row

  Eigen::MatrixXd grid(1, args.t_steps);
  for (int s = 0; s < args.t_steps; ++s) {
    grid(0, s) = t_max * static_cast<double>(s) / (args.t_steps - 1);
  }
  Eigen::MatrixXd body(0, args.t_steps);
  if (!landscape.levels().empty()) {
    body = pldiv::sample_landscape(landscape, 0.0, t_max, args.t_steps);
  }
  Eigen::MatrixXd out(body.rows() + 1, args.t_steps);
  out.row(0) = grid.row(0);
  if (body.rows() > 0) out.bottomRows(body.rows()) = body;
  pldiv::write_matrix_csv(args.out, out);

  fs::path diagram_path(args.out);
  diagram_path.replace_filename(diagram_path.stem().string() + "_diagram" +
                                diagram_path.extension().string());
  Eigen::MatrixXd pairs(static_cast<Eigen::Index>(diagram.size()), 2);
  for (Eigen::Index i = 0; i < pairs.rows(); ++i) {
    pairs(i, 0) = diagram.pairs()[static_cast<std::size_t>(i)].birth;
    pairs(i, 1) = diagram.pairs()[static_cast<std::size_t>(i)].death;
  }
  pldiv::write_matrix_csv(diagram_path, pairs);
  std::cout << "wrote " << args.out << " and " << diagram_path.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometry-aware dataset diversity from H0 persistence landscapes"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Compute diversity metrics for one dataset");
  c->add_option("--input", compute.input, "points or distances CSV")->required();
  c->add_option("--input-kind", compute.input_kind, "points | distances");
  c->add_option("--metrics", compute.metrics,
                "comma-separated subset of pldiv,vendi,dcscore,magarea or 'all'");
  c->add_option("--distance", compute.distance, "euclidean | l1 | cosine_distance");
  c->add_option("--kernel", compute.kernel, "rbf | laplacian | cosine_similarity");
  c->add_option("--gamma", compute.gamma, "kernel bandwidth (default 1.0)");
  c->add_option("--tau", compute.tau, "dcscore temperature (default 1.0)");
  c->add_option("--epsilon", compute.epsilon,
                "sparse Rips tolerance; absent means the dense path");
  c->add_option("--t0", compute.t0, "magnitude grid start (default 0.01)");
  c->add_option("--t-cut", compute.t_cut,
                "fixed magnitude integration end; 0 searches for the 0.95 n "
                "convergence scale (areas are cross-dataset comparable only "
                "with a shared value)");
  c->add_option("--mag-grid", compute.mag_grid, "magnitude grid points per doubling");
  c->add_option("--seed", compute.seed, "echoed into the report");
  c->add_flag("--allow-large-vendi", compute.allow_large_vendi,
              "lift the n <= 5000 vendi guard");
  c->add_option("--out", compute.out, "also write a metric,value,time_ms CSV");

  SynthArgs synth;
  auto* s = app.add_subcommand("synth", "Generate a synthetic dataset CSV");
  s->add_option("generator", synth.generator, "D1 | D2 | D3 | D4 | longtail | pair")
      ->required();
  s->add_option("pair_name", synth.pair_name, "pair scenario name (with 'pair')");
  s->add_option("--outliers", synth.n_outliers, "outlier count for longtail");
  s->add_option("--seed", synth.seed, "generator seed");
  s->add_option("--out", synth.out, "output CSV path")->required();

  StudyArgs study;
  auto* st = app.add_subcommand("study", "Reproduce a synthetic study with verdicts");
  st->add_option("study", study.study, "toy | longtail | pairs")->required();
  st->add_option("--seeds", study.seeds, "number of seeds (default 10)");
  st->add_option("--base-seed", study.base_seed, "first seed value");
  st->add_option("--metrics", study.metrics, "metrics to evaluate (default pldiv)");
  st->add_option("--gamma", study.gamma, "rbf bandwidth");
  st->add_option("--tau", study.tau, "dcscore temperature");
  st->add_option("--t0", study.t0, "magnitude grid start");
  st->add_option("--mutate", study.mutate, "test hook")->group("");
  st->add_option("--out", study.out, "write per-seed rows as CSV");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Time the metric paths at several sizes");
  b->add_option("--sizes", bench.sizes, "cloud sizes")->delimiter(',');
  b->add_option("--epsilons", bench.epsilons, "sparse tolerances")->delimiter(',');
  b->add_option("--seed", bench.seed, "cloud seed");
  b->add_option("--reps", bench.reps, "timing repetitions (best kept)");
  b->add_option("--out", bench.out, "write rows as CSV");

  LandscapeArgs landscape;
  auto* l = app.add_subcommand("landscape", "Export sampled landscape levels as CSV");
  l->add_option("--input", landscape.input, "points or distances CSV")->required();
  l->add_option("--input-kind", landscape.input_kind, "points | distances");
  l->add_option("--distance", landscape.distance, "metric for points input");
  l->add_option("--t-steps", landscape.t_steps, "grid resolution (default 256)");
  l->add_option("--out", landscape.out, "output CSV path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c) return cmd_compute(compute);
    if (*s) return cmd_synth(synth);
    if (*st) return cmd_study(study);
    if (*b) return cmd_bench(bench);
    if (*l) return cmd_landscape(landscape);
  } catch (const pldiv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
