#include "pldiv/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <iostream>
#include <numeric>

#include "pldiv/rng.hpp"

namespace pldiv {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kCloudSize = 200;

// All Gaussian-tailed samples are kept inside this box.
constexpr double kBoxLo = -1.0;
constexpr double kBoxHi = 3.0;

// Substream roles; per-point streams are split(role) then split(index),
// so a prefix of any generated family is seed-stable.
enum Role : std::uint64_t {
  kUniform = 1,
  kCluster = 2,
  kCluster2 = 3,
  kOutlier = 4,
  kHawkesCount = 5,
  kHawkesParent = 6,
  kHawkesOffspring = 7,
  kHawkesThin = 8,
  kRing = 9,
  kRing2 = 10,
  kDisk = 11,
  kBridge = 12,
  kCurve = 13,
  kCenterFill = 14,
  kHierarchy = 15,
};

bool in_box(double x, double y) {
  return x >= kBoxLo && x <= kBoxHi && y >= kBoxLo && y <= kBoxHi;
}

Eigen::RowVector2d gaussian_point(Rng rng, double cx, double cy, double sigma) {
  for (;;) {
    const double x = cx + sigma * rng.normal();
    const double y = cy + sigma * rng.normal();
    if (in_box(x, y)) return {x, y};
  }
}

Eigen::RowVector2d uniform_point(Rng rng, double lo = 0.0, double hi = 2.0) {
  return {rng.uniform(lo, hi), rng.uniform(lo, hi)};
}

// Noisy circle rim: uniform angle, radius R + radial noise.
Eigen::RowVector2d ring_point(Rng rng, double cx, double cy, double radius,
                              double radial_sigma) {
  for (;;) {
    const double theta = rng.uniform(0.0, 2.0 * kPi);
    const double r = radius + radial_sigma * rng.normal();
    const double x = cx + r * std::cos(theta);
    const double y = cy + r * std::sin(theta);
    if (in_box(x, y)) return {x, y};
  }
}

using Appender = std::vector<Eigen::RowVector2d>;

PointCloud to_cloud(const Appender& pts) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(pts.size()), 2);
  for (std::size_t i = 0; i < pts.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = pts[i];
  return PointCloud(std::move(m));
}

void append_gaussians(Appender& out, Rng root, Role role, int count, double cx, double cy,
                      double sigma, int index_base = 0) {
  Rng stream = root.split(role);
  for (int i = 0; i < count; ++i) {
    out.push_back(gaussian_point(stream.split(static_cast<std::uint64_t>(index_base + i)),
                                 cx, cy, sigma));
  }
}

void append_ring(Appender& out, Rng root, Role role, int count, double cx, double cy,
                 double radius, double radial_sigma, int index_base = 0) {
  Rng stream = root.split(role);
  for (int i = 0; i < count; ++i) {
    out.push_back(ring_point(stream.split(static_cast<std::uint64_t>(index_base + i)), cx,
                             cy, radius, radial_sigma));
  }
}

// D4-style cluster; sigma^2 = 0.02 per coordinate.
const double kClusterSigma = std::sqrt(0.02);

PointCloud hawkes_cloud(std::uint64_t seed) {
  // Base intensity 91 over the [0,2]^2 window and branching ratio 0.6
  // give ~910 events; a uniform subsample keeps exactly 200.
  constexpr double kParentMean = 91.0 * 4.0;
  constexpr double kBranching = 0.6;
  constexpr double kOffspringSigma = 0.1;
  constexpr std::size_t kEventCap = 20000;

  Rng root(seed);
  std::vector<Eigen::RowVector2d> events;
  std::deque<std::pair<Eigen::RowVector2d, std::uint64_t>> frontier;
  std::uint64_t next_id = 0;

  const int n_parents = root.split(kHawkesCount).poisson(kParentMean);
  Rng parent_stream = root.split(kHawkesParent);
  for (int p = 0; p < n_parents; ++p) {
    const Eigen::RowVector2d pos =
        uniform_point(parent_stream.split(static_cast<std::uint64_t>(p)));
    events.push_back(pos);
    frontier.emplace_back(pos, next_id++);
  }

  Rng offspring_stream = root.split(kHawkesOffspring);
  while (!frontier.empty() && events.size() < kEventCap) {
    auto [pos, id] = frontier.front();
    frontier.pop_front();
    Rng r = offspring_stream.split(id);
    const int children = r.poisson(kBranching);
    for (int c = 0; c < children && events.size() < kEventCap; ++c) {
      const Eigen::RowVector2d child{pos[0] + kOffspringSigma * r.normal(),
                                     pos[1] + kOffspringSigma * r.normal()};
      events.push_back(child);
      frontier.emplace_back(child, next_id++);
    }
  }

  std::vector<Eigen::RowVector2d> inside;
  for (const auto& e : events) {
    if (e[0] >= 0.0 && e[0] <= 2.0 && e[1] >= 0.0 && e[1] <= 2.0) inside.push_back(e);
  }
  // Pad in the (practically unreachable) case of a tiny realization.
  Rng pad_stream = root.split(kUniform);
  for (std::uint64_t i = 0; inside.size() < kCloudSize; ++i) {
    inside.push_back(uniform_point(pad_stream.split(i)));
  }

  // Partial Fisher-Yates; selected indices are re-sorted so the output
  // order is independent of the shuffle path.
  Rng thin = root.split(kHawkesThin);
  std::vector<std::size_t> idx(inside.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (int i = 0; i < kCloudSize; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(thin.below(idx.size() - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(kCloudSize);
  std::sort(idx.begin(), idx.end());

  Appender pts;
  pts.reserve(kCloudSize);
  for (std::size_t i : idx) pts.push_back(inside[i]);
  return to_cloud(pts);
}

}  // namespace

ToyDataset parse_toy_dataset(const std::string& name) {
  if (name == "D1" || name == "d1") return ToyDataset::d1;
  if (name == "D2" || name == "d2") return ToyDataset::d2;
  if (name == "D3" || name == "d3") return ToyDataset::d3;
  if (name == "D4" || name == "d4") return ToyDataset::d4;
  throw ParameterError("unknown toy dataset '" + name + "' (expected D1..D4)");
}

const char* to_string(ToyDataset which) {
  switch (which) {
    case ToyDataset::d1: return "D1";
    case ToyDataset::d2: return "D2";
    case ToyDataset::d3: return "D3";
    case ToyDataset::d4: return "D4";
  }
  return "?";
}

PointCloud toy_dataset(ToyDataset which, std::uint64_t seed) {
  Rng root(seed);
  Appender pts;
  pts.reserve(kCloudSize);
  switch (which) {
    case ToyDataset::d1: {
      Rng stream = root.split(kUniform);
      for (int i = 0; i < kCloudSize; ++i) {
        pts.push_back(uniform_point(stream.split(static_cast<std::uint64_t>(i))));
      }
      break;
    }
    case ToyDataset::d2:
      return hawkes_cloud(seed);
    case ToyDataset::d3:
      append_gaussians(pts, root, kCluster, 100, 0.5, 0.5, kClusterSigma);
      append_gaussians(pts, root, kCluster2, 100, 1.5, 1.5, kClusterSigma);
      break;
    case ToyDataset::d4:
      append_gaussians(pts, root, kCluster, kCloudSize, 0.5, 0.5, kClusterSigma);
      break;
  }
  return to_cloud(pts);
}

PointCloud longtail_dataset(int n_outliers, std::uint64_t seed) {
  if (n_outliers >= kCloudSize) {
    throw ParameterError("n_outliers must be < 200");
  }
  if (n_outliers < 0) {
    throw ParameterError("n_outliers must be >= 0");
  }
  if (n_outliers % 20 != 0 || n_outliers > 100) {
    std::cerr << "warning: n_outliers = " << n_outliers
              << " is outside the studied set {20, 40, 60, 80, 100}\n";
  }
  Rng root(seed);
  Appender pts;
  pts.reserve(kCloudSize);
  append_gaussians(pts, root, kCluster, kCloudSize - n_outliers, 0.5, 0.5, kClusterSigma);
  Rng stream = root.split(kOutlier);
  for (int i = 0; i < n_outliers; ++i) {
    pts.push_back(uniform_point(stream.split(static_cast<std::uint64_t>(i))));
  }
  return to_cloud(pts);
}

namespace {

// Concrete parameterizations of the eight scenario pairs. Cloud B always
// carries the geometry expected to score higher.
LabeledCloudPair make_pair(const std::string& name, std::uint64_t seed) {
  Rng root(seed);
  Appender a, b;
  a.reserve(kCloudSize);
  b.reserve(kCloudSize);

  if (name == "ring_vs_disk") {
    // A: noisy rim of radius 0.8; B: uniform-by-area filled disk.
    append_ring(a, root, kRing, kCloudSize, 1.0, 1.0, 0.8, 0.05);
    Rng stream = root.split(kDisk);
    for (int i = 0; i < kCloudSize; ++i) {
      Rng r = stream.split(static_cast<std::uint64_t>(i));
      const double theta = r.uniform(0.0, 2.0 * kPi);
      const double rad = 0.8 * std::sqrt(r.next_double());
      b.push_back({1.0 + rad * std::cos(theta), 1.0 + rad * std::sin(theta)});
    }
  } else if (name == "bridge_vs_two_clusters") {
    // Two sigma-0.1 blobs one unit apart; A adds a 20-point bridge.
    append_gaussians(a, root, kCluster, 90, 0.5, 1.0, 0.1);
    append_gaussians(a, root, kCluster2, 90, 1.5, 1.0, 0.1);
    Rng bridge = root.split(kBridge);
    for (int i = 0; i < 20; ++i) {
      Rng r = bridge.split(static_cast<std::uint64_t>(i));
      a.push_back({r.uniform(0.5, 1.5), 1.0 + 0.02 * r.normal()});
    }
    append_gaussians(b, root, kCluster, 100, 0.5, 1.0, 0.1);
    append_gaussians(b, root, kCluster2, 100, 1.5, 1.0, 0.1);
  } else if (name == "nested_vs_gaussian") {
    // A: tight core inside a rim; B: one broad Gaussian of similar extent.
    append_gaussians(a, root, kCluster, 100, 1.0, 1.0, 0.1);
    append_ring(a, root, kRing, 100, 1.0, 1.0, 0.8, 0.04);
    append_gaussians(b, root, kCluster2, kCloudSize, 1.0, 1.0, 0.55);
  } else if (name == "crescent_vs_blob") {
    // A: half-ring manifold; B: isotropic Gaussian.
    Rng stream = root.split(kCurve);
    for (int i = 0; i < kCloudSize; ++i) {
      Rng r = stream.split(static_cast<std::uint64_t>(i));
      const double theta = r.uniform(0.0, kPi);
      const double rad = 0.8 + 0.04 * r.normal();
      a.push_back({1.0 + rad * std::cos(theta), 0.6 + rad * std::sin(theta)});
    }
    append_gaussians(b, root, kCluster, kCloudSize, 1.0, 1.0, 0.35);
  } else if (name == "two_rings_vs_random") {
    // A: concentric noisy rims; B: uniform square (D1 geometry).
    append_ring(a, root, kRing, 100, 1.0, 1.0, 0.45, 0.04);
    append_ring(a, root, kRing2, 100, 1.0, 1.0, 0.9, 0.04);
    Rng stream = root.split(kUniform);
    for (int i = 0; i < kCloudSize; ++i) {
      b.push_back(uniform_point(stream.split(static_cast<std::uint64_t>(i))));
    }
  } else if (name == "snake_vs_blob") {
    // A: noisy sinusoid across the window; B: isotropic Gaussian.
    Rng stream = root.split(kCurve);
    for (int i = 0; i < kCloudSize; ++i) {
      Rng r = stream.split(static_cast<std::uint64_t>(i));
      const double x = r.uniform(0.0, 2.0);
      a.push_back({x, 1.0 + 0.4 * std::sin(1.5 * kPi * x) + 0.03 * r.normal()});
    }
    append_gaussians(b, root, kCluster, kCloudSize, 1.0, 1.0, 0.35);
  } else if (name == "hole_vs_filled") {
    // A: broad Gaussian restricted to the 0.45 <= r <= 1.25 annulus
    // (tail-trimmed so the comparison is not dominated by stray far
    // points). B: the same annulus (shared prefix) with the cavity
    // filled by 20 points spread over the void disk.
    Rng stream = root.split(kCluster);
    auto annulus_point = [&](int i) {
      Rng r = stream.split(static_cast<std::uint64_t>(i));
      for (;;) {
        const double x = 1.0 + 0.55 * r.normal();
        const double y = 1.0 + 0.55 * r.normal();
        const double rad = std::hypot(x - 1.0, y - 1.0);
        if (rad >= 0.45 && rad <= 1.25) return Eigen::RowVector2d{x, y};
      }
    };
    for (int i = 0; i < kCloudSize; ++i) a.push_back(annulus_point(i));
    for (int i = 0; i < 180; ++i) b.push_back(annulus_point(i));
    Rng fill = root.split(kCenterFill);
    for (int i = 0; i < 20; ++i) {
      Rng r = fill.split(static_cast<std::uint64_t>(i));
      const double theta = r.uniform(0.0, 2.0 * kPi);
      const double rad = 0.40 * std::sqrt(r.next_double());
      b.push_back({1.0 + rad * std::cos(theta), 1.0 + rad * std::sin(theta)});
    }
  } else if (name == "hierarchical_vs_gaussian") {
    // A: 4 top-level groups, 2 subclusters each, 25 points per
    // subcluster; B: one broad Gaussian.
    Rng stream = root.split(kHierarchy);
    int index = 0;
    for (int top = 0; top < 4; ++top) {
      const double top_angle = kPi * (0.25 + 0.5 * top);
      const double tx = 1.0 + 0.45 * std::cos(top_angle);
      const double ty = 1.0 + 0.45 * std::sin(top_angle);
      for (int sub = 0; sub < 2; ++sub) {
        const double sub_angle = top_angle + kPi * (0.35 + sub);
        const double sx = tx + 0.14 * std::cos(sub_angle);
        const double sy = ty + 0.14 * std::sin(sub_angle);
        for (int i = 0; i < 25; ++i, ++index) {
          a.push_back(gaussian_point(stream.split(static_cast<std::uint64_t>(index)), sx,
                                     sy, 0.04));
        }
      }
    }
    append_gaussians(b, root, kCluster, kCloudSize, 1.0, 1.0, 0.55);
  } else {
    throw ParameterError("unknown pair dataset '" + name + "'");
  }

  return {name, to_cloud(a), to_cloud(b)};
}

}  // namespace

const std::vector<std::string>& pair_dataset_names() {
  static const std::vector<std::string> names = {
      "ring_vs_disk",      "bridge_vs_two_clusters", "nested_vs_gaussian",
      "crescent_vs_blob",  "two_rings_vs_random",    "snake_vs_blob",
      "hole_vs_filled",    "hierarchical_vs_gaussian"};
  return names;
}

LabeledCloudPair pair_dataset(const std::string& name, std::uint64_t seed) {
  return make_pair(name, seed);
}

}  // namespace pldiv
