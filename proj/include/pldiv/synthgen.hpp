#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pldiv/point_cloud.hpp"

namespace pldiv {

// Seeded 2-D dataset generators. All clouds hold exactly 200 points and
// fit within [-1, 3]^2 (Gaussian tails are resampled into the box), so
// metric values are comparable across scenarios. Identical seeds yield
// bit-identical clouds; every point draws from its own counter-based
// substream, so prefix subsets are shared across related scenarios
// (common random numbers).
enum class ToyDataset { d1, d2, d3, d4 };

ToyDataset parse_toy_dataset(const std::string& name);
const char* to_string(ToyDataset which);

// D1: 200 uniform points in [0,2]^2 (Poisson-process surrogate).
// D2: spatial Hawkes branching process, base intensity 91 over the
//     window, branching ratio 0.6, Gaussian offspring displacement
//     sigma 0.1, subsampled to exactly 200 in-window points.
// D3: two Gaussian clusters at (0.5,0.5) and (1.5,1.5), covariance
//     0.02 I, 100 points each.
// D4: one Gaussian cluster at (0.5,0.5), covariance 0.02 I, 200 points.
PointCloud toy_dataset(ToyDataset which, std::uint64_t seed);

// (200 - n_outliers) points from the D4 cluster plus n_outliers uniform
// points in [0,2]^2. n_outliers = 0 reproduces D4 bit-for-bit. Values
// outside {0, 20, 40, 60, 80, 100} are accepted with a warning on stderr.
PointCloud longtail_dataset(int n_outliers, std::uint64_t seed);

struct LabeledCloudPair {
  std::string name;
  PointCloud cloud_a;  // less varied geometry
  PointCloud cloud_b;  // more varied geometry (expected higher diversity)
};

// The eight A/B scenario pairs. Geometric constants are fixed defaults
// documented in the generator source; cloud B of each pair carries the
// richer geometry.
const std::vector<std::string>& pair_dataset_names();
LabeledCloudPair pair_dataset(const std::string& name, std::uint64_t seed);

}  // namespace pldiv
