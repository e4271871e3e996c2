#pragma once

#include <Eigen/Core>

#include "pldiv/errors.hpp"

namespace pldiv {

// A finite point set in R^d, one row per point. Coordinates are always
// 64-bit floats and must be finite.
class PointCloud {
 public:
  explicit PointCloud(Eigen::MatrixXd points) : points_(std::move(points)) {
    if (points_.rows() < 1 || points_.cols() < 1) {
      throw InputError("point cloud must have n >= 1 points and d >= 1 dimensions");
    }
    if (!points_.allFinite()) {
      throw InputError("point cloud contains non-finite coordinates");
    }
  }

  Eigen::Index size() const { return points_.rows(); }
  Eigen::Index dim() const { return points_.cols(); }
  const Eigen::MatrixXd& points() const { return points_; }

 private:
  Eigen::MatrixXd points_;
};

}  // namespace pldiv
