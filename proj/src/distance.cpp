#include "pldiv/distance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pldiv {

namespace {

constexpr double kSymmetryTol = 1e-9;
constexpr double kDiagonalTol = 1e-12;

std::string index_pair(Eigen::Index i, Eigen::Index j) {
  std::ostringstream os;
  os << "(" << i << ", " << j << ")";
  return os.str();
}

void check_distance_invariants(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) {
    throw InputError("distance matrix must be square");
  }
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const double v = m(i, j);
      if (!std::isfinite(v)) {
        throw InputError("distance matrix has non-finite entry at " + index_pair(i, j));
      }
      if (v < 0.0) {
        throw InputError("distance matrix has negative entry at " + index_pair(i, j));
      }
      if (i == j && v != 0.0) {
        throw InputError("distance matrix has nonzero diagonal at " + index_pair(i, j));
      }
      if (m(i, j) != m(j, i)) {
        throw InputError("distance matrix is asymmetric at " + index_pair(i, j));
      }
    }
  }
}

}  // namespace

Metric parse_metric(std::string_view name) {
  if (name == "euclidean") return Metric::euclidean;
  if (name == "l1") return Metric::l1;
  if (name == "cosine_distance" || name == "cosine") return Metric::cosine_distance;
  throw ParameterError("unknown metric '" + std::string(name) + "'");
}

Kernel parse_kernel(std::string_view name) {
  if (name == "rbf") return Kernel::rbf;
  if (name == "laplacian") return Kernel::laplacian;
  if (name == "cosine_similarity" || name == "cosine") return Kernel::cosine_similarity;
  throw ParameterError("unknown kernel '" + std::string(name) + "'");
}

const char* to_string(Metric metric) {
  switch (metric) {
    case Metric::euclidean: return "euclidean";
    case Metric::l1: return "l1";
    case Metric::cosine_distance: return "cosine_distance";
  }
  return "?";
}

const char* to_string(Kernel kernel) {
  switch (kernel) {
    case Kernel::rbf: return "rbf";
    case Kernel::laplacian: return "laplacian";
    case Kernel::cosine_similarity: return "cosine_similarity";
  }
  return "?";
}

DistanceMatrix::DistanceMatrix(Eigen::MatrixXd values, std::string metric_name)
    : values_(std::move(values)), metric_name_(std::move(metric_name)) {
  check_distance_invariants(values_);
}

DistanceMatrix DistanceMatrix::scaled(double alpha) const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw ParameterError("scale factor must be positive and finite");
  }
  return DistanceMatrix(values_ * alpha, metric_name_);
}

DistanceMatrix pairwise_distances(const PointCloud& cloud, Metric metric) {
  const Eigen::MatrixXd& pts = cloud.points();
  const Eigen::Index n = pts.rows();
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);

  Eigen::VectorXd norms;
  if (metric == Metric::cosine_distance) {
    norms = pts.rowwise().norm();
    for (Eigen::Index i = 0; i < n; ++i) {
      if (norms[i] == 0.0) {
        throw InputError("cosine distance undefined for zero-norm point at row " +
                         std::to_string(i));
      }
    }
  }

  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      double v = 0.0;
      switch (metric) {
        case Metric::euclidean:
          v = (pts.row(i) - pts.row(j)).norm();
          break;
        case Metric::l1:
          v = (pts.row(i) - pts.row(j)).cwiseAbs().sum();
          break;
        case Metric::cosine_distance:
          v = 1.0 - pts.row(i).dot(pts.row(j)) / (norms[i] * norms[j]);
          // Rounding can push identical directions a hair below zero.
          v = std::max(v, 0.0);
          break;
      }
      d(i, j) = v;
      d(j, i) = v;
    }
  }
  return DistanceMatrix(std::move(d), to_string(metric));
}

namespace {

SimilarityMatrix exp_kernel(const Eigen::MatrixXd& dist, Kernel kernel, double gamma) {
  const Eigen::Index n = dist.rows();
  Eigen::MatrixXd k(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    k(i, i) = 1.0;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double d = dist(i, j);
      const double v = kernel == Kernel::rbf ? std::exp(-gamma * d * d)
                                             : std::exp(-gamma * d);
      k(i, j) = v;
      k(j, i) = v;
    }
  }
  return SimilarityMatrix(std::move(k), to_string(kernel), {{"gamma", gamma}});
}

}  // namespace

SimilarityMatrix kernel_matrix(const PointCloud& cloud, Kernel kernel, double gamma) {
  if (kernel == Kernel::cosine_similarity) {
    const Eigen::MatrixXd& pts = cloud.points();
    const Eigen::Index n = pts.rows();
    Eigen::VectorXd norms = pts.rowwise().norm();
    for (Eigen::Index i = 0; i < n; ++i) {
      if (norms[i] == 0.0) {
        throw InputError("cosine similarity undefined for zero-norm point at row " +
                         std::to_string(i));
      }
    }
    Eigen::MatrixXd k(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      k(i, i) = 1.0;
      for (Eigen::Index j = i + 1; j < n; ++j) {
        double v = pts.row(i).dot(pts.row(j)) / (norms[i] * norms[j]);
        v = std::clamp(v, -1.0, 1.0);
        k(i, j) = v;
        k(j, i) = v;
      }
    }
    return SimilarityMatrix(std::move(k), to_string(kernel));
  }
  if (!(gamma > 0.0)) {
    throw ParameterError("kernel bandwidth gamma must be > 0");
  }
  const Metric metric = kernel == Kernel::rbf ? Metric::euclidean : Metric::l1;
  return exp_kernel(pairwise_distances(cloud, metric).values(), kernel, gamma);
}

SimilarityMatrix kernel_matrix(const DistanceMatrix& dist, Kernel kernel, double gamma) {
  if (kernel == Kernel::cosine_similarity) {
    throw ParameterError("cosine similarity requires raw points, not a distance matrix");
  }
  if (!(gamma > 0.0)) {
    throw ParameterError("kernel bandwidth gamma must be > 0");
  }
  return exp_kernel(dist.values(), kernel, gamma);
}

SimilarityMatrix::SimilarityMatrix(Eigen::MatrixXd values, std::string kernel_name,
                                   std::map<std::string, double> params)
    : values_(std::move(values)),
      kernel_name_(std::move(kernel_name)),
      params_(std::move(params)) {
  if (values_.rows() != values_.cols()) {
    throw InputError("similarity matrix must be square");
  }
  if (!values_.allFinite()) {
    throw InputError("similarity matrix has non-finite entries");
  }
  for (Eigen::Index j = 0; j < values_.cols(); ++j) {
    for (Eigen::Index i = j + 1; i < values_.rows(); ++i) {
      if (values_(i, j) != values_(j, i)) {
        throw InputError("similarity matrix is asymmetric at " + index_pair(i, j));
      }
    }
  }
}

DistanceMatrix validate_distance_matrix(const Eigen::MatrixXd& values) {
  if (values.rows() != values.cols()) {
    throw ValidationError("matrix is not square: " + std::to_string(values.rows()) +
                          " rows, " + std::to_string(values.cols()) + " columns");
  }
  const Eigen::Index n = values.rows();
  Eigen::MatrixXd repaired(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double diag = values(i, i);
    if (!std::isfinite(diag)) {
      throw ValidationError("non-finite entry at " + index_pair(i, i));
    }
    if (std::abs(diag) > kDiagonalTol) {
      throw ValidationError("nonzero diagonal at " + index_pair(i, i) + ": " +
                            std::to_string(diag));
    }
    repaired(i, i) = 0.0;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double a = values(i, j);
      const double b = values(j, i);
      if (!std::isfinite(a) || !std::isfinite(b)) {
        throw ValidationError("non-finite entry at " + index_pair(i, j));
      }
      if (std::abs(a - b) > kSymmetryTol) {
        throw ValidationError("asymmetric beyond tolerance at " + index_pair(i, j) +
                              ": " + std::to_string(a) + " vs " + std::to_string(b));
      }
      const double v = 0.5 * (a + b);
      if (v < 0.0) {
        throw ValidationError("negative entry at " + index_pair(i, j) + ": " +
                              std::to_string(v));
      }
      repaired(i, j) = v;
      repaired(j, i) = v;
    }
  }
  return DistanceMatrix(std::move(repaired), "precomputed");
}

}  // namespace pldiv
