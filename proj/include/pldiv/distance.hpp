#pragma once

#include <Eigen/Core>
#include <map>
#include <string>
#include <string_view>

#include "pldiv/errors.hpp"
#include "pldiv/point_cloud.hpp"

namespace pldiv {

enum class Metric { euclidean, l1, cosine_distance };
enum class Kernel { rbf, laplacian, cosine_similarity };

Metric parse_metric(std::string_view name);
Kernel parse_kernel(std::string_view name);
const char* to_string(Metric metric);
const char* to_string(Kernel kernel);

// Symmetric nonnegative pairwise-distance matrix with exact zero diagonal.
// Construction always verifies the invariants; use validate_distance_matrix
// for tolerance-based repair of externally supplied matrices.
class DistanceMatrix {
 public:
  DistanceMatrix(Eigen::MatrixXd values, std::string metric_name);

  const Eigen::MatrixXd& values() const { return values_; }
  const std::string& metric_name() const { return metric_name_; }
  Eigen::Index size() const { return values_.rows(); }
  double operator()(Eigen::Index i, Eigen::Index j) const { return values_(i, j); }
  double diameter() const { return size() > 1 ? values_.maxCoeff() : 0.0; }

  // Rescales the metric by alpha > 0; invariants are preserved exactly.
  DistanceMatrix scaled(double alpha) const;

 private:
  Eigen::MatrixXd values_;
  std::string metric_name_;
};

// Symmetric similarity matrix; kernel builders guarantee a unit diagonal.
class SimilarityMatrix {
 public:
  SimilarityMatrix(Eigen::MatrixXd values, std::string kernel_name,
                   std::map<std::string, double> params = {});

  const Eigen::MatrixXd& values() const { return values_; }
  const std::string& kernel_name() const { return kernel_name_; }
  const std::map<std::string, double>& params() const { return params_; }
  Eigen::Index size() const { return values_.rows(); }

 private:
  Eigen::MatrixXd values_;
  std::string kernel_name_;
  std::map<std::string, double> params_;
};

// All pairwise distances of a cloud under the named metric. Entries are
// mirrored so the result is symmetric bit-for-bit.
DistanceMatrix pairwise_distances(const PointCloud& cloud, Metric metric);

// Kernel from raw points. rbf uses exp(-gamma * d2) with squared euclidean
// distances, laplacian uses exp(-gamma * d) with l1 distances,
// cosine_similarity uses normalized dot products.
SimilarityMatrix kernel_matrix(const PointCloud& cloud, Kernel kernel, double gamma);

// Kernel from a precomputed distance matrix. cosine_similarity is not
// derivable from distances alone and is rejected.
SimilarityMatrix kernel_matrix(const DistanceMatrix& dist, Kernel kernel, double gamma);

// Ingests a precomputed matrix: symmetrizes within 1e-9 absolute (by
// averaging), zeroes a diagonal within 1e-12, and rejects anything worse,
// naming the first offending index pair.
DistanceMatrix validate_distance_matrix(const Eigen::MatrixXd& values);

}  // namespace pldiv
