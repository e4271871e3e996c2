#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "pldiv/distance.hpp"

using namespace pldiv;

namespace {

PointCloud make_cloud(std::initializer_list<std::initializer_list<double>> rows) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return PointCloud(std::move(m));
}

}  // namespace

TEST_CASE("pairwise distances match the textbook values") {
  const auto pyth = pairwise_distances(make_cloud({{0, 0}, {3, 4}}), Metric::euclidean);
  CHECK(pyth(0, 1) == doctest::Approx(5.0));
  CHECK(pyth(1, 0) == pyth(0, 1));
  CHECK(pyth(0, 0) == 0.0);

  const auto cos = pairwise_distances(make_cloud({{1, 0}, {0, 1}}),
                                      Metric::cosine_distance);
  CHECK(cos(0, 1) == doctest::Approx(1.0));

  const auto l1 = pairwise_distances(make_cloud({{0, 0}, {1, 2}}), Metric::l1);
  CHECK(l1(0, 1) == doctest::Approx(3.0));
}

TEST_CASE("cosine distance rejects a zero-norm point") {
  CHECK_THROWS_AS(
      pairwise_distances(make_cloud({{0, 0}, {1, 1}}), Metric::cosine_distance),
      InputError);
}

TEST_CASE("point cloud rejects non-finite and empty input") {
  Eigen::MatrixXd bad(1, 2);
  bad << 1.0, std::nan("");
  CHECK_THROWS_AS(PointCloud{bad}, InputError);
  CHECK_THROWS_AS(PointCloud{Eigen::MatrixXd(0, 2)}, InputError);
}

TEST_CASE("distance matrix invariants hold on random clouds") {
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(12));
    const int d = 1 + static_cast<int>(rng.below(4));
    const PointCloud cloud = testing::random_cloud(rng, n, d);
    for (Metric metric : {Metric::euclidean, Metric::l1}) {
      const DistanceMatrix dist = pairwise_distances(cloud, metric);
      for (int i = 0; i < n; ++i) {
        CHECK(dist(i, i) == 0.0);
        for (int j = 0; j < n; ++j) {
          CHECK(dist(i, j) == dist(j, i));
          CHECK(dist(i, j) >= 0.0);
        }
      }
      // Triangle inequality on all triples.
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          for (int k = 0; k < n; ++k) {
            CHECK(dist(i, j) <= dist(i, k) + dist(k, j) + 1e-9);
          }
        }
      }
    }
  }
}

TEST_CASE("scaling a cloud scales euclidean and l1 distances linearly") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const PointCloud cloud = testing::random_cloud(rng, 6, 3);
    const double alpha = rng.uniform(0.1, 5.0);
    const PointCloud scaled{Eigen::MatrixXd(cloud.points() * alpha)};
    for (Metric metric : {Metric::euclidean, Metric::l1}) {
      const auto base = pairwise_distances(cloud, metric);
      const auto big = pairwise_distances(scaled, metric);
      for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
          CHECK(big(i, j) == doctest::Approx(alpha * base(i, j)).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("rbf and laplacian kernels decrease with distance") {
  const auto cloud = make_cloud({{0.0}, {1.0}, {2.5}, {4.0}});
  for (Kernel kernel : {Kernel::rbf, Kernel::laplacian}) {
    const auto k = kernel_matrix(cloud, kernel, 0.7);
    const auto d = pairwise_distances(
        cloud, kernel == Kernel::rbf ? Metric::euclidean : Metric::l1);
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) {
        for (int c = 0; c < 4; ++c) {
          for (int e = c + 1; e < 4; ++e) {
            if (d(a, b) < d(c, e)) CHECK(k.values()(a, b) > k.values()(c, e));
          }
        }
      }
    }
    CHECK(k.values().diagonal().isConstant(1.0));
  }
}

TEST_CASE("kernel values match direct evaluation") {
  // Two points at distance 1: rbf with gamma = 1 gives exp(-1).
  const auto k = kernel_matrix(make_cloud({{0.0}, {1.0}}), Kernel::rbf, 1.0);
  CHECK(k.values()(0, 1) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(k.values()(0, 0) == 1.0);

  const auto ones = kernel_matrix(make_cloud({{1, 0}, {1, 0}}),
                                  Kernel::cosine_similarity, 1.0);
  CHECK(ones.values().isConstant(1.0));
}

TEST_CASE("kernel parameter validation") {
  const auto cloud = make_cloud({{0.0}, {1.0}});
  CHECK_THROWS_AS(kernel_matrix(cloud, Kernel::rbf, 0.0), ParameterError);
  CHECK_THROWS_AS(kernel_matrix(cloud, Kernel::laplacian, -1.0), ParameterError);
  const auto dist = pairwise_distances(cloud, Metric::euclidean);
  CHECK_THROWS_AS(kernel_matrix(dist, Kernel::cosine_similarity, 1.0), ParameterError);
}

TEST_CASE("validate_distance_matrix repairs and rejects") {
  Eigen::MatrixXd ok(2, 2);
  ok << 0, 1, 1, 0;
  const auto accepted = validate_distance_matrix(ok);
  CHECK(accepted.metric_name() == "precomputed");
  CHECK(accepted(0, 1) == 1.0);

  // Last-digit asymmetry is averaged away.
  Eigen::MatrixXd near(2, 2);
  near << 0, 1.0 + 1e-12, 1.0, 0;
  const auto repaired = validate_distance_matrix(near);
  CHECK(repaired(0, 1) == repaired(1, 0));

  Eigen::MatrixXd asym(2, 2);
  asym << 0, 1, 2, 0;
  CHECK_THROWS_WITH_AS(validate_distance_matrix(asym),
                       doctest::Contains("asymmetric"), ValidationError);

  Eigen::MatrixXd neg(2, 2);
  neg << 0, -1, -1, 0;
  CHECK_THROWS_WITH_AS(validate_distance_matrix(neg), doctest::Contains("negative"),
                       ValidationError);

  Eigen::MatrixXd diag(2, 2);
  diag << 0.5, 1, 1, 0;
  CHECK_THROWS_WITH_AS(validate_distance_matrix(diag),
                       doctest::Contains("diagonal"), ValidationError);

  CHECK_THROWS_AS(validate_distance_matrix(Eigen::MatrixXd(2, 3)), ValidationError);
}
