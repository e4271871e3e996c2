#include <doctest.h>

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "pldiv/landscape.hpp"
#include "pldiv/sparse_rips.hpp"

using namespace pldiv;

namespace {

DistanceMatrix from_points_1d(std::initializer_list<double> xs) {
  Eigen::MatrixXd pts(static_cast<Eigen::Index>(xs.size()), 1);
  Eigen::Index i = 0;
  for (double x : xs) pts(i++, 0) = x;
  return pairwise_distances(PointCloud(std::move(pts)), Metric::euclidean);
}

}  // namespace

TEST_CASE("greedy permutation on hand-checkable inputs") {
  // 1-D points 0, 1, 3: farthest from {0} is 3, then 1 at distance 1.
  const auto perm = greedy_permutation(from_points_1d({0.0, 1.0, 3.0}));
  CHECK(perm.order == std::vector<Eigen::Index>{0, 2, 1});
  CHECK(std::isinf(perm.insertion_radii[0]));
  CHECK(perm.insertion_radii[1] == 3.0);
  CHECK(perm.insertion_radii[2] == 1.0);

  const auto two = greedy_permutation(from_points_1d({0.0, 2.5}));
  CHECK(two.order == std::vector<Eigen::Index>{0, 1});
  CHECK(two.insertion_radii[1] == 2.5);

  const auto same = greedy_permutation(from_points_1d({1.0, 1.0, 1.0}));
  CHECK(std::isinf(same.insertion_radii[0]));
  CHECK(same.insertion_radii[1] == 0.0);
  CHECK(same.insertion_radii[2] == 0.0);
}

TEST_CASE("greedy permutation radii are non-increasing and match brute force") {
  Rng rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(12));
    const DistanceMatrix dist =
        pairwise_distances(testing::random_cloud(rng, n, 2), Metric::euclidean);
    const auto perm = greedy_permutation(dist);
    REQUIRE(perm.order.size() == static_cast<std::size_t>(n));
    for (int k = 2; k < n; ++k) {
      CHECK(perm.insertion_radii[static_cast<std::size_t>(k - 1)] >=
            perm.insertion_radii[static_cast<std::size_t>(k)]);
    }
    for (int k = 1; k < n; ++k) {
      double nearest = std::numeric_limits<double>::infinity();
      for (int j = 0; j < k; ++j) {
        nearest = std::min(nearest, dist(perm.order[static_cast<std::size_t>(k)],
                                         perm.order[static_cast<std::size_t>(j)]));
      }
      CHECK(perm.insertion_radii[static_cast<std::size_t>(k)] == nearest);
    }
  }
}

TEST_CASE("two points always keep their edge at the dense weight") {
  const auto dist = from_points_1d({0.0, 4.0});
  for (double eps : {0.1, 1.0, 1e9}) {
    const auto graph = sparse_rips_graph(dist, {eps});
    REQUIRE(graph.edges().size() == 1);
    CHECK(graph.edges()[0].weight == 4.0);
  }
}

TEST_CASE("identical points keep only zero-weight edges") {
  const auto dist = from_points_1d({1.0, 1.0, 1.0, 1.0});
  const auto graph = sparse_rips_graph(dist, {2.0});
  for (const auto& e : graph.edges()) CHECK(e.weight == 0.0);
  CHECK(pldiv_sparse(dist, {2.0}) == 0.0);
}

TEST_CASE("epsilon validation") {
  const auto dist = from_points_1d({0.0, 1.0});
  CHECK_THROWS_AS(sparse_rips_graph(dist, {0.0}), ParameterError);
  CHECK_THROWS_AS(sparse_rips_graph(dist, {-1.0}), ParameterError);
}

TEST_CASE("small caps prune; all-covering caps reproduce the dense value exactly") {
  Rng rng(101);
  const DistanceMatrix dist =
      pairwise_distances(testing::random_cloud(rng, 40, 2), Metric::euclidean);
  const auto perm = greedy_permutation(dist);

  // Smallest positive insertion radius and the diameter decide an epsilon
  // whose caps all exceed the diameter: every edge survives at its dense
  // weight and the values match bit for bit.
  double lambda_min = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < perm.insertion_radii.size(); ++k) {
    lambda_min = std::min(lambda_min, perm.insertion_radii[k]);
  }
  REQUIRE(lambda_min > 0.0);
  const double needed = dist.diameter() / lambda_min;  // (1+eps)/eps >= needed
  const double eps = 1.0 / needed;                     // 1 + 1/eps > needed
  const auto graph = sparse_rips_graph(dist, {eps});
  CHECK(graph.edges().size() == static_cast<std::size_t>(40 * 39 / 2));
  CHECK(pldiv_sparse(dist, {eps}) == pldiv_dense(dist));
}

TEST_CASE("pruning is monotone in epsilon") {
  Rng rng(55);
  const DistanceMatrix dist =
      pairwise_distances(testing::random_cloud(rng, 60, 2), Metric::euclidean);
  std::size_t prev = std::numeric_limits<std::size_t>::max();
  for (double eps : {0.25, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0}) {
    const std::size_t count = sparse_rips_graph(dist, {eps}).edges().size();
    CHECK(count <= prev);
    prev = count;
  }
}

TEST_CASE("sparse deaths stay within (1+eps) of dense deaths elementwise") {
  Rng rng(202);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 20 + static_cast<int>(rng.below(80));
    const DistanceMatrix dist =
        pairwise_distances(testing::random_cloud(rng, n, 2), Metric::euclidean);
    const auto dense = h0_dense(dist).pairs();
    for (double eps : {0.25, 0.5, 0.95, 1.0}) {
      const auto sparse = h0_sparse(sparse_rips_graph(dist, {eps})).pairs();
      REQUIRE(sparse.size() == dense.size());
      for (std::size_t k = 0; k < dense.size(); ++k) {
        // Retained edges are exact, so deaths can only grow, and the
        // net rerouting argument caps the growth at (1+eps).
        CHECK(sparse[k].death >= dense[k].death);
        CHECK(sparse[k].death <= (1.0 + eps) * dense[k].death + 1e-12);
      }
      const double bound = (1.0 + eps) * (1.0 + eps);
      const double dv = pldiv_closed_form(PersistenceDiagram(dense, n));
      const double sv = pldiv_closed_form(PersistenceDiagram(sparse, n));
      CHECK(sv >= dv / bound);
      CHECK(sv <= dv * bound);
    }
  }
}

TEST_CASE("sparse approximation is tight at moderate epsilon") {
  Rng rng(303);
  const DistanceMatrix dist =
      pairwise_distances(testing::random_cloud(rng, 500, 2), Metric::euclidean);
  const double dense = pldiv_dense(dist);
  CHECK(std::abs(pldiv_sparse(dist, {0.95}) - dense) / dense < 1e-3);
  CHECK(std::abs(pldiv_sparse(dist, {10.0}) - dense) / dense < 5e-2);
}

TEST_CASE("same input and epsilon give the identical graph") {
  Rng rng(404);
  const DistanceMatrix dist =
      pairwise_distances(testing::random_cloud(rng, 30, 2), Metric::euclidean);
  const auto a = sparse_rips_graph(dist, {0.8});
  const auto b = sparse_rips_graph(dist, {0.8});
  REQUIRE(a.edges().size() == b.edges().size());
  for (std::size_t k = 0; k < a.edges().size(); ++k) {
    CHECK(a.edges()[k].i == b.edges()[k].i);
    CHECK(a.edges()[k].j == b.edges()[k].j);
    CHECK(a.edges()[k].weight == b.edges()[k].weight);
  }
}
