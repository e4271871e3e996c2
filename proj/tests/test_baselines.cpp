#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "pldiv/baselines.hpp"

using namespace pldiv;

namespace {

SimilarityMatrix identity_similarity(int n) {
  return SimilarityMatrix(Eigen::MatrixXd::Identity(n, n), "precomputed");
}

SimilarityMatrix ones_similarity(int n) {
  return SimilarityMatrix(Eigen::MatrixXd::Ones(n, n), "precomputed");
}

DistanceMatrix two_point_distance(double d) {
  Eigen::MatrixXd m(2, 2);
  m << 0, d, d, 0;
  return validate_distance_matrix(m);
}

}  // namespace

TEST_CASE("vendi score on the extreme spectra") {
  CHECK(vendi_score(identity_similarity(7)).value == doctest::Approx(7.0).epsilon(1e-9));
  CHECK(vendi_score(ones_similarity(6)).value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("vendi score matches the hand eigendecomposition of a 2x2") {
  Eigen::MatrixXd k(2, 2);
  k << 1.0, 0.5, 0.5, 1.0;
  // Eigenvalues of K/2 are 0.75 and 0.25.
  const double expected = std::exp(-(0.75 * std::log(0.75) + 0.25 * std::log(0.25)));
  CHECK(vendi_score(SimilarityMatrix(k, "precomputed")).value ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK(expected == doctest::Approx(1.7548).epsilon(1e-4));
}

TEST_CASE("vendi score is permutation invariant and within [1, n]") {
  Rng rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(10));
    const PointCloud cloud = testing::random_cloud(rng, n, 2);
    const auto k = kernel_matrix(cloud, Kernel::rbf, 1.0);
    const double vs = vendi_score(k).value;
    CHECK(vs >= 1.0 - 1e-9);
    CHECK(vs <= n + 1e-9);

    // Conjugating by a permutation preserves the spectrum.
    Eigen::MatrixXd shuffled = k.values();
    shuffled.row(0).swap(shuffled.row(n - 1));
    shuffled.col(0).swap(shuffled.col(n - 1));
    CHECK(vendi_score(SimilarityMatrix(shuffled, "precomputed")).value ==
          doctest::Approx(vs).epsilon(1e-9));
  }
}

TEST_CASE("vendi rejects clearly non-PSD input") {
  Eigen::MatrixXd k(2, 2);
  k << 1.0, 2.0, 2.0, 1.0;  // eigenvalues 3 and -1
  CHECK_THROWS_AS(vendi_score(SimilarityMatrix(k, "precomputed")), NumericError);
}

TEST_CASE("dcscore formula cases") {
  CHECK(dcscore(ones_similarity(5), 1.0).value == doctest::Approx(1.0).epsilon(1e-12));
  const double expected = 2.0 * std::exp(1.0) / (std::exp(1.0) + 1.0);
  CHECK(dcscore(identity_similarity(2), 1.0).value ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK_THROWS_AS(dcscore(identity_similarity(2), 0.0), ParameterError);
}

TEST_CASE("dcscore stays in [1, n] and is invariant under joint permutation") {
  Rng rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(10));
    const auto k = kernel_matrix(testing::random_cloud(rng, n, 2), Kernel::rbf, 0.5);
    const double tau = rng.uniform(0.2, 3.0);
    const double v = dcscore(k, tau).value;
    CHECK(v >= 1.0 - 1e-12);
    CHECK(v <= n + 1e-12);

    Eigen::MatrixXd shuffled = k.values();
    shuffled.row(1).swap(shuffled.row(n - 1));
    shuffled.col(1).swap(shuffled.col(n - 1));
    CHECK(dcscore(SimilarityMatrix(shuffled, "precomputed"), tau).value ==
          doctest::Approx(v).epsilon(1e-12));
  }
}

TEST_CASE("magnitude of tiny spaces matches the symbolic solve") {
  // Single point: Z = [1], magnitude 1 at every scale.
  Eigen::MatrixXd one(1, 1);
  one << 0.0;
  const auto single = validate_distance_matrix(one);
  for (double t : {0.1, 1.0, 10.0}) CHECK(magnitude_at(single, t) == 1.0);

  // Two points at distance d: 2 / (1 + exp(-t d)).
  for (double d : {0.5, 2.0}) {
    const auto dist = two_point_distance(d);
    for (double t : {0.1, 1.0, 10.0}) {
      const double expected = 2.0 / (1.0 + std::exp(-t * d));
      CHECK(magnitude_at(dist, t) == doctest::Approx(expected).epsilon(1e-10));
    }
  }
}

TEST_CASE("magnitude approaches n at large scale and 1 at small scale") {
  Rng rng(44);
  const int n = 8;
  const DistanceMatrix dist =
      pairwise_distances(testing::random_cloud(rng, n, 2, 0.0, 2.0), Metric::euclidean);
  CHECK(magnitude_at(dist, 1e4) == doctest::Approx(n).epsilon(1e-6));
  CHECK(magnitude_at(dist, 1e-6) == doctest::Approx(1.0).epsilon(0.05));
  CHECK_THROWS_AS(magnitude_at(dist, 0.0), ParameterError);
}

TEST_CASE("magnitude grows with t on well-spread clouds") {
  Rng rng(45);
  const DistanceMatrix dist =
      pairwise_distances(testing::random_cloud(rng, 30, 2, 0.0, 2.0), Metric::euclidean);
  double prev = 0.0;
  for (double t : {0.5, 1.0, 2.0, 4.0, 8.0, 16.0}) {
    const double mag = magnitude_at(dist, t);
    CHECK(mag > prev);
    prev = mag;
  }
}

TEST_CASE("magarea window search: single point and duplicates") {
  Eigen::MatrixXd one(1, 1);
  one << 0.0;
  const auto single = validate_distance_matrix(one);
  const auto curve = magnitude_curve(single, 0.01, 16);
  // Converges at the end of the first doubling window.
  CHECK(curve.t_cut == doctest::Approx(0.02));
  CHECK(curve.area == doctest::Approx(0.01).epsilon(1e-9));

  // Identical points cap the magnitude at 1 < 0.95 n; the scale search
  // must fail loudly.
  Eigen::MatrixXd dup = Eigen::MatrixXd::Zero(3, 3);
  const auto dup_dist = validate_distance_matrix(dup);
  CHECK_THROWS_AS(magnitude_curve(dup_dist, 0.01, 8), NumericError);
}

TEST_CASE("magarea parameter validation") {
  const auto dist = two_point_distance(1.0);
  CHECK_THROWS_AS(magarea(dist, 0.0, 16), ParameterError);
  CHECK_THROWS_AS(magarea(dist, 0.01, 4), ParameterError);
}

TEST_CASE("magarea over a shared scale ranks a spread cloud above a tight one") {
  Rng rng(46);
  // Uniform square versus a tight cluster, same counts. Comparisons only
  // make sense over a common integration interval: the tighter cloud
  // converges later, so the shared t_cut is the maximum of the two.
  const PointCloud spread = testing::random_cloud(rng, 60, 2, 0.0, 2.0);
  const PointCloud tight = testing::random_cloud(rng, 60, 2, 0.45, 0.55);
  const auto d_spread = pairwise_distances(spread, Metric::euclidean);
  const auto d_tight = pairwise_distances(tight, Metric::euclidean);
  const double t_cut = std::max(magnitude_convergence_scale(d_spread),
                                magnitude_convergence_scale(d_tight));
  const double a_spread = magarea(d_spread, 0.01, 32, t_cut).value;
  const double a_tight = magarea(d_tight, 0.01, 32, t_cut).value;
  CHECK(a_spread > a_tight);

  // The spread cloud dominates pointwise, so its own-scale area is a
  // lower bound of the shared-scale one.
  CHECK(magarea(d_spread, 0.01, 32).value <= a_spread);
}
