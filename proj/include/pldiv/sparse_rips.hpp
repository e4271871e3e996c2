#pragma once

#include <vector>

#include "pldiv/distance.hpp"
#include "pldiv/persistence.hpp"

namespace pldiv {

// Farthest-point ordering of a point set. order[0] is always index 0;
// insertion_radii[k] is the distance from order[k] to its nearest
// predecessor (+inf sentinel for the first point). The radii are
// non-increasing.
struct GreedyPermutation {
  std::vector<Eigen::Index> order;
  std::vector<double> insertion_radii;
};

struct SparseRipsParams {
  double epsilon = 1.0;
};

// O(n^2) farthest-point traversal starting from index 0; ties go to the
// smallest index.
GreedyPermutation greedy_permutation(const DistanceMatrix& dist);

// (1+epsilon)-approximate sparse Rips 1-skeleton under a grow-then-freeze
// ball model. Each point p gets a radius cap T_p = (1+eps)/eps * lambda_p
// (infinite for the first point, so the graph is always connected); the
// edge {p,q} survives iff d(p,q) <= T_p + T_q, at the first scale where
// the two balls meet. Weights carry the same scale convention as the
// dense filtration: an edge sits at its exact dense weight whenever both
// caps exceed half of it. Larger epsilon means smaller caps and stronger
// pruning.
SparseGraph sparse_rips_graph(const DistanceMatrix& dist, const SparseRipsParams& params);

// Same, reusing a precomputed permutation (it does not depend on epsilon).
SparseGraph sparse_rips_graph(const DistanceMatrix& dist, const SparseRipsParams& params,
                              const GreedyPermutation& perm);

// Approximate diversity via the sparse skeleton: sparse graph -> MST ->
// closed-form sum. For epsilon <= 1 the result is within a factor
// (1+epsilon)^2 of the dense value.
double pldiv_sparse(const DistanceMatrix& dist, const SparseRipsParams& params);

}  // namespace pldiv
