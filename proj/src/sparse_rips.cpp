#include "pldiv/sparse_rips.hpp"

#include <cmath>
#include <limits>

#include "pldiv/landscape.hpp"

namespace pldiv {

GreedyPermutation greedy_permutation(const DistanceMatrix& dist) {
  const Eigen::Index n = dist.size();
  const Eigen::MatrixXd& d = dist.values();
  constexpr double kInf = std::numeric_limits<double>::infinity();

  GreedyPermutation perm;
  perm.order.reserve(static_cast<std::size_t>(n));
  perm.insertion_radii.reserve(static_cast<std::size_t>(n));
  perm.order.push_back(0);
  perm.insertion_radii.push_back(kInf);
  if (n == 1) return perm;

  // key[u] = distance from u to the chosen prefix.
  std::vector<double> key(static_cast<std::size_t>(n));
  std::vector<char> chosen(static_cast<std::size_t>(n), 0);
  Eigen::Map<Eigen::VectorXd>(key.data(), n) = d.col(0);
  chosen[0] = 1;

  Eigen::Index next = -1;
  double far = -1.0;
  for (Eigen::Index u = 1; u < n; ++u) {
    if (key[u] > far) {
      far = key[u];
      next = u;
    }
  }

  for (Eigen::Index step = 1; step < n; ++step) {
    const Eigen::Index p = next;
    chosen[p] = 1;
    perm.order.push_back(p);
    perm.insertion_radii.push_back(key[p]);

    const double* col = d.col(p).data();
    far = -1.0;
    next = -1;
    for (Eigen::Index u = 0; u < n; ++u) {
      if (chosen[u]) continue;
      if (col[u] < key[u]) key[u] = col[u];
      if (key[u] > far) {
        far = key[u];
        next = u;
      }
    }
  }
  return perm;
}

SparseGraph sparse_rips_graph(const DistanceMatrix& dist, const SparseRipsParams& params) {
  return sparse_rips_graph(dist, params, greedy_permutation(dist));
}

SparseGraph sparse_rips_graph(const DistanceMatrix& dist, const SparseRipsParams& params,
                              const GreedyPermutation& perm) {
  if (!(params.epsilon > 0.0) || !std::isfinite(params.epsilon)) {
    throw ParameterError("sparse Rips tolerance epsilon must be > 0");
  }
  const Eigen::Index n = dist.size();
  const Eigen::MatrixXd& d = dist.values();

  // Per-point radius caps, indexed by point id.
  std::vector<double> cap(static_cast<std::size_t>(n));
  const double factor = (1.0 + params.epsilon) / params.epsilon;
  for (Eigen::Index k = 0; k < n; ++k) {
    cap[perm.order[k]] = factor * perm.insertion_radii[k];
  }

  // An edge survives iff the capped balls can still meet; surviving edges
  // keep their exact dense weight. Re-weighting pruned-late edges (the
  // grow-then-freeze meeting scale) is unnecessary for H0: any connectivity
  // a dropped edge provided at scale w is restored through a net point
  // whose cap covers it by scale (1+eps) w, so sorted deaths stay within
  // a factor (1+eps) of the dense ones while every retained death is exact.
  std::vector<GraphEdge> edges;
  edges.reserve(static_cast<std::size_t>(40) * n);
  for (Eigen::Index p = 0; p < n; ++p) {
    const double* col = d.col(p).data();
    const double tp = cap[p];
    for (Eigen::Index q = p + 1; q < n; ++q) {
      const double dpq = col[q];
      if (dpq <= tp + cap[q]) {
        edges.push_back(
            {static_cast<std::int32_t>(p), static_cast<std::int32_t>(q), dpq});
      }
    }
  }
  return SparseGraph(n, std::move(edges));
}

double pldiv_sparse(const DistanceMatrix& dist, const SparseRipsParams& params) {
  return pldiv_closed_form(h0_sparse(sparse_rips_graph(dist, params)));
}

}  // namespace pldiv
