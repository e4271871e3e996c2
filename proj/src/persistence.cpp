#include "pldiv/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace pldiv {

PersistenceDiagram::PersistenceDiagram(std::vector<PersistencePair> pairs,
                                       Eigen::Index n_points)
    : pairs_(std::move(pairs)), n_points_(n_points) {
  for (const auto& p : pairs_) {
    if (!std::isfinite(p.birth) || !std::isfinite(p.death) || p.birth < 0.0 ||
        p.birth > p.death) {
      throw InputError("persistence pair must satisfy 0 <= birth <= death < inf");
    }
  }
}

SparseGraph::SparseGraph(Eigen::Index n_vertices, std::vector<GraphEdge> edges)
    : n_vertices_(n_vertices), edges_(std::move(edges)) {
  if (n_vertices_ < 1) {
    throw InputError("graph must have at least one vertex");
  }
  for (const auto& e : edges_) {
    if (e.i < 0 || e.j <= e.i || e.j >= n_vertices_) {
      throw InputError("graph edge indices must satisfy 0 <= i < j < n");
    }
    if (!std::isfinite(e.weight) || e.weight < 0.0) {
      throw InputError("graph edge weights must be finite and >= 0");
    }
  }
  std::vector<std::pair<std::int32_t, std::int32_t>> keys;
  keys.reserve(edges_.size());
  for (const auto& e : edges_) keys.emplace_back(e.i, e.j);
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
    throw InputError("graph contains a duplicate edge");
  }
}

SparseGraph SparseGraph::complete(const DistanceMatrix& dist) {
  const Eigen::Index n = dist.size();
  std::vector<GraphEdge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      edges.push_back({static_cast<std::int32_t>(i), static_cast<std::int32_t>(j),
                       dist(i, j)});
    }
  }
  return SparseGraph(n, std::move(edges));
}

std::vector<double> mst_edge_weights(const DistanceMatrix& dist) {
  const Eigen::Index n = dist.size();
  if (n <= 1) return {};

  const Eigen::MatrixXd& d = dist.values();
  constexpr double kInf = std::numeric_limits<double>::infinity();

  // key[u] = distance from u to the current tree. Relaxation and the next
  // argmin are fused into one pass per added vertex. Columns are
  // contiguous in Eigen's default storage and the matrix is symmetric, so
  // d.col(v) is row v.
  std::vector<double> key(static_cast<std::size_t>(n));
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  Eigen::Map<Eigen::VectorXd>(key.data(), n) = d.col(0);
  used[0] = 1;

  Eigen::Index next = -1;
  double best = kInf;
  for (Eigen::Index u = 1; u < n; ++u) {
    if (key[u] < best) {
      best = key[u];
      next = u;
    }
  }

  std::vector<double> weights;
  weights.reserve(static_cast<std::size_t>(n - 1));
  for (Eigen::Index step = 0; step + 1 < n; ++step) {
    const Eigen::Index v = next;
    used[v] = 1;
    weights.push_back(key[v]);

    const double* col = d.col(v).data();
    best = kInf;
    next = -1;
    for (Eigen::Index u = 0; u < n; ++u) {
      if (used[u]) continue;
      if (col[u] < key[u]) key[u] = col[u];
      if (key[u] < best) {
        best = key[u];
        next = u;
      }
    }
  }
  std::sort(weights.begin(), weights.end());
  return weights;
}

namespace {

// Union-find with union by rank and path compression.
class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::int32_t{0});
  }

  std::int32_t find(std::int32_t x) {
    std::int32_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      std::int32_t up = parent_[x];
      parent_[x] = root;
      x = up;
    }
    return root;
  }

  bool unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> rank_;
};

}  // namespace

std::vector<double> mst_edge_weights(const SparseGraph& graph) {
  const Eigen::Index n = graph.n_vertices();
  if (n <= 1) return {};

  std::vector<GraphEdge> edges = graph.edges();
  std::sort(edges.begin(), edges.end(), [](const GraphEdge& a, const GraphEdge& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });

  DisjointSet uf(static_cast<std::size_t>(n));
  std::vector<double> weights;
  weights.reserve(static_cast<std::size_t>(n - 1));
  for (const auto& e : edges) {
    if (uf.unite(e.i, e.j)) {
      weights.push_back(e.weight);
      if (weights.size() == static_cast<std::size_t>(n - 1)) break;
    }
  }
  if (weights.size() != static_cast<std::size_t>(n - 1)) {
    const int components = static_cast<int>(n - weights.size());
    throw StructuralError("graph is disconnected: " + std::to_string(components) +
                              " components",
                          components);
  }
  return weights;
}

namespace {

PersistenceDiagram diagram_from_weights(std::vector<double> weights, Eigen::Index n) {
  std::vector<PersistencePair> pairs;
  pairs.reserve(weights.size());
  for (double w : weights) pairs.push_back({0.0, w});
  return PersistenceDiagram(std::move(pairs), n);
}

}  // namespace

PersistenceDiagram h0_dense(const DistanceMatrix& dist) {
  return diagram_from_weights(mst_edge_weights(dist), dist.size());
}

PersistenceDiagram h0_sparse(const SparseGraph& graph) {
  return diagram_from_weights(mst_edge_weights(graph), graph.n_vertices());
}

}  // namespace pldiv
