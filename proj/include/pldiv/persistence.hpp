#pragma once

#include <cstdint>
#include <vector>

#include "pldiv/distance.hpp"
#include "pldiv/errors.hpp"

namespace pldiv {

// One H0 feature: a component born at `birth` that merges at `death`.
// Under the Vietoris-Rips convention used throughout (an edge {i,j}
// appears at scale d(i,j)), every H0 birth is 0 and every death is an
// MST edge weight. The essential never-dying component is omitted.
struct PersistencePair {
  double birth = 0.0;
  double death = 0.0;
  double lifetime() const { return death - birth; }
};

class PersistenceDiagram {
 public:
  static constexpr int degree = 0;

  PersistenceDiagram() = default;
  PersistenceDiagram(std::vector<PersistencePair> pairs, Eigen::Index n_points);

  const std::vector<PersistencePair>& pairs() const { return pairs_; }
  Eigen::Index n_points() const { return n_points_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

 private:
  std::vector<PersistencePair> pairs_;
  Eigen::Index n_points_ = 0;
};

struct GraphEdge {
  std::int32_t i = 0;
  std::int32_t j = 0;
  double weight = 0.0;
};

// Undirected weighted graph stored as an edge list with i < j and no
// duplicate pairs.
class SparseGraph {
 public:
  SparseGraph(Eigen::Index n_vertices, std::vector<GraphEdge> edges);

  static SparseGraph complete(const DistanceMatrix& dist);

  Eigen::Index n_vertices() const { return n_vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }

 private:
  Eigen::Index n_vertices_;
  std::vector<GraphEdge> edges_;
};

// Ascending MST edge weights of the complete graph over a distance
// matrix, by a dense Prim scan: O(n^2) time, O(n) extra memory.
std::vector<double> mst_edge_weights(const DistanceMatrix& dist);

// Ascending MST edge weights by Kruskal with union-find (union by rank,
// path compression); ties are broken by (i, j) lexicographic order so the
// selection is deterministic. Throws StructuralError with the component
// count if the graph is disconnected.
std::vector<double> mst_edge_weights(const SparseGraph& graph);

// H0 persistence diagram of the Vietoris-Rips filtration over a dense
// distance matrix: n-1 pairs (0, w) for the MST edge weights w, sorted by
// death ascending. A single point yields an empty diagram.
PersistenceDiagram h0_dense(const DistanceMatrix& dist);

// Same, over a sparse 1-skeleton. The graph must be connected.
PersistenceDiagram h0_sparse(const SparseGraph& graph);

}  // namespace pldiv
