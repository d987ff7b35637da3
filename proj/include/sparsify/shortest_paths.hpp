#pragma once

#include <vector>

#include "sparsify/graph.hpp"

namespace sparsify {

inline constexpr Weight kUnreachable = -1;

// Ties between equal-length paths are broken by comparing edge sets: the
// path avoiding the highest-ranked edge of the symmetric difference wins,
// edges ranked by (larger endpoint, smaller endpoint). The order is
// additive, so the winner is unique, symmetric in its endpoints and every
// subpath of a canonical path is canonical.
bool edge_rank_less(const WeightedGraph& g, EdgeId a, EdgeId b);

struct ShortestPathTree {
  VertexId source = 0;
  std::vector<Weight> dist;
  std::vector<VertexId> parent;     // -1 at the source and unreachable
  std::vector<EdgeId> parent_edge;  // -1 likewise
  std::vector<int> hops;

  bool reaches(VertexId v) const { return dist[v] != kUnreachable; }
  // source ... v
  Path path_to(VertexId v) const;
};

ShortestPathTree canonical_shortest_paths(const WeightedGraph& g,
                                          VertexId source);

// Plain Dijkstra distances, kUnreachable where not reached.
std::vector<Weight> distances_from(const WeightedGraph& g, VertexId source);

Path canonical_path(const WeightedGraph& g, VertexId from, VertexId to);

// Canonical trees from every source. Quadratic memory.
class AllPairsPaths {
 public:
  explicit AllPairsPaths(const WeightedGraph& g);

  Weight dist(VertexId u, VertexId v) const { return trees_[u].dist[v]; }
  Path path(VertexId u, VertexId v) const { return trees_[u].path_to(v); }
  const ShortestPathTree& tree(VertexId source) const { return trees_[source]; }
  int size() const { return static_cast<int>(trees_.size()); }

 private:
  std::vector<ShortestPathTree> trees_;
};

}  // namespace sparsify
