#pragma once

#include <vector>

#include "sparsify/graph.hpp"

namespace sparsify {

// Shortest path tree of the canonical order, rooted at `root`.
class RootedBfsTree {
 public:
  RootedBfsTree() = default;

  VertexId root() const { return root_; }
  int size() const { return static_cast<int>(parent_.size()); }
  VertexId parent(VertexId v) const { return parent_[v]; }
  EdgeId parent_edge(VertexId v) const { return parent_edge_[v]; }
  Weight depth(VertexId v) const { return depth_[v]; }
  int hops(VertexId v) const { return hops_[v]; }
  Weight max_depth() const { return max_depth_; }
  // Distance-to-bottom: vertices furthest from the root sit at height 0.
  Weight height(VertexId v) const { return max_depth_ - depth_[v]; }
  const std::vector<VertexId>& children(VertexId v) const { return children_[v]; }
  // Vertices sorted by (depth, id).
  const std::vector<VertexId>& order() const { return order_; }

  bool is_tree_edge(EdgeId e) const { return tree_edge_[e]; }
  const std::vector<EdgeId>& cross_edges() const { return cross_edges_; }
  const std::vector<EdgeId>& tree_edges() const { return tree_edges_; }

  VertexId lca(VertexId a, VertexId b) const;
  // a is an ancestor of b (a == b counts).
  bool is_ancestor(VertexId a, VertexId b) const {
    return tin_[a] <= tin_[b] && tout_[b] <= tout_[a];
  }
  // Child of `anc` whose subtree holds v; anc must be a strict ancestor.
  VertexId child_toward(VertexId anc, VertexId v) const;
  // Vertices of the tree path a ... b.
  Path tree_path(VertexId a, VertexId b) const;

  friend RootedBfsTree build_bfs_tree(const WeightedGraph& g, VertexId root);

 private:
  VertexId root_ = 0;
  std::vector<VertexId> parent_;
  std::vector<EdgeId> parent_edge_;
  std::vector<Weight> depth_;
  std::vector<int> hops_;
  Weight max_depth_ = 0;
  std::vector<std::vector<VertexId>> children_;
  std::vector<VertexId> order_;
  std::vector<char> tree_edge_;
  std::vector<EdgeId> cross_edges_;
  std::vector<EdgeId> tree_edges_;
  std::vector<int> tin_, tout_;
  // Euler tour with a sparse table over hop depth for lca queries.
  std::vector<VertexId> euler_;
  std::vector<int> first_;
  std::vector<std::vector<int>> sparse_;
};

// Throws GraphError naming an unreachable vertex if g is disconnected.
RootedBfsTree build_bfs_tree(const WeightedGraph& g, VertexId root);

}  // namespace sparsify
