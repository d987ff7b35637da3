#pragma once

#include <string>
#include <vector>

#include "sparsify/bfs_tree.hpp"
#include "sparsify/graph.hpp"
#include "sparsify/report.hpp"

namespace sparsify {

// Cross edges grouped by lca equivalence. Side A is the child subtree of
// `lca` holding the first member's smaller endpoint.
struct LcaClass {
  int id = 0;
  VertexId lca = -1;
  VertexId child_a = -1;
  VertexId child_b = -1;
  std::vector<EdgeId> edges;  // increasing edge id
  Weight height = 0;          // tree height of the lca

  VertexId endpoint_a(const WeightedGraph& g, const RootedBfsTree& t, EdgeId e) const;
  VertexId endpoint_b(const WeightedGraph& g, const RootedBfsTree& t, EdgeId e) const;
};

// Pairwise test straight from the definition (both orientations).
bool lca_equivalent(const WeightedGraph& g, const RootedBfsTree& t, EdgeId e1, EdgeId e2);

std::vector<LcaClass> lca_equivalence_classes(const WeightedGraph& g,
                                              const RootedBfsTree& t);

// Tree edge from parent(child) to child.
bool connected_below(const WeightedGraph& g, const RootedBfsTree& t, VertexId child);

enum class HammockStage { kInitial, kJoined, kLcaExtended, kFinal };
const char* stage_name(HammockStage stage);

struct Hammock {
  int class_id = 0;
  std::vector<VertexId> tree_a;  // sorted
  std::vector<VertexId> tree_b;  // sorted
  VertexId root_a = -1;          // shared with the parent hammock or T0
  VertexId root_b = -1;          // its tree parent edge goes to E_p
  HammockStage stage = HammockStage::kInitial;

  std::vector<VertexId> vertices() const;
  bool contains(VertexId v) const;
  bool operator==(const Hammock&) const = default;
};

// Empty when `h` is a hammock of g with respect to t.
std::string hammock_problem(const WeightedGraph& g, const RootedBfsTree& t, const Hammock& h);

std::vector<EdgeId> induced_edges(const WeightedGraph& g, const std::vector<VertexId>& vertices);

struct HammockForest {
  std::vector<Hammock> hammocks;  // index = class id
  std::vector<int> parent;        // -1 at roots

  std::vector<int> roots() const;
  std::vector<int> children(int i) const;
  bool is_ancestor(int anc, int of) const;  // anc == of counts
  // Roots first, children by increasing id.
  std::vector<int> bfs_order() const;
};

// Parent of every hammock when walking towards the designated roots
// through shared vertices. Throws LemmaViolation if a connected group of
// hammocks has no designated root or more than one.
std::vector<int> hammock_parents(int num_vertices, const std::vector<Hammock>& hammocks,
                                 const std::vector<char>& designated_root,
                                 const std::string& stage);

struct HammockDecomposition {
  VertexId root = 0;
  std::vector<VertexId> t0;          // sorted
  std::vector<EdgeId> parent_edges;  // E_p, sorted
  HammockForest forest;

  std::vector<EdgeId> t0_edges(const RootedBfsTree& t) const;
  bool operator==(const HammockDecomposition& o) const {
    return root == o.root && t0 == o.t0 && parent_edges == o.parent_edges &&
           forest.hammocks == o.forest.hammocks && forest.parent == o.forest.parent;
  }
};

struct JoiningGraph {
  std::vector<EdgeId> edges;  // tree edges on hammock-joining paths, sorted
  // components after removing initial-hammock edges
  std::vector<std::vector<EdgeId>> component_edges;
  std::vector<std::vector<VertexId>> component_vertices;
};

// Individual stages. Each throws LemmaViolation naming the broken property.
std::vector<Hammock> initial_hammocks(const WeightedGraph& g, const RootedBfsTree& t,
                                      const std::vector<LcaClass>& classes);
JoiningGraph hammock_joining_graph(const WeightedGraph& g, const RootedBfsTree& t,
                                   const std::vector<LcaClass>& classes,
                                   const std::vector<Hammock>& initial);
struct JoinedForest {
  HammockForest forest;
  std::vector<int> owner;  // hammock receiving each joining component
};
JoinedForest assign_components(const WeightedGraph& g, const RootedBfsTree& t,
                               const std::vector<LcaClass>& classes,
                               const std::vector<Hammock>& initial,
                               const JoiningGraph& joining);
HammockForest extend_lca_paths(const WeightedGraph& g, const RootedBfsTree& t,
                               const std::vector<LcaClass>& classes,
                               const HammockForest& joined);
HammockDecomposition attach_dangling_trees(const WeightedGraph& g, const RootedBfsTree& t,
                                           const std::vector<LcaClass>& classes,
                                           const HammockForest& extended);

struct HammockPipeline {
  RootedBfsTree tree;
  std::vector<LcaClass> classes;
  std::vector<Hammock> initial;
  JoiningGraph joining;
  JoinedForest joined;
  HammockForest extended;
  HammockDecomposition result;
};

// Requires a connected, unit-weight, series-parallel graph.
HammockPipeline run_hammock_pipeline(const WeightedGraph& g, VertexId root);
HammockDecomposition build_hammock_decomposition(const WeightedGraph& g, VertexId root);

// Checks: edge partition, forest of hammocks, lca-respecting forest,
// shortest cross-edge paths inside the hammocks.
Report verify_hammock_decomposition(const WeightedGraph& g, const HammockDecomposition& hd);

}  // namespace sparsify
