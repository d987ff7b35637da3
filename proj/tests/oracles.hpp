#pragma once

// Brute-force references for the tests. Nothing here calls the library's
// algorithms; only the graph container is shared.

#include <limits>
#include <vector>

#include "sparsify/graph.hpp"

namespace oracle {

using sparsify::Path;
using sparsify::VertexId;
using sparsify::Weight;
using sparsify::WeightedGraph;

inline constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;

std::vector<std::vector<Weight>> floyd_warshall(const WeightedGraph& g);

// Every shortest u-v path (simple), by exhaustive DFS. Small graphs only.
std::vector<Path> all_shortest_paths(const WeightedGraph& g, VertexId u, VertexId v);

// Among equal-length paths the winner is the one whose edges, ranked by
// (larger endpoint, smaller endpoint) and listed from the top, come first
// lexicographically: it avoids the top edge of the symmetric difference.
Path canonical_by_enumeration(const WeightedGraph& g, VertexId u, VertexId v);

// K4 minor <=> treewidth >= 3. Subset DP over elimination orders, n <= 16.
int treewidth(const WeightedGraph& g);
bool has_k4_minor_by_treewidth(const WeightedGraph& g);

// Literal search: four disjoint connected branch sets, pairwise adjacent.
// n <= 9.
bool has_k4_minor_by_branch_sets(const WeightedGraph& g);

// Parent array (-1 at the root) based helpers.
VertexId climb_lca(const std::vector<VertexId>& parent, const std::vector<int>& depth,
                   VertexId u, VertexId v);
Path climb_tree_path(const std::vector<VertexId>& parent, const std::vector<int>& depth,
                     VertexId u, VertexId v);

// Equivalence classes of cross edges by the pairwise rule: same lca l, and
// under one of the two orientations both endpoint lcas lie strictly below l.
// Classes are closed transitively; each is returned as sorted edge ids,
// classes sorted by first edge.
std::vector<std::vector<int>> lca_classes(const WeightedGraph& g,
                                          const std::vector<VertexId>& parent,
                                          const std::vector<int>& depth,
                                          const std::vector<int>& cross_edges);

// Union of tree edges over all tree paths x-y with x in hammock i, y in
// hammock j (i != j), avoiding both lcas.
std::vector<int> joining_edges(const WeightedGraph& g, const std::vector<VertexId>& parent,
                               const std::vector<int>& depth,
                               const std::vector<std::vector<VertexId>>& hammocks,
                               const std::vector<VertexId>& lcas);

}  // namespace oracle
