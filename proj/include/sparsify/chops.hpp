#pragma once

#include <functional>
#include <vector>

#include "sparsify/graph.hpp"
#include "sparsify/rational.hpp"
#include "sparsify/report.hpp"

namespace sparsify {

// Annulus index per vertex. Index i nominally covers distances
// [(i-1) * delta, i * delta); fuzzy chops widen that band by fuzz*delta/2 on
// both sides. Index 0 holds vertices moved below the first annulus.
struct FuzzyChop {
  VertexId root = 0;
  Rational delta{1};
  Rational fuzz{0};
  std::vector<Weight> dist;
  std::vector<int> annulus;

  int max_annulus() const;
  bool operator==(const FuzzyChop&) const = default;
};

// Sharp chop: annulus(v) = floor(d(root, v) / delta) + 1.
FuzzyChop delta_chop(const WeightedGraph& g, VertexId root, Rational delta);

// Lower and upper band of annulus i: lower <= d < upper.
Rational band_lower(const FuzzyChop& chop, int i);
Rational band_upper(const FuzzyChop& chop, int i);

// Connected components of every annulus, ordered by (annulus, smallest id).
std::vector<std::vector<VertexId>> chop_components(const WeightedGraph& g,
                                                   const FuzzyChop& chop);

Report verify_fuzzy(const FuzzyChop& chop);

// Max distance in g between members of `part`.
Weight weak_diameter(const WeightedGraph& g, const std::vector<VertexId>& part);

// Number of consecutive path vertices in different parts.
int count_cut_edges(const Path& path, const std::vector<int>& part_of);
// Number of distinct parts a path visits.
int count_parts_touched(const Path& path, const std::vector<int>& part_of);

using Chopper = std::function<FuzzyChop(const WeightedGraph&, VertexId, Rational)>;

struct ChopNode {
  std::vector<VertexId> vertices;  // original ids, sorted
  int level = 0;                   // 0 = connected component of the input
  int annulus = 0;                 // annulus index in the parent's chop
  int parent = -1;
  std::vector<int> children;
  bool operator==(const ChopNode&) const = default;
};

struct ChopHierarchy {
  Rational delta{1};
  int levels = 0;
  std::vector<ChopNode> nodes;

  std::vector<int> leaf_ids() const;
  std::vector<std::vector<VertexId>> leaves() const;
  // leaf index (position in leaf_ids) per vertex
  std::vector<int> part_of(int n) const;
  bool operator==(const ChopHierarchy&) const = default;
};

// Every level chops each current part on its induced subgraph, rooted at
// the part's lowest id, and splits the annuli into components.
ChopHierarchy recursive_chops(const WeightedGraph& g, Rational delta, int levels,
                              const Chopper& chopper);

Chopper sharp_chopper();

}  // namespace sparsify
