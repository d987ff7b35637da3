#pragma once

#include <vector>

#include "sparsify/graph.hpp"
#include "sparsify/hammock.hpp"
#include "sparsify/report.hpp"

namespace sparsify {

struct EarDecomposition {
  std::vector<Path> ears;       // the first ear is a closed cycle
  std::vector<int> parent_ear;  // earliest ear holding both endpoints, -1 for the first
  bool operator==(const EarDecomposition&) const = default;
};

bool is_biconnected(const WeightedGraph& g);

// Ears built hammock by hammock, each one a cross edge plus the two tree
// climbs from its endpoints until they meet what is already placed.
// Requires a 2-vertex-connected graph and its hammock decomposition.
EarDecomposition nested_ear_decomposition(const WeightedGraph& g,
                                          const HammockDecomposition& hd);

// Partition, open, tree and nested properties. With a decomposition it
// also checks the ear shape and the E_p conditions.
Report verify_ear_decomposition(const WeightedGraph& g, const EarDecomposition& ed,
                                const HammockDecomposition* hd = nullptr);

}  // namespace sparsify
