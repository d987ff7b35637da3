#pragma once

#include <vector>

#include "sparsify/graph.hpp"
#include "sparsify/report.hpp"

namespace sparsify {

struct SprInstance {
  WeightedGraph graph;
  std::vector<VertexId> terminals;
};

// Minor on the terminals: vertex k of `minor` stands for terminals[k].
struct SprResult {
  std::vector<VertexId> terminals;
  WeightedGraph minor;
  // per input vertex: the terminal whose supernode holds it, -1 if unassigned
  std::vector<VertexId> witness;

  int index_of(VertexId terminal) const;  // -1 if not a terminal
  bool operator==(const SprResult&) const = default;
};

// Each vertex joins its nearest terminal (ties to the smallest terminal id);
// cells are contracted and a minor edge {t, t'} weighs d(t, t').
SprResult voronoi_spr_minor(const SprInstance& inst);

Report verify_minor(const SprInstance& inst, const SprResult& result);

struct Distortion {
  double value = 1.0;
  VertexId from = -1;  // argmax pair, original ids
  VertexId to = -1;
};

// max over terminal pairs of d_minor / d_graph.
Distortion distortion(const SprInstance& inst, const SprResult& result);

}  // namespace sparsify
