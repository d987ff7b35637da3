#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sparsify/graph.hpp"

namespace sparsify {

// A cycle plus three paths from `claw_root` to three distinct cycle
// vertices, internally disjoint from each other and from the cycle. This is
// a subdivided K4.
struct ClawedCycle {
  Path cycle;  // closed: first vertex repeated at the end
  VertexId claw_root = -1;
  std::vector<Path> claws;  // each starts at claw_root, ends on the cycle
};

struct SpRecognition {
  bool series_parallel = false;
  std::optional<ClawedCycle> witness;
};

// K4-minor freeness via series/parallel reductions. On failure a clawed
// cycle of g is returned.
SpRecognition recognize_series_parallel(const WeightedGraph& g);
bool is_series_parallel(const WeightedGraph& g);

// Empty string when valid, otherwise a description of the first problem.
std::string check_clawed_cycle(const WeightedGraph& g, const ClawedCycle& w);

}  // namespace sparsify
