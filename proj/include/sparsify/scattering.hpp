#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sparsify/chops.hpp"
#include "sparsify/hammock.hpp"

namespace sparsify {

// Band taken off each side of an annulus before moving, as a fraction of delta.
inline const Rational kScatterShift{1, 3};
// Recorded fuzz of a scattering chop (moves reach exactly shift*delta past
// a sharp boundary, inclusive, so twice the shift is not enough).
inline const Rational kScatterFuzz{3, 4};
// Partition levels chop at width delta * this.
inline const Rational kPartitionWidthFactor{1, 88};
inline constexpr int kPartitionLevels = 3;

inline constexpr int kHammockPathCrossEdges = 2;
inline constexpr int kMonotoneCutBudget = 4;
inline constexpr int kCrossPathCutBudget = 8;
inline constexpr int kPathCutBudget = 36;
inline constexpr std::int64_t kPartitionTauBound =
    static_cast<std::int64_t>(kPathCutBudget) * kPathCutBudget * kPathCutBudget * 88;

struct ChopMove {
  VertexId vertex = 0;
  int from = 0;
  int to = 0;
  std::string rule;  // "a-i" moves up, "a-ii" moves down
  int owner = -1;    // hammock id, -1 for T0
  VertexId owner_root = 0;
  bool operator==(const ChopMove&) const = default;
};

struct ScatteringChop {
  FuzzyChop chop;
  std::vector<ChopMove> moves;
  int tau_observed = 0;  // most cut edges on a canonical path of length <= delta
  bool operator==(const ScatteringChop&) const = default;
};

// Who decides each vertex's move: T0 owns its vertices, a hammock owns
// everything but its A root (which belongs to the parent or to T0).
std::vector<int> scatter_owners(const WeightedGraph& g, const HammockDecomposition& hd);

ScatteringChop scattering_chop(const WeightedGraph& g, const HammockDecomposition& hd,
                               Rational delta);

struct PathCut {
  int value = 0;
  Path witness;
};

// Canonical shortest paths of length <= max_length: all pairs up to
// `exhaustive_limit` vertices, otherwise every target from `sample_sources`
// seeded sources.
struct PathSampling {
  int exhaustive_limit = 300;
  int sample_sources = 64;
  std::uint64_t seed = 0;
};
std::vector<Path> canonical_paths_up_to(const WeightedGraph& g, Weight max_length,
                                        const PathSampling& sampling = {});

PathCut max_cut_count(const std::vector<Path>& paths, const std::vector<int>& part_of);
PathCut max_parts_touched(const std::vector<Path>& paths, const std::vector<int>& part_of);

// Empirical maxima behind the cut budgets of one scattering chop.
struct CutStats {
  PathCut hammock_cross_edges;  // cross edges on paths inside one hammock
  PathCut monotone;             // tree climbs of length <= shift*delta
  PathCut cross_path;           // cross edge to cross edge, length < shift*delta
  PathCut full;                 // any path of length <= delta
  long paths_checked = 0;
};
CutStats measure_cuts(const WeightedGraph& g, const HammockDecomposition& hd,
                      const ScatteringChop& sc, const PathSampling& sampling = {});

struct ScatteringPartition {
  Rational delta{1};
  Rational width{1};
  int levels = kPartitionLevels;
  ChopHierarchy hierarchy;
  std::vector<std::vector<VertexId>> parts;
  std::vector<int> part_of;
  int tau_observed = 0;  // most parts met by a canonical path of length <= delta
  bool operator==(const ScatteringPartition&) const = default;
};

// Unit weights required. Every level re-roots each component at its
// lowest id and chops it with its own hammock decomposition.
ScatteringPartition scattering_partition(const WeightedGraph& g, Rational delta,
                                         int levels = kPartitionLevels,
                                         const PathSampling& sampling = {});

// Connected parts, weak diameter <= delta, parts per path <= tau_bound.
Report verify_scattering(const WeightedGraph& g, const ScatteringPartition& partition,
                         std::int64_t tau_bound = kPartitionTauBound,
                         const PathSampling& sampling = {});

}  // namespace sparsify
