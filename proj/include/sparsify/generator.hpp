#pragma once

#include <cstdint>
#include <random>

#include "sparsify/graph.hpp"

namespace sparsify {

struct GeneratorConfig {
  double series_probability = 0.5;  // subdivide vs. add a parallel path
  int max_parallel_length = 4;      // parallel paths have 2..this edges
  bool glue_blocks = false;         // several blocks joined at cut vertices
  int max_blocks = 4;
  bool biconnected = false;         // start from a triangle, single block
  Weight max_weight = 1;
  bool shuffle_labels = true;
};

// Portable draws: mt19937_64 is fully specified, std distributions are not.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
int uniform_int(std::mt19937_64& rng, int lo, int hi);  // inclusive
double uniform_unit(std::mt19937_64& rng);

// Connected series-parallel graph on exactly n vertices built from random
// series and parallel edge replacements. Deterministic in the seed.
WeightedGraph generate_series_parallel(std::uint64_t seed, int n,
                                       const GeneratorConfig& config = {});

// Erdos-Renyi G(n, p); may be disconnected.
WeightedGraph generate_random_graph(std::uint64_t seed, int n, double p);

}  // namespace sparsify
