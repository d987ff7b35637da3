#pragma once

#include <vector>

#include "sparsify/graph.hpp"

namespace fixtures {

using sparsify::Edge;
using sparsify::WeightedGraph;

inline WeightedGraph make(int n, std::vector<Edge> edges) {
  return WeightedGraph::from_edges(n, std::move(edges));
}

inline WeightedGraph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, 1});
  return make(n, e);
}

inline WeightedGraph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n, 1});
  return make(n, e);
}

// center 0
inline WeightedGraph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i, 1});
  return make(leaves + 1, e);
}

inline WeightedGraph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j, 1});
  return make(n, e);
}

inline WeightedGraph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.push_back({i, a + j, 1});
  return make(a + b, e);
}

inline WeightedGraph grid(int rows, int cols) {
  std::vector<Edge> e;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      int v = r * cols + c;
      if (c + 1 < cols) e.push_back({v, v + 1, 1});
      if (r + 1 < rows) e.push_back({v, v + cols, 1});
    }
  return make(rows * cols, e);
}

// hub 0, rim 1..spokes
inline WeightedGraph wheel(int spokes) {
  std::vector<Edge> e;
  for (int i = 1; i <= spokes; ++i) {
    e.push_back({0, i, 1});
    e.push_back({i, i % spokes + 1, 1});
  }
  return make(spokes + 1, e);
}

// Two vertices joined by `paths` internally disjoint paths of `len` edges.
inline WeightedGraph theta(int paths, int len) {
  std::vector<Edge> e;
  int n = 2;
  for (int p = 0; p < paths; ++p) {
    int prev = 0;
    for (int i = 1; i < len; ++i) {
      e.push_back({prev, n, 1});
      prev = n++;
    }
    e.push_back({prev, 1, 1});
  }
  return make(n, e);
}

}  // namespace fixtures
