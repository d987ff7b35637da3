#include "sparsify/chops.hpp"

#include <algorithm>
#include <map>

#include "sparsify/shortest_paths.hpp"

namespace sparsify {

int FuzzyChop::max_annulus() const {
  return annulus.empty() ? 0 : *std::max_element(annulus.begin(), annulus.end());
}

FuzzyChop delta_chop(const WeightedGraph& g, VertexId root, Rational delta) {
  if (delta <= Rational(0)) throw GraphError("chop width must be positive");
  if (root < 0 || root >= g.num_vertices()) throw GraphError("chop root out of range");
  FuzzyChop chop;
  chop.root = root;
  chop.delta = delta;
  chop.dist = distances_from(g, root);
  chop.annulus.resize(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (chop.dist[v] == kUnreachable)
      throw GraphError("vertex " + std::to_string(v) + " unreachable from chop root");
    chop.annulus[v] = static_cast<int>((Rational(chop.dist[v]) / delta).floor()) + 1;
  }
  return chop;
}

Rational band_lower(const FuzzyChop& chop, int i) {
  return Rational(i - 1) * chop.delta - chop.fuzz * chop.delta / Rational(2);
}

Rational band_upper(const FuzzyChop& chop, int i) {
  return Rational(i) * chop.delta + chop.fuzz * chop.delta / Rational(2);
}

std::vector<std::vector<VertexId>> chop_components(const WeightedGraph& g,
                                                   const FuzzyChop& chop) {
  int n = g.num_vertices();
  std::vector<int> label(n, -1);
  std::vector<std::vector<VertexId>> out;
  for (VertexId s = 0; s < n; ++s) {
    if (label[s] != -1) continue;
    std::vector<VertexId> comp{s}, stack{s};
    label[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (const auto& inc : g.neighbors(x))
        if (label[inc.to] == -1 && chop.annulus[inc.to] == chop.annulus[s]) {
          label[inc.to] = label[s];
          comp.push_back(inc.to);
          stack.push_back(inc.to);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return chop.annulus[a[0]] != chop.annulus[b[0]]
               ? chop.annulus[a[0]] < chop.annulus[b[0]]
               : a[0] < b[0];
  });
  return out;
}

Report verify_fuzzy(const FuzzyChop& chop) {
  Report report;
  auto& band = report.add("fuzzy band");
  if (!(chop.fuzz >= Rational(0) && chop.fuzz < Rational(1)))
    band.fail("fuzz " + chop.fuzz.str() + " outside [0, 1)");
  for (std::size_t v = 0; v < chop.annulus.size(); ++v) {
    int i = chop.annulus[v];
    Rational d(chop.dist[v]);
    if (!(band_lower(chop, i) <= d && d < band_upper(chop, i)))
      band.fail("vertex " + std::to_string(v) + " at distance " + d.str() +
                " outside band of annulus " + std::to_string(i) + " [" +
                band_lower(chop, i).str() + ", " + band_upper(chop, i).str() + ")");
  }
  return report;
}

Weight weak_diameter(const WeightedGraph& g, const std::vector<VertexId>& part) {
  Weight best = 0;
  for (VertexId s : part) {
    auto dist = distances_from(g, s);
    for (VertexId t : part) best = std::max(best, dist[t]);
  }
  return best;
}

int count_cut_edges(const Path& path, const std::vector<int>& part_of) {
  int cuts = 0;
  for (std::size_t i = 1; i < path.size(); ++i)
    if (part_of[path[i - 1]] != part_of[path[i]]) ++cuts;
  return cuts;
}

int count_parts_touched(const Path& path, const std::vector<int>& part_of) {
  std::vector<int> seen;
  for (VertexId v : path) seen.push_back(part_of[v]);
  std::sort(seen.begin(), seen.end());
  return static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

std::vector<int> ChopHierarchy::leaf_ids() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].children.empty()) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<std::vector<VertexId>> ChopHierarchy::leaves() const {
  std::vector<std::vector<VertexId>> out;
  for (int id : leaf_ids()) out.push_back(nodes[id].vertices);
  return out;
}

std::vector<int> ChopHierarchy::part_of(int n) const {
  std::vector<int> out(n, -1);
  auto ids = leaf_ids();
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (VertexId v : nodes[ids[i]].vertices) out[v] = static_cast<int>(i);
  return out;
}

ChopHierarchy recursive_chops(const WeightedGraph& g, Rational delta, int levels,
                              const Chopper& chopper) {
  if (levels < 0) throw GraphError("levels must be non-negative");
  ChopHierarchy h;
  h.delta = delta;
  h.levels = levels;
  auto comp = connected_components(g);
  int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  h.nodes.resize(count);
  for (VertexId v = 0; v < g.num_vertices(); ++v) h.nodes[comp[v]].vertices.push_back(v);

  std::vector<int> frontier(count);
  for (int i = 0; i < count; ++i) frontier[i] = i;
  for (int level = 1; level <= levels; ++level) {
    std::vector<int> next;
    for (int id : frontier) {
      auto sub = induced_subgraph(g, h.nodes[id].vertices);
      FuzzyChop chop = chopper(sub.graph, 0, delta);
      for (auto& part : chop_components(sub.graph, chop)) {
        ChopNode child;
        child.level = level;
        child.annulus = chop.annulus[part[0]];
        child.parent = id;
        for (VertexId v : part) child.vertices.push_back(sub.to_original[v]);
        int child_id = static_cast<int>(h.nodes.size());
        h.nodes[id].children.push_back(child_id);
        h.nodes.push_back(std::move(child));
        next.push_back(child_id);
      }
    }
    frontier = std::move(next);
  }
  return h;
}

Chopper sharp_chopper() {
  return [](const WeightedGraph& g, VertexId root, Rational delta) {
    return delta_chop(g, root, delta);
  };
}

}  // namespace sparsify
