#include "sparsify/scattering.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "sparsify/generator.hpp"
#include "sparsify/shortest_paths.hpp"

namespace sparsify {

std::vector<int> scatter_owners(const WeightedGraph& g, const HammockDecomposition& hd) {
  const std::string stage = "scattering chop";
  int n = g.num_vertices();
  std::vector<int> owner(n, -2);
  for (VertexId v : hd.t0) owner[v] = -1;
  const auto& hs = hd.forest.hammocks;
  for (std::size_t j = 0; j < hs.size(); ++j)
    for (VertexId v : hs[j].vertices()) {
      if (v == hs[j].root_a) continue;
      if (owner[v] != -2)
        throw LemmaViolation(stage, "each vertex has one owner",
                             "vertex " + std::to_string(v) + " claimed twice");
      owner[v] = static_cast<int>(j);
    }
  for (VertexId v = 0; v < n; ++v)
    if (owner[v] == -2)
      throw LemmaViolation(stage, "each vertex has one owner", "vertex " + std::to_string(v));
  return owner;
}

namespace {

ScatteringChop apply_moves(const WeightedGraph& g, const HammockDecomposition& hd,
                           Rational delta) {
  ScatteringChop out;
  out.chop = delta_chop(g, hd.root, delta);
  auto owner = scatter_owners(g, hd);
  const auto& dist = out.chop.dist;
  const Rational shift = kScatterShift * delta;
  std::vector<int> moved = out.chop.annulus;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    VertexId top = owner[v] < 0 ? hd.root : hd.forest.hammocks[owner[v]].root_a;
    int i = out.chop.annulus[v];
    Rational d(dist[v]), d_top(dist[top]);
    Rational upper_cut = Rational(i) * delta - shift;
    std::string rule;
    if (out.chop.annulus[top] == i && d_top >= upper_cut) {
      if (d >= upper_cut) {
        moved[v] = i + 1;
        rule = "a-i";
      }
    } else if (d_top < upper_cut && d <= Rational(i - 1) * delta + shift) {
      moved[v] = i - 1;
      rule = "a-ii";
    }
    if (!rule.empty()) out.moves.push_back({v, i, moved[v], rule, owner[v], top});
  }
  out.chop.annulus = std::move(moved);
  out.chop.fuzz = kScatterFuzz;
  return out;
}

std::vector<int> parts_of_chop(const WeightedGraph& g, const FuzzyChop& chop) {
  std::vector<int> part_of(g.num_vertices());
  auto comps = chop_components(g, chop);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (VertexId v : comps[c]) part_of[v] = static_cast<int>(c);
  return part_of;
}

}  // namespace

ScatteringChop scattering_chop(const WeightedGraph& g, const HammockDecomposition& hd,
                               Rational delta) {
  ScatteringChop out = apply_moves(g, hd, delta);
  out.tau_observed =
      max_cut_count(canonical_paths_up_to(g, delta.floor()), parts_of_chop(g, out.chop)).value;
  return out;
}

std::vector<Path> canonical_paths_up_to(const WeightedGraph& g, Weight max_length,
                                        const PathSampling& sampling) {
  int n = g.num_vertices();
  std::vector<VertexId> sources;
  if (n <= sampling.exhaustive_limit) {
    for (VertexId v = 0; v < n; ++v) sources.push_back(v);
  } else {
    std::mt19937_64 rng(sampling.seed);
    std::set<VertexId> picked;
    while (static_cast<int>(picked.size()) < std::min(n, sampling.sample_sources))
      picked.insert(static_cast<VertexId>(uniform_below(rng, n)));
    sources.assign(picked.begin(), picked.end());
  }
  std::vector<Path> out;
  bool all = n <= sampling.exhaustive_limit;
  for (VertexId s : sources) {
    auto spt = canonical_shortest_paths(g, s);
    for (VertexId v = 0; v < n; ++v) {
      if (v == s || !spt.reaches(v) || spt.dist[v] > max_length) continue;
      if (all && v < s) continue;
      out.push_back(spt.path_to(v));
    }
  }
  return out;
}

PathCut max_cut_count(const std::vector<Path>& paths, const std::vector<int>& part_of) {
  PathCut best;
  for (const auto& p : paths) {
    int c = count_cut_edges(p, part_of);
    if (best.witness.empty() || c > best.value) best = {c, p};
  }
  return best;
}

PathCut max_parts_touched(const std::vector<Path>& paths, const std::vector<int>& part_of) {
  PathCut best;
  for (const auto& p : paths) {
    int c = count_parts_touched(p, part_of);
    if (c > best.value) best = {c, p};
  }
  return best;
}

CutStats measure_cuts(const WeightedGraph& g, const HammockDecomposition& hd,
                      const ScatteringChop& sc, const PathSampling& sampling) {
  CutStats stats;
  auto t = build_bfs_tree(g, hd.root);
  auto part_of = parts_of_chop(g, sc.chop);
  std::vector<int> edge_owner(g.num_edges(), -1);
  for (std::size_t j = 0; j < hd.forest.hammocks.size(); ++j)
    for (EdgeId e : induced_edges(g, hd.forest.hammocks[j].vertices()))
      edge_owner[e] = static_cast<int>(j);

  Rational delta = sc.chop.delta;
  Rational shift = kScatterShift * delta;
  auto bump = [](PathCut& slot, int value, const Path& p) {
    if (slot.witness.empty() || value > slot.value) slot = {value, p};
  };

  // paths inside one hammock: every length
  for (const auto& p : canonical_paths_up_to(g, g.total_weight(), sampling)) {
    auto edges = path_edges(g, p);
    int home = edge_owner[edges[0]];
    if (home < 0) continue;
    int cross = 0;
    bool inside = true;
    for (EdgeId e : edges) {
      if (edge_owner[e] != home) inside = false;
      if (!t.is_tree_edge(e)) ++cross;
    }
    if (inside) bump(stats.hammock_cross_edges, cross, p);
  }

  // tree climbs of length <= shift
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    Path climb{v};
    for (VertexId x = t.parent(v); x >= 0 && Rational(t.depth(v) - t.depth(x)) <= shift;
         x = t.parent(x)) {
      climb.push_back(x);
      bump(stats.monotone, count_cut_edges(climb, part_of), climb);
    }
  }

  for (const auto& p : canonical_paths_up_to(g, delta.floor(), sampling)) {
    ++stats.paths_checked;
    int cuts = count_cut_edges(p, part_of);
    bump(stats.full, cuts, p);
    Weight len = static_cast<Weight>(p.size()) - 1;
    if (Rational(len) < shift) {
      auto edges = path_edges(g, p);
      if (!t.is_tree_edge(edges.front()) && !t.is_tree_edge(edges.back()))
        bump(stats.cross_path, cuts, p);
    }
  }
  return stats;
}

ScatteringPartition scattering_partition(const WeightedGraph& g, Rational delta, int levels,
                                         const PathSampling& sampling) {
  if (!g.has_unit_weights()) throw GraphError("scattering partition needs unit weights");
  if (delta <= Rational(0)) throw GraphError("delta must be positive");
  ScatteringPartition out;
  out.delta = delta;
  out.width = delta * kPartitionWidthFactor;
  out.levels = levels;
  Chopper chopper = [](const WeightedGraph& sub, VertexId root, Rational width) {
    return apply_moves(sub, build_hammock_decomposition(sub, root), width).chop;
  };
  out.hierarchy = recursive_chops(g, out.width, levels, chopper);
  out.parts = out.hierarchy.leaves();
  out.part_of = out.hierarchy.part_of(g.num_vertices());
  Weight max_len = delta.floor();
  out.tau_observed =
      max_parts_touched(canonical_paths_up_to(g, max_len, sampling), out.part_of).value;
  return out;
}

Report verify_scattering(const WeightedGraph& g, const ScatteringPartition& partition,
                         std::int64_t tau_bound, const PathSampling& sampling) {
  Report report;
  auto& cover = report.add("parts partition the vertices");
  auto& connected = report.add("parts are connected");
  auto& diameter = report.add("weak diameter at most delta");
  auto& tau = report.add("parts per short path within bound");
  int n = g.num_vertices();
  std::vector<int> part_of(n, -1);
  for (std::size_t p = 0; p < partition.parts.size(); ++p)
    for (VertexId v : partition.parts[p]) {
      if (v < 0 || v >= n) {
        cover.fail("vertex out of range");
        return report;
      }
      if (part_of[v] >= 0) cover.fail("vertex " + std::to_string(v) + " in two parts");
      part_of[v] = static_cast<int>(p);
    }
  for (VertexId v = 0; v < n; ++v)
    if (part_of[v] < 0) cover.fail("vertex " + std::to_string(v) + " in no part");
  if (!cover.passed) return report;

  for (std::size_t p = 0; p < partition.parts.size(); ++p) {
    const auto& part = partition.parts[p];
    if (part.empty()) {
      cover.fail("part " + std::to_string(p) + " is empty");
      continue;
    }
    std::vector<char> keep(n, 0);
    for (VertexId v : part) keep[v] = 1;
    auto label = components_within(g, keep);
    for (VertexId v : part)
      if (label[v] != label[part[0]]) {
        connected.fail("part " + std::to_string(p) + " is disconnected");
        break;
      }
    Weight wd = weak_diameter(g, part);
    if (Rational(wd) > partition.delta)
      diameter.fail("part " + std::to_string(p) + " has weak diameter " + std::to_string(wd));
  }
  auto worst = max_parts_touched(canonical_paths_up_to(g, partition.delta.floor(), sampling),
                                 part_of);
  if (worst.value > tau_bound)
    tau.fail("a path meets " + std::to_string(worst.value) + " parts");
  return report;
}

}  // namespace sparsify
