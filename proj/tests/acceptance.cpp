// Acceptance run: one PASS/FAIL line per criterion with the measured maxima.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "oracles.hpp"
#include "sparsify/chops.hpp"
#include "sparsify/ears.hpp"
#include "sparsify/generator.hpp"
#include "sparsify/graph_io.hpp"
#include "sparsify/hammock.hpp"
#include "sparsify/scattering.hpp"
#include "sparsify/serialize.hpp"
#include "sparsify/series_parallel.hpp"
#include "sparsify/spr.hpp"

using namespace sparsify;

namespace {

const std::string kData = SPARSIFY_TEST_DATA;
int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail, double secs) {
  std::printf("%s [%d] %s: %s (%.1fs)\n", pass ? "PASS" : "FAIL", id, name.c_str(),
              detail.c_str(), secs);
  std::fflush(stdout);
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string first_failure(const Report& r) {
  for (const auto& c : r.checks)
    if (!c.passed) return c.name + (c.failures.empty() ? "" : ": " + c.failures[0]);
  return "";
}

WeightedGraph grid(int rows, int cols) { return fixtures::grid(rows, cols); }

// SP graphs for the scattering criteria, n <= 120
std::vector<WeightedGraph> scattering_corpus(int count) {
  std::vector<WeightedGraph> out;
  for (int s = 0; s < count; ++s) {
    GeneratorConfig cfg;
    cfg.glue_blocks = s % 3 == 0;
    cfg.series_probability = s % 2 == 0 ? 0.5 : 0.7;
    out.push_back(generate_series_parallel(5000 + s, 10 + (s * 37) % 111, cfg));
  }
  return out;
}

void recognition() {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<WeightedGraph> corpus;
  for (std::uint64_t seed = 1; seed <= 2000; ++seed) {
    int n = 4 + static_cast<int>(seed % 9);
    double p = 0.15 + 0.05 * static_cast<double>(seed % 8);
    corpus.push_back(generate_random_graph(seed, n, p));
  }
  corpus.push_back(fixtures::complete(4));
  corpus.push_back(fixtures::complete_bipartite(2, 3));
  for (int r = 2; r <= 3; ++r)
    for (int c = 2; c <= 4; ++c) corpus.push_back(grid(r, c));
  for (int k = 3; k <= 8; ++k) corpus.push_back(fixtures::wheel(k));

  int disagreements = 0, sp = 0, max_n = 0;
  std::string example;
  for (const auto& g : corpus) {
    max_n = std::max(max_n, g.num_vertices());
    bool got = is_series_parallel(g);
    bool want = !oracle::has_k4_minor_by_treewidth(g);
    if (got) ++sp;
    if (got != want) {
      ++disagreements;
      if (example.empty()) example = ", first at n=" + std::to_string(g.num_vertices());
    }
  }
  double secs = seconds_since(t0);
  report(1, "recognition agrees with the K4-minor oracle",
         disagreements == 0 && secs < 120,
         std::to_string(corpus.size()) + " graphs (" + std::to_string(sp) + " SP), max n " +
             std::to_string(max_n) + ", " + std::to_string(disagreements) + " disagreements" +
             example,
         secs);
}

void hammock_validity() {
  auto t0 = std::chrono::steady_clock::now();
  int bad = 0, max_n = 0, max_hammocks = 0;
  std::string example;
  for (int s = 0; s < 500; ++s) {
    GeneratorConfig cfg;
    cfg.glue_blocks = s % 2 == 1;
    int n = 2 + (s * 53) % 149;
    auto g = generate_series_parallel(1000 + s, n, cfg);
    max_n = std::max(max_n, g.num_vertices());
    VertexId root = static_cast<VertexId>(s % g.num_vertices());
    auto hd = build_hammock_decomposition(g, root);
    max_hammocks = std::max(max_hammocks, static_cast<int>(hd.forest.hammocks.size()));
    auto r = verify_hammock_decomposition(g, hd);
    if (!r.ok()) {
      ++bad;
      if (example.empty()) example = ", seed " + std::to_string(1000 + s) + " " + first_failure(r);
    }
  }
  double secs = seconds_since(t0);
  report(2, "hammock decompositions verify", bad == 0 && secs < 600,
         "500 graphs, max n " + std::to_string(max_n) + ", max hammocks " +
             std::to_string(max_hammocks) + ", " + std::to_string(bad) + " failures" + example,
         secs);
}

void golden_fixture() {
  auto t0 = std::chrono::steady_clock::now();
  auto doc = graph_from_json(read_json_file(kData + "/fixture_graph.json"));
  auto hd = build_hammock_decomposition(doc.graph, doc.root.value_or(0));
  bool json_ok = dump(decomposition_to_json(doc.graph, hd)) ==
                 slurp(kData + "/fixture_decomposition.json");
  bool dot_ok =
      decomposition_to_dot(doc.graph, hd) == slurp(kData + "/fixture_decomposition.dot");
  report(3, "golden fixture reproduced byte for byte", json_ok && dot_ok,
         std::string("json ") + (json_ok ? "identical" : "differs") + ", dot " +
             (dot_ok ? "identical" : "differs"),
         seconds_since(t0));
}

void chop_diameter(const std::vector<WeightedGraph>& corpus) {
  auto t0 = std::chrono::steady_clock::now();
  int bad = 0;
  double worst_ratio = -1;
  std::string worst;
  long singletons = 0, parts = 0;
  // 264 and 880 give widths 3 and 10; below 88 every width is under 1
  for (int delta : {4, 8, 16, 264, 880}) {
    Rational width = Rational(delta) * kPartitionWidthFactor;
    Rational bound = Rational(22 * 4) * width;
    for (const auto& g : corpus) {
      auto p = scattering_partition(g, Rational(delta));
      for (const auto& part : p.parts) {
        ++parts;
        if (part.size() == 1) ++singletons;
        Weight wd = weak_diameter(g, part);
        double ratio = static_cast<double>(wd) / bound.to_double();
        if (ratio > worst_ratio) {
          worst_ratio = ratio;
          worst = std::to_string(wd) + " at delta " + std::to_string(delta);
        }
        if (Rational(wd) > bound) ++bad;
      }
    }
  }
  report(4, "leaf parts have weak diameter <= 22*4*c'*delta", bad == 0,
         std::to_string(corpus.size()) + " graphs x 5 deltas, " + std::to_string(singletons) +
             "/" + std::to_string(parts) + " singleton parts, max diameter " + worst + " (" +
             std::to_string(worst_ratio) + " of bound), " + std::to_string(bad) + " violations",
         seconds_since(t0));
}

void cut_budgets(const std::vector<WeightedGraph>& corpus) {
  auto t0 = std::chrono::steady_clock::now();
  int hammock = 0, mono = 0, cross = 0, full = 0;
  long paths = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& g = corpus[i];
    auto hd = build_hammock_decomposition(g, static_cast<VertexId>(i % g.num_vertices()));
    for (int delta : {3, 6, 9, 12, 18}) {
      auto sc = scattering_chop(g, hd, Rational(delta));
      auto st = measure_cuts(g, hd, sc);
      hammock = std::max(hammock, st.hammock_cross_edges.value);
      mono = std::max(mono, st.monotone.value);
      cross = std::max(cross, st.cross_path.value);
      full = std::max(full, st.full.value);
      paths += st.paths_checked;
    }
  }
  bool pass = hammock <= kHammockPathCrossEdges && mono <= kMonotoneCutBudget &&
              cross <= kCrossPathCutBudget && full <= kPathCutBudget;
  report(5, "scattering-chop cut budgets", pass,
         std::to_string(paths) + " paths; max cross edges in one hammock " +
             std::to_string(hammock) + "/2, monotone cuts " + std::to_string(mono) +
             "/4, cross-path cuts " + std::to_string(cross) + "/8, full-path cuts " +
             std::to_string(full) + "/36",
         seconds_since(t0));
}

void partitions(const std::vector<WeightedGraph>& corpus) {
  auto t0 = std::chrono::steady_clock::now();
  int bad = 0;
  std::int64_t tau = 0;
  std::string example;
  for (int delta : {4, 8, 16, 264, 880})
    for (const auto& g : corpus) {
      auto p = scattering_partition(g, Rational(delta));
      tau = std::max<std::int64_t>(tau, p.tau_observed);
      auto r = verify_scattering(g, p);
      if (!r.ok()) {
        ++bad;
        if (example.empty()) example = ", " + first_failure(r);
      }
    }
  double secs = seconds_since(t0);
  report(6, "scattering partitions verify", bad == 0 && secs < 1200,
         std::to_string(corpus.size() * 5) + " partitions, max tau " + std::to_string(tau) +
             " (bound " + std::to_string(kPartitionTauBound) + "), " + std::to_string(bad) +
             " failures" + example,
         secs);
}

void spr() {
  auto t0 = std::chrono::steady_clock::now();
  int bad = 0, instances = 0;
  double worst = 1.0, worst_tree = 1.0;
  std::string example;
  auto run = [&](const WeightedGraph& g, std::vector<VertexId> terms, double& slot) {
    ++instances;
    SprInstance inst{g, terms};
    auto r = voronoi_spr_minor(inst);
    auto v = verify_minor(inst, r);
    auto d = distortion(inst, r);
    auto fw = oracle::floyd_warshall(g);
    auto fm = oracle::floyd_warshall(r.minor);
    bool dominated = true;
    for (std::size_t a = 0; a < r.terminals.size(); ++a)
      for (std::size_t b = 0; b < r.terminals.size(); ++b)
        if (fm[a][b] < fw[r.terminals[a]][r.terminals[b]]) dominated = false;
    if (!v.ok() || d.value < 1.0 || !dominated) {
      ++bad;
      if (example.empty()) example = ", " + (v.ok() ? std::string("domination") : first_failure(v));
    }
    slot = std::max(slot, d.value);
  };
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    std::mt19937_64 rng(seed);
    GeneratorConfig cfg;
    cfg.max_weight = seed % 3 == 0 ? 5 : 1;
    int n = 4 + static_cast<int>(seed % 60);
    auto g = generate_series_parallel(seed, n, cfg);
    std::vector<VertexId> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    int k = 1 + static_cast<int>(uniform_below(rng, n));
    for (int i = 0; i < k; ++i) std::swap(all[i], all[i + uniform_below(rng, n - i)]);
    run(g, {all.begin(), all.begin() + k}, worst);
  }
  // trees, terminals at the leaves
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    std::mt19937_64 rng(seed);
    int n = 8 + static_cast<int>(seed % 40);
    std::vector<Edge> edges;
    std::vector<int> deg(n, 0);
    for (int v = 1; v < n; ++v) {
      int p = static_cast<int>(uniform_below(rng, v));
      edges.push_back({p, v, 1});
      ++deg[p];
      ++deg[v];
    }
    std::vector<VertexId> leaves;
    for (int v = 0; v < n; ++v)
      if (deg[v] == 1) leaves.push_back(v);
    run(fixtures::make(n, edges), leaves, worst_tree);
  }
  SprInstance star{fixtures::star(4), {1, 2, 3, 4}};
  double star_d = distortion(star, voronoi_spr_minor(star)).value;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", worst);
  std::string worst_s = buf;
  std::snprintf(buf, sizeof buf, "%.3f", worst_tree);
  report(7, "SPR minors are sound", bad == 0 && star_d == 2.0,
         std::to_string(instances) + " instances, " + std::to_string(bad) +
             " failures, max distortion " + worst_s + " on SP graphs, " + buf +
             " on trees, star " + std::to_string(star_d) + example,
         seconds_since(t0));
}

void ears() {
  auto t0 = std::chrono::steady_clock::now();
  int bad = 0, max_ears = 0;
  std::string example;
  for (int s = 0; s < 200; ++s) {
    GeneratorConfig cfg;
    cfg.biconnected = true;
    auto g = generate_series_parallel(3000 + s, 3 + (s * 29) % 120, cfg);
    if (!is_biconnected(g)) {
      ++bad;
      if (example.empty()) example = ", generator gave a non-biconnected graph";
      continue;
    }
    auto hd = build_hammock_decomposition(g, static_cast<VertexId>(s % g.num_vertices()));
    auto ed = nested_ear_decomposition(g, hd);
    max_ears = std::max(max_ears, static_cast<int>(ed.ears.size()));
    auto r = verify_ear_decomposition(g, ed, &hd);
    if (!r.ok()) {
      ++bad;
      if (example.empty()) example = ", seed " + std::to_string(3000 + s) + " " + first_failure(r);
    }
  }
  report(8, "nested ear decompositions verify", bad == 0,
         "200 biconnected graphs, max ears " + std::to_string(max_ears) + ", " +
             std::to_string(bad) + " failures" + example,
         seconds_since(t0));
}

// Each criterion runs in isolation so one exception does not hide the rest.
void guarded(int id, const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, name, false, std::string("threw: ") + e.what(), 0);
  }
}

}  // namespace

int main() {
  guarded(1, "recognition agrees with the K4-minor oracle", recognition);
  guarded(2, "hammock decompositions verify", hammock_validity);
  guarded(3, "golden fixture reproduced byte for byte", golden_fixture);
  auto corpus = scattering_corpus(200);
  guarded(4, "leaf parts have weak diameter <= 22*4*c'*delta", [&] { chop_diameter(corpus); });
  guarded(5, "scattering-chop cut budgets", [&] { cut_budgets(corpus); });
  guarded(6, "scattering partitions verify", [&] { partitions(corpus); });
  guarded(7, "SPR minors are sound", spr);
  guarded(8, "nested ear decompositions verify", ears);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
