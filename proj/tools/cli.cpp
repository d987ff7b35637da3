#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <optional>
#include <random>
#include <thread>

#include "sparsify/bfs_tree.hpp"
#include "sparsify/generator.hpp"
#include "sparsify/serialize.hpp"
#include "sparsify/series_parallel.hpp"
#include "sparsify/shortest_paths.hpp"

namespace sparsify::cli {

namespace {

// Thrown for bad flags or inputs; maps to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::uint64_t seed = 0;
  int n = 0;
  std::string delta = "8";
  int levels = kPartitionLevels;
  std::string terminals;
  std::string in;
  std::string out;
  std::string format = "json";
  std::int64_t budget_tau = kPartitionTauBound;
  bool to_stdout = false;
  std::string config;
  bool biconnected = false;
  std::vector<std::string> files;
  bool seed_given = false;
};

struct Options {
  CLI::Option* seed;
  CLI::Option* n;
  CLI::Option* delta;
  CLI::Option* levels;
  CLI::Option* terminals;
  CLI::Option* in;
  CLI::Option* out;
  CLI::Option* format;
  CLI::Option* budget_tau;
  CLI::Option* to_stdout;
  CLI::Option* biconnected;
};

Options add_flags(CLI::App* app, RunConfig& cfg) {
  Options o;
  o.seed = app->add_option("--seed", cfg.seed, "random seed");
  o.n = app->add_option("--n", cfg.n, "vertex count for generate");
  o.delta = app->add_option("--delta", cfg.delta, "chop width or partition diameter, e.g. 8 or 17/2");
  o.levels = app->add_option("--levels", cfg.levels, "partition recursion depth");
  o.terminals = app->add_option("--terminals", cfg.terminals,
                                "terminal count, or a fraction in (0,1)");
  o.in = app->add_option("--in", cfg.in, "input graph JSON");
  o.out = app->add_option("--out", cfg.out, "output file (stdout when absent)");
  o.format = app->add_option("--format", cfg.format, "json or dot")
                 ->check(CLI::IsMember({"json", "dot"}));
  o.budget_tau = app->add_option("--budget-tau", cfg.budget_tau, "parts-per-path bound for partitions");
  o.to_stdout = app->add_flag("--stdout", cfg.to_stdout, "also write machine output to stdout");
  o.biconnected = app->add_flag("--biconnected", cfg.biconnected, "generate a 2-connected graph");
  app->add_option("--config", cfg.config, "JSON file supplying any of these flags");
  return o;
}

template <typename T>
void from_config(const Json& j, const char* key, CLI::Option* opt, T& target) {
  if (opt->count() > 0 || !j.contains(key)) return;
  try {
    target = j[key].get<T>();
  } catch (const nlohmann::json::exception&) {
    throw UsageError(std::string("config: bad value for '") + key + "'");
  }
}

// Flags given on the command line win over the file.
void apply_config(RunConfig& cfg, const Options& o) {
  cfg.seed_given = o.seed->count() > 0;
  if (cfg.config.empty()) return;
  Json j;
  try {
    j = read_json_file(cfg.config);
  } catch (const GraphError& e) {
    throw UsageError(e.what());
  }
  if (!j.is_object()) throw UsageError("config: expected a JSON object");
  static const char* known[] = {"seed", "n", "delta", "levels", "terminals", "in", "out",
                                "format", "budget-tau", "stdout", "biconnected", "files"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find_if(std::begin(known), std::end(known),
                     [&](const char* k) { return it.key() == k; }) == std::end(known))
      throw UsageError("config: unknown key '" + it.key() + "'");
  from_config(j, "seed", o.seed, cfg.seed);
  cfg.seed_given = cfg.seed_given || j.contains("seed");
  from_config(j, "n", o.n, cfg.n);
  if (o.delta->count() == 0 && j.contains("delta"))
    cfg.delta = j["delta"].is_string() ? j["delta"].get<std::string>() : j["delta"].dump();
  from_config(j, "levels", o.levels, cfg.levels);
  if (o.terminals->count() == 0 && j.contains("terminals"))
    cfg.terminals = j["terminals"].is_string() ? j["terminals"].get<std::string>()
                                               : j["terminals"].dump();
  from_config(j, "in", o.in, cfg.in);
  from_config(j, "out", o.out, cfg.out);
  from_config(j, "format", o.format, cfg.format);
  from_config(j, "budget-tau", o.budget_tau, cfg.budget_tau);
  from_config(j, "stdout", o.to_stdout, cfg.to_stdout);
  from_config(j, "biconnected", o.biconnected, cfg.biconnected);
  if (cfg.files.empty() && j.contains("files")) {
    try {
      cfg.files = j["files"].get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception&) {
      throw UsageError("config: 'files' must be a list of paths");
    }
  }
  if (cfg.format != "json" && cfg.format != "dot") throw UsageError("format must be json or dot");
}

Rational parse_delta(const RunConfig& cfg) {
  Rational d;
  try {
    d = Rational::parse(cfg.delta);
  } catch (const std::exception&) {
    throw UsageError("delta: cannot parse '" + cfg.delta + "'");
  }
  if (d <= Rational(0)) throw UsageError("delta must be positive");
  return d;
}

GraphDocument load_graph(const RunConfig& cfg) {
  if (cfg.in.empty()) throw UsageError("--in is required");
  try {
    return graph_from_json(read_json_file(cfg.in));
  } catch (const GraphError& e) {
    throw UsageError(e.what());
  }
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (!cfg.out.empty()) {
    try {
      write_text_file(cfg.out, text);
    } catch (const GraphError& e) {
      throw UsageError(e.what());
    }
  }
  if (cfg.out.empty() || cfg.to_stdout) out << text;
}

std::string describe(const ClawedCycle& w) {
  auto path = [](const Path& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "-" : "") + std::to_string(p[i]);
    return s;
  };
  std::string s = "clawed cycle " + path(w.cycle) + " with claws from " +
                  std::to_string(w.claw_root) + ":";
  for (const auto& c : w.claws) s += " " + path(c);
  return s;
}

// Connected, unit-weight and series-parallel, as the hammock machinery needs.
// Returns an exit code, kOk when the graph may proceed.
int check_decomposable(const WeightedGraph& g, std::ostream& err) {
  if (g.num_vertices() == 0) throw UsageError("graph has no vertices");
  if (!is_connected(g)) throw UsageError("graph is disconnected");
  if (!g.has_unit_weights()) throw UsageError("hammock decomposition needs unit weights");
  auto rec = recognize_series_parallel(g);
  if (!rec.series_parallel) {
    err << "not series-parallel: " << describe(*rec.witness) << "\n";
    return kNotSeriesParallel;
  }
  return kOk;
}

VertexId root_of(const GraphDocument& doc) { return doc.root.value_or(0); }

int report_exit(const Report& report, std::ostream& err) {
  if (report.ok()) return kOk;
  err << report.summary();
  return kInvariantFailure;
}

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.seed_given) throw UsageError("generate: --seed is required");
  if (cfg.n < 1) throw UsageError("generate: --n must be at least 1");
  if (cfg.biconnected && cfg.n < 3) throw UsageError("generate: biconnected needs --n >= 3");
  GeneratorConfig gc;
  gc.biconnected = cfg.biconnected;
  auto g = generate_series_parallel(cfg.seed, cfg.n, gc);
  if (cfg.format == "dot") emit(cfg, graph_to_dot(g), out);
  else emit(cfg, dump(graph_to_json(g)), out);
  return kOk;
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto doc = load_graph(cfg);
  if (int code = check_decomposable(doc.graph, err)) return code;
  auto hd = build_hammock_decomposition(doc.graph, root_of(doc));
  auto report = verify_hammock_decomposition(doc.graph, hd);
  if (cfg.format == "dot") emit(cfg, decomposition_to_dot(doc.graph, hd), out);
  else emit(cfg, dump(decomposition_to_json(doc.graph, hd)), out);
  return report_exit(report, err);
}

int cmd_chop(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto doc = load_graph(cfg);
  Rational delta = parse_delta(cfg);
  if (int code = check_decomposable(doc.graph, err)) return code;
  auto hd = build_hammock_decomposition(doc.graph, root_of(doc));
  auto sc = scattering_chop(doc.graph, hd, delta);
  emit(cfg, dump(scattering_chop_to_json(sc)), out);
  return report_exit(verify_fuzzy(sc.chop), err);
}

int cmd_partition(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto doc = load_graph(cfg);
  Rational delta = parse_delta(cfg);
  if (cfg.levels < 0 || cfg.levels > 8) throw UsageError("levels must be in 0..8");
  if (cfg.budget_tau < 1) throw UsageError("budget-tau must be positive");
  if (int code = check_decomposable(doc.graph, err)) return code;
  auto p = scattering_partition(doc.graph, delta, cfg.levels);
  emit(cfg, dump(partition_to_json(p)), out);
  return report_exit(verify_scattering(doc.graph, p, cfg.budget_tau), err);
}

std::vector<VertexId> pick_terminals(const RunConfig& cfg, int n) {
  int k = 0;
  const std::string& t = cfg.terminals;
  try {
    std::size_t used = 0;
    if (t.find('.') != std::string::npos) {
      double f = std::stod(t, &used);
      if (used != t.size() || !(f > 0 && f <= 1)) throw UsageError("");
      k = std::max(1, static_cast<int>(f * n + 0.5));
    } else {
      k = std::stoi(t, &used);
      if (used != t.size()) throw UsageError("");
    }
  } catch (const std::exception&) {
    throw UsageError("terminals: expected a count or a fraction in (0,1], got '" + t + "'");
  }
  if (k < 1 || k > n) throw UsageError("terminals: count must be in 1..n");
  std::vector<VertexId> all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  std::mt19937_64 rng(cfg.seed);
  for (int i = 0; i < k; ++i)
    std::swap(all[i], all[i + uniform_below(rng, static_cast<std::uint64_t>(n - i))]);
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

int cmd_spr(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.in.empty()) throw UsageError("--in is required");
  SprInstance inst;
  try {
    Json j = read_json_file(cfg.in);
    if (j.contains("graph")) {
      inst = spr_instance_from_json(j);
    } else {
      auto doc = graph_from_json(j);
      inst.graph = doc.graph;
      if (doc.terminals) inst.terminals = *doc.terminals;
    }
  } catch (const GraphError& e) {
    throw UsageError(e.what());
  }
  if (!cfg.terminals.empty()) inst.terminals = pick_terminals(cfg, inst.graph.num_vertices());
  if (inst.terminals.empty()) throw UsageError("spr: no terminals in the input and no --terminals");
  SprResult r;
  try {
    r = voronoi_spr_minor(inst);
  } catch (const GraphError& e) {
    throw UsageError(e.what());
  }
  auto report = verify_minor(inst, r);
  emit(cfg, dump(spr_result_to_json(r, distortion(inst, r))), out);
  return report_exit(report, err);
}

int cmd_ears(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto doc = load_graph(cfg);
  if (int code = check_decomposable(doc.graph, err)) return code;
  if (!is_biconnected(doc.graph)) throw UsageError("ears: graph is not 2-vertex-connected");
  auto hd = build_hammock_decomposition(doc.graph, root_of(doc));
  auto ed = nested_ear_decomposition(doc.graph, hd);
  emit(cfg, dump(ears_to_json(ed)), out);
  return report_exit(verify_ear_decomposition(doc.graph, ed, &hd), err);
}

struct Verdict {
  std::string kind;
  Report report;
  std::string error;  // unreadable artifact
};

// Recomputes the chop's distances and rechecks its fuzzy bands.
Report verify_chop_against(const WeightedGraph& g, const FuzzyChop& chop) {
  Report report = verify_fuzzy(chop);
  auto& dist = report.add("distances match the graph");
  if (chop.root < 0 || chop.root >= g.num_vertices() ||
      static_cast<int>(chop.dist.size()) != g.num_vertices()) {
    dist.fail("chop does not fit the graph");
    return report;
  }
  auto d = distances_from(g, chop.root);
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (d[v] != chop.dist[v]) dist.fail("vertex " + std::to_string(v));
  return report;
}

Verdict verify_artifact(const GraphDocument& doc, const RunConfig& cfg, const std::string& file) {
  Verdict v;
  const auto& g = doc.graph;
  try {
    Json j = read_json_file(file);
    if (j.contains("hammocks")) {
      v.kind = "decomposition";
      v.report = verify_hammock_decomposition(g, decomposition_from_json(g, j));
    } else if (j.contains("parts")) {
      v.kind = "partition";
      v.report = verify_scattering(g, partition_from_json(j), cfg.budget_tau);
    } else if (j.contains("moves")) {
      v.kind = "chop";
      v.report = verify_chop_against(g, scattering_chop_from_json(j).chop);
    } else if (j.contains("witness")) {
      v.kind = "spr";
      auto r = spr_result_from_json(j);
      v.report = verify_minor(SprInstance{g, r.terminals}, r);
    } else if (j.contains("ears")) {
      v.kind = "ears";
      auto ed = ears_from_json(j);
      v.report = verify_ear_decomposition(g, ed);
    } else {
      v.error = "unrecognised artifact";
    }
  } catch (const std::exception& e) {
    v.error = e.what();
  }
  return v;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto doc = load_graph(cfg);
  if (cfg.files.empty()) throw UsageError("verify: name at least one artifact file");
  std::vector<Verdict> verdicts(cfg.files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < cfg.files.size();)
      verdicts[i] = verify_artifact(doc, cfg, cfg.files[i]);
  };
  int threads = std::min<int>(thread_budget(), static_cast<int>(cfg.files.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Json results = Json::array();
  bool unreadable = false, failed = false;
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    const auto& v = verdicts[i];
    Json x;
    x["file"] = cfg.files[i];
    if (!v.error.empty()) {
      unreadable = true;
      x["error"] = v.error;
      err << cfg.files[i] << ": " << v.error << "\n";
    } else {
      x["kind"] = v.kind;
      x["report"] = report_to_json(v.report);
      if (!v.report.ok()) {
        failed = true;
        err << cfg.files[i] << " (" << v.kind << "):\n" << v.report.summary();
      }
    }
    results.push_back(x);
  }
  Json j;
  j["ok"] = !unreadable && !failed;
  j["results"] = results;
  emit(cfg, dump(j), out);
  if (unreadable) return kInvalidParameters;
  return failed ? kInvariantFailure : kOk;
}

}  // namespace

int thread_budget() {
  if (const char* env = std::getenv("SPR_SPARSIFY_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 256L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hammock decompositions, scattering partitions and SPR minors"};
  app.require_subcommand(1);
  RunConfig cfg;
  struct Sub {
    CLI::App* app;
    Options options;
  };
  std::vector<std::pair<std::string, std::string>> names = {
      {"generate", "write a random series-parallel graph"},
      {"decompose", "hammock decomposition of a series-parallel graph"},
      {"chop", "scattering chop of width --delta"},
      {"partition", "scattering partition of diameter --delta"},
      {"spr", "Voronoi SPR minor on the terminals"},
      {"verify", "check artifact files against the --in graph"},
      {"ears", "nested ear decomposition of a 2-connected graph"}};
  std::vector<Sub> subs;
  for (const auto& [name, help] : names) {
    auto* sub = app.add_subcommand(name, help);
    subs.push_back({sub, add_flags(sub, cfg)});
    if (name == "verify") sub->add_option("files", cfg.files, "artifact JSON files");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return e.get_exit_code() == 0 ? kOk : kInvalidParameters;
  }

  try {
    for (auto& s : subs) {
      if (!s.app->parsed()) continue;
      apply_config(cfg, s.options);
      const std::string name = s.app->get_name();
      if (name == "generate") return cmd_generate(cfg, out);
      if (name == "decompose") return cmd_decompose(cfg, out, err);
      if (name == "chop") return cmd_chop(cfg, out, err);
      if (name == "partition") return cmd_partition(cfg, out, err);
      if (name == "spr") return cmd_spr(cfg, out, err);
      if (name == "verify") return cmd_verify(cfg, out, err);
      if (name == "ears") return cmd_ears(cfg, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidParameters;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidParameters;
  } catch (const LemmaViolation& e) {
    err << "invariant failure: " << e.what() << "\n";
    return kInvariantFailure;
  }
  return kInvalidParameters;
}

}  // namespace sparsify::cli
