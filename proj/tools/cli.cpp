#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "lspan/base_spanner.hpp"
#include "lspan/generators.hpp"
#include "lspan/io.hpp"
#include "lspan/mst.hpp"
#include "lspan/verify.hpp"

#ifndef LSPAN_VERSION
#define LSPAN_VERSION "0.0.0"
#endif

namespace lspan::cli {
namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Output sink: a file when a path is given, otherwise the fallback stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw IoError("cannot open " + path + " for writing");
    stream_ = file_.get();
  }
  std::ostream& get() { return *stream_; }
  void close(const std::string& path) {
    if (!file_) return;
    file_->close();
    if (!*file_) throw IoError("write to " + path + " failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

WeightedGraph load_graph(const std::string& path) {
  try {
    return read_graph_file(path);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + std::string(e.what()).substr(std::string(e.what()).find(':') + 2));
  } catch (const std::ios_base::failure& e) {
    throw IoError(e.what());
  }
}

PointSet load_points(const std::string& path) {
  try {
    return read_points_file(path);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + std::string(e.what()).substr(std::string(e.what()).find(':') + 2));
  } catch (const std::ios_base::failure& e) {
    throw IoError(e.what());
  }
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(tok, &used);
    } catch (const std::exception&) {
      throw InvalidInput("bad list element '" + tok + "'");
    }
    if (used != tok.size()) throw InvalidInput("bad list element '" + tok + "'");
    v.push_back(x);
  }
  return v;
}

struct BuildOptions {
  std::string input;
  double epsilon = 0.25;
  double epsilonBase = 0.0;
  int k = 2;
  double radius = 1.0;
  double psi = 0.0;
  double t = 2.0;
  bool strict = false;
  std::uint64_t seed = 1;
  std::string tracePath;
  std::string outPath;
  std::string statsPath;
  bool noTimings = false;
  bool pointsInput = false;
};

nlohmann::json manifest(const std::string& sub, const BuildOptions& o) {
  return {{"subcommand", sub},
          {"input", o.input},
          {"config",
           {{"epsilon", o.epsilon},
            {"epsilon_base", o.epsilonBase},
            {"k", o.k},
            {"radius", o.radius},
            {"psi", o.psi},
            {"strict", o.strict}}},
          {"outputs", {{"spanner", o.outPath}, {"stats", o.statsPath}, {"trace", o.tracePath}}},
          {"seed", o.seed},
          {"version", LSPAN_VERSION}};
}

// Writes the spanner and the stats document. Without --out the spanner goes to
// stdout and the stats only to --stats; with --out the stats default to stdout.
void emit(const WeightedGraph& graph, const std::vector<EdgeId>& edges, const nlohmann::json& stats,
          const BuildOptions& o, std::ostream& out) {
  {
    Sink s(o.outPath, out);
    write_edges(s.get(), graph, edges);
    s.close(o.outPath);
  }
  if (!o.statsPath.empty() || !o.outPath.empty()) {
    Sink s(o.statsPath, out);
    s.get() << stats.dump(2) << '\n';
    s.close(o.statsPath);
  }
}

int cmd_build(const std::string& mode, const BuildOptions& o, std::ostream& out, std::ostream& err) {
  if (mode == "greedy") {
    if (!(o.t >= 1.0)) throw InvalidInput("--t must be at least 1");
    WeightedGraph g = o.pointsInput ? complete_euclidean(load_points(o.input)) : load_graph(o.input);
    if (!g.connected()) throw DisconnectedGraph("input graph is disconnected");
    auto t0 = std::chrono::steady_clock::now();
    std::vector<EdgeId> h = greedy_spanner(g, o.t);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    StretchReport rep = measure_stretch(g, h);
    double mst = g.total_weight(build_mst(g));
    nlohmann::json j = {{"mode", "greedy"},
                        {"n", g.n()},
                        {"m", g.m()},
                        {"t", o.t},
                        {"stretch_target", o.t},
                        {"stretch_measured", rep.maxStretch},
                        {"weight", g.total_weight(h)},
                        {"lightness", mst > 0.0 ? g.total_weight(h) / mst : 1.0},
                        {"sparsity", g.n() > 1 ? static_cast<double>(h.size()) / (g.n() - 1) : 0.0},
                        {"mst_weight", mst},
                        {"spanner_edges", h.size()},
                        {"timings_ms", {{"total", o.noTimings ? 0.0 : ms}}}};
    j["manifest"] = manifest("build greedy", o);
    emit(g, h, j, o, out);
    bool ok = rep.maxStretch <= o.t * (1.0 + 1e-9);
    if (!ok) err << "stretch " << rep.maxStretch << " exceeds t = " << o.t << '\n';
    return ok ? kOk : kVerifyFailed;
  }

  PipelineConfig cfg;
  cfg.k = o.k;
  cfg.epsilon = o.epsilon;
  cfg.epsilonBase = o.epsilonBase;
  cfg.psi = o.psi;
  cfg.radius = o.radius;
  cfg.strict = o.strict;
  cfg.seed = o.seed;
  cfg.trace = !o.tracePath.empty();
  SpannerResult res;
  if (mode == "general" || mode == "minor") {
    WeightedGraph g = load_graph(o.input);
    res = mode == "general" ? light_spanner_general(g, cfg) : light_spanner_minor_free(g, cfg);
  } else {
    PointSet p = load_points(o.input);
    cfg.mode = mode == "euclidean" ? Mode::Euclidean : Mode::Udg;
    if (cfg.mode == Mode::Udg && !(o.radius > 0.0)) throw InvalidInput("--radius must be positive");
    res = light_spanner_geometric(p, cfg);
  }
  nlohmann::json j = stats_json(res, !o.noTimings);
  j["manifest"] = manifest("build " + mode, o);
  emit(res.graph, res.edges, j, o, out);
  if (!o.tracePath.empty()) {
    Sink s(o.tracePath, out);
    s.get() << res.traceText;
    s.close(o.tracePath);
  }
  int code = kOk;
  if (!res.stretch_ok()) {
    err << "stretch " << res.stats.stretchMeasured << " exceeds target " << res.stats.stretchTarget << '\n';
    code = kVerifyFailed;
  }
  for (const std::string& f : res.invariantFailures) {
    err << "invariant: " << f << '\n';
    code = kVerifyFailed;
  }
  return code;
}

struct GenOptions {
  int n = 10;
  int m = -1;
  int d = 2;
  int side = 4;
  double wmin = 1.0;
  double wmax = 1000.0;
  std::uint64_t seed = 1;
  std::string outPath;
  std::string pointsOut;
};

int cmd_gen(const std::string& kind, const GenOptions& o, std::ostream& out) {
  Sink s(o.outPath, out);
  if (kind == "graph") {
    int m = o.m < 0 ? 2 * o.n : o.m;
    write_graph(s.get(), random_connected_graph(o.n, m, o.wmin, o.wmax, o.seed));
  } else if (kind == "points") {
    write_points(s.get(), uniform_points(o.n, o.d, o.seed));
  } else if (kind == "grid") {
    write_graph(s.get(), grid_graph(o.side));
  } else {
    PointSet p;
    WeightedGraph g = planar_triangulation(o.n, o.seed, &p);
    write_graph(s.get(), g);
    if (!o.pointsOut.empty()) {
      Sink ps(o.pointsOut, out);
      write_points(ps.get(), p);
      ps.close(o.pointsOut);
    }
  }
  s.close(o.outPath);
  return kOk;
}

struct SweepOptions {
  std::string mode = "general";
  std::string ns = "64,128,256";
  std::string ms;
  std::string eps = "0.25";
  std::string ks = "2";
  double density = 8.0;
  int seeds = 1;
  std::uint64_t seed = 1;
  double radius = 0.15;
  int d = 2;
  bool strict = false;
  bool noTimings = false;
  std::string outPath;
};

int to_int(double x, const char* what) {
  if (x != std::floor(x) || x < 0 || x > 1e9) throw InvalidInput(std::string("bad ") + what + " value");
  return static_cast<int>(x);
}

int cmd_sweep(const SweepOptions& o, std::ostream& out, std::ostream& err) {
  if (o.mode != "general" && o.mode != "minor" && o.mode != "euclidean" && o.mode != "udg")
    throw InvalidInput("unknown sweep mode '" + o.mode + "'");
  if (o.seeds < 1) throw InvalidInput("--seeds must be positive");
  if (!(o.density >= 1.0)) throw InvalidInput("--density must be at least 1");
  // Sizes: explicit n values, or n derived from m values at the given density.
  std::vector<std::pair<int, int>> sizes;
  if (!o.ms.empty()) {
    for (double mv : parse_list(o.ms)) {
      int m = to_int(mv, "m");
      sizes.push_back({std::max(2, static_cast<int>(std::llround(m / o.density))), m});
    }
  } else {
    for (double nv : parse_list(o.ns)) {
      int n = to_int(nv, "n");
      long long m = static_cast<long long>(std::llround(o.density * n));
      sizes.push_back({n, static_cast<int>(m)});
    }
  }
  std::vector<double> epsList = parse_list(o.eps);
  std::vector<double> kList = parse_list(o.ks);
  if (sizes.empty() || epsList.empty() || kList.empty()) throw InvalidInput("empty sweep list");

  Sink s(o.outPath, out);
  s.get() << kSweepColumns << '\n';
  int failures = 0;
  double prevTotal = 0.0;
  for (auto [n, mWanted] : sizes) {
    double sizeTotal = 0.0;
    int sizeRuns = 0;
    for (double e : epsList) {
      for (double kv : kList) {
        for (int r = 0; r < o.seeds; ++r) {
          PipelineConfig cfg;
          cfg.epsilon = e;
          cfg.k = to_int(kv, "k");
          cfg.seed = o.seed + static_cast<std::uint64_t>(r);
          cfg.strict = o.strict;
          cfg.radius = o.radius;
          SpannerResult res;
          if (o.mode == "general") {
            long long cap = static_cast<long long>(n) * (n - 1) / 2;
            int m = static_cast<int>(std::clamp<long long>(mWanted, n - 1, cap));
            res = light_spanner_general(random_connected_graph(n, m, 1.0, 1000.0, cfg.seed), cfg);
          } else if (o.mode == "minor") {
            res = light_spanner_minor_free(planar_triangulation(n, cfg.seed), cfg);
          } else {
            cfg.mode = o.mode == "euclidean" ? Mode::Euclidean : Mode::Udg;
            res = light_spanner_geometric(uniform_points(n, o.d, cfg.seed), cfg);
          }
          s.get() << sweep_row(res, !o.noTimings) << '\n';
          if (!res.stretch_ok() || !res.invariantFailures.empty()) ++failures;
          sizeTotal += res.stats.timings.total;
          ++sizeRuns;
        }
      }
    }
    double mean = sizeTotal / sizeRuns;
    if (!o.noTimings && prevTotal > 0.0)
      err << "# n=" << n << " mean time ratio vs previous size: " << mean / prevTotal << '\n';
    prevTotal = mean;
  }
  s.close(o.outPath);
  if (failures > 0) err << failures << " run(s) failed stretch or invariant checks\n";
  return failures > 0 ? kVerifyFailed : kOk;
}

struct VerifyOptions {
  std::string input;
  std::string spanner;
  bool pointsInput = false;
  double radius = 0.0;
  double t = 0.0;
  std::string reportPath;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  WeightedGraph h = load_graph(o.spanner);
  nlohmann::json j;
  bool ok = true;
  std::vector<std::string> problems;
  double maxStretch = 1.0;
  double mst = 0.0;
  if (!o.pointsInput) {
    WeightedGraph g = load_graph(o.input);
    if (h.n() != g.n()) throw InvalidInput("spanner and input vertex counts differ");
    std::map<std::pair<int, int>, std::vector<EdgeId>> byPair;
    for (EdgeId id = 0; id < g.m(); ++id) {
      const Edge& e = g.edge(id);
      byPair[{std::min(e.u, e.v), std::max(e.u, e.v)}].push_back(id);
    }
    std::vector<EdgeId> ids;
    for (const Edge& e : h.edges()) {
      auto it = byPair.find({std::min(e.u, e.v), std::max(e.u, e.v)});
      EdgeId match = -1;
      if (it != byPair.end()) {
        for (EdgeId id : it->second) {
          if (std::abs(g.edge(id).w - e.w) <= 1e-9 * e.w && (match < 0 || g.edge(id).w < g.edge(match).w)) match = id;
        }
      }
      if (match < 0) {
        problems.push_back("spanner edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " is not an input edge");
        continue;
      }
      ids.push_back(match);
    }
    mst = g.total_weight(build_mst(g));
    try {
      StretchReport rep = measure_stretch(g, ids);
      maxStretch = rep.maxStretch;
      j["checked"] = rep.checked;
      if (rep.witness >= 0) j["witness"] = {g.edge(rep.witness).u, g.edge(rep.witness).v};
    } catch (const NotSpanning& e) {
      problems.push_back(e.what());
    }
  } else {
    PointSet p = load_points(o.input);
    p.require_distinct();
    if (h.n() != p.n()) throw InvalidInput("spanner and point counts differ");
    for (const Edge& e : h.edges()) {
      double d = p.distance(e.u, e.v);
      if (std::abs(d - e.w) > 1e-9 * d)
        problems.push_back("spanner edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                           " weight differs from the distance");
      if (o.radius > 0.0 && d > o.radius * (1.0 + 1e-12))
        problems.push_back("spanner edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " is longer than the radius");
    }
    std::optional<std::vector<std::pair<int, int>>> pairs;
    WeightedGraph ref;
    if (o.radius > 0.0) {
      pairs = udg_pairs(p, o.radius);
      ref = WeightedGraph(p.n());
      for (auto [a, b] : *pairs) ref.add_edge(a, b, p.distance(a, b));
    } else {
      ref = complete_euclidean(p);
    }
    try {
      mst = ref.total_weight(build_mst(ref));
    } catch (const DisconnectedGraph&) {
      problems.push_back("reference graph is disconnected");
    }
    PairStretchReport rep = measure_pair_stretch(p, h, pairs ? &*pairs : nullptr);
    maxStretch = rep.maxStretch;
    j["checked"] = rep.checked;
    j["witness"] = {rep.a, rep.b};
  }
  j["stretch_measured"] = maxStretch;
  j["weight"] = h.total_weight();
  j["lightness"] = mst > 0.0 ? h.total_weight() / mst : 1.0;
  j["sparsity"] = h.n() > 1 ? static_cast<double>(h.m()) / (h.n() - 1) : 0.0;
  if (o.t > 0.0) {
    j["stretch_target"] = o.t;
    if (!(maxStretch <= o.t * (1.0 + 1e-9))) problems.push_back("stretch exceeds target");
  }
  if (!std::isfinite(maxStretch)) problems.push_back("spanner does not connect some pair");
  ok = problems.empty();
  j["problems"] = problems;
  j["passed"] = ok;
  Sink s(o.reportPath, out);
  s.get() << j.dump(2) << '\n';
  s.close(o.reportPath);
  for (const std::string& p : problems) err << p << '\n';
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Light spanner constructions, generators and verification", "lspan"};
  app.set_version_flag("--version", LSPAN_VERSION);
  app.require_subcommand(1);

  // build
  BuildOptions bo;
  std::string buildMode;
  CLI::App* build = app.add_subcommand("build", "Build a spanner from a graph or point file");
  build->require_subcommand(1);
  for (const char* mode : {"general", "euclidean", "udg", "minor", "greedy"}) {
    CLI::App* sub = build->add_subcommand(mode, std::string("Build in ") + mode + " mode");
    sub->add_option("input", bo.input, "Input graph or point file")->required();
    sub->add_option("--out", bo.outPath, "Spanner edge list (default stdout)");
    sub->add_option("--stats", bo.statsPath, "Stats JSON path");
    sub->add_flag("--no-timings", bo.noTimings, "Write zero timings so output is reproducible byte for byte");
    if (std::string(mode) == "greedy") {
      sub->add_option("--t", bo.t, "Stretch parameter")->capture_default_str();
      sub->add_flag("--points", bo.pointsInput, "Input is a point file; use the complete Euclidean graph");
    } else {
      sub->add_option("--epsilon", bo.epsilon, "Epsilon")->capture_default_str();
      sub->add_option("--psi", bo.psi, "Class granularity (default: internal epsilon)");
      sub->add_flag("--strict", bo.strict, "Scale epsilon to the certified constants and check all invariants");
      sub->add_option("--seed", bo.seed, "Random seed")->capture_default_str();
      sub->add_option("--trace", bo.tracePath, "Per-level cluster dump path");
      if (std::string(mode) == "general") sub->add_option("--k", bo.k, "Stretch parameter k")->capture_default_str();
      if (std::string(mode) == "euclidean" || std::string(mode) == "udg")
        sub->add_option("--epsilon-base", bo.epsilonBase, "Base cone spanner epsilon (default: epsilon)");
      if (std::string(mode) == "udg") sub->add_option("--radius", bo.radius, "Disk radius")->capture_default_str();
    }
    sub->callback([&buildMode, mode] { buildMode = mode; });
  }

  // gen
  GenOptions go;
  std::string genKind;
  CLI::App* gen = app.add_subcommand("gen", "Generate seeded inputs");
  gen->require_subcommand(1);
  {
    CLI::App* g = gen->add_subcommand("graph", "Random connected weighted graph");
    g->add_option("--n", go.n)->capture_default_str();
    g->add_option("--m", go.m, "Edge count (default 2n)");
    g->add_option("--wmin", go.wmin)->capture_default_str();
    g->add_option("--wmax", go.wmax)->capture_default_str();
    g->add_option("--seed", go.seed)->capture_default_str();
    g->add_option("--out", go.outPath);
    g->callback([&genKind] { genKind = "graph"; });
    CLI::App* p = gen->add_subcommand("points", "Uniform points in the unit cube");
    p->add_option("--n", go.n)->capture_default_str();
    p->add_option("--d", go.d)->capture_default_str();
    p->add_option("--seed", go.seed)->capture_default_str();
    p->add_option("--out", go.outPath);
    p->callback([&genKind] { genKind = "points"; });
    CLI::App* r = gen->add_subcommand("grid", "Unit-weight grid graph");
    r->add_option("--side", go.side)->capture_default_str();
    r->add_option("--out", go.outPath);
    r->callback([&genKind] { genKind = "grid"; });
    CLI::App* t = gen->add_subcommand("planar", "Random stacked planar triangulation");
    t->add_option("--n", go.n)->capture_default_str();
    t->add_option("--seed", go.seed)->capture_default_str();
    t->add_option("--out", go.outPath);
    t->add_option("--points-out", go.pointsOut, "Vertex positions");
    t->callback([&genKind] { genKind = "planar"; });
  }

  // sweep
  SweepOptions so;
  CLI::App* sweep = app.add_subcommand("sweep", "Run the pipeline over a parameter grid and write CSV");
  sweep->add_option("--mode", so.mode, "general, minor, euclidean or udg")->capture_default_str();
  sweep->add_option("--n", so.ns, "Comma-separated sizes")->capture_default_str();
  sweep->add_option("--m", so.ms, "Comma-separated edge counts; n = m / density");
  sweep->add_option("--epsilon", so.eps, "Comma-separated epsilons")->capture_default_str();
  sweep->add_option("--k", so.ks, "Comma-separated k values")->capture_default_str();
  sweep->add_option("--density", so.density, "Edges per vertex for generated graphs")->capture_default_str();
  sweep->add_option("--seeds", so.seeds, "Runs per grid point")->capture_default_str();
  sweep->add_option("--seed", so.seed, "First seed")->capture_default_str();
  sweep->add_option("--radius", so.radius)->capture_default_str();
  sweep->add_option("--d", so.d)->capture_default_str();
  sweep->add_flag("--strict", so.strict);
  sweep->add_flag("--no-timings", so.noTimings);
  sweep->add_option("--out", so.outPath, "CSV path (default stdout)");

  // verify
  VerifyOptions vo;
  CLI::App* verify = app.add_subcommand("verify", "Measure the stretch of a spanner file against its input");
  verify->add_option("input", vo.input, "Input graph or point file")->required();
  verify->add_option("spanner", vo.spanner, "Spanner edge list")->required();
  verify->add_flag("--points", vo.pointsInput, "Input is a point file");
  verify->add_option("--radius", vo.radius, "Unit disk radius for point input (default: all pairs)");
  verify->add_option("--t", vo.t, "Fail when the stretch exceeds this value");
  verify->add_option("--report", vo.reportPath, "Report JSON path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (build->parsed()) return cmd_build(buildMode, bo, out, err);
    if (gen->parsed()) return cmd_gen(genKind, go, out);
    if (sweep->parsed()) return cmd_sweep(so, out, err);
    return cmd_verify(vo, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NotSpanning& e) {
    err << "error: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const Error& e) {
    // Disconnected graphs, duplicate points and dimension errors are input-file problems.
    err << "error: " << e.what() << '\n';
    return kIo;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> storage = args;
  std::vector<char*> argv;
  argv.reserve(storage.size());
  for (std::string& s : storage) argv.push_back(s.data());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace lspan::cli
