#include "lspan/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "lspan/base_spanner.hpp"
#include "lspan/generators.hpp"
#include "lspan/hierarchy.hpp"
#include "lspan/io.hpp"
#include "lspan/leveling.hpp"
#include "lspan/mst.hpp"
#include "lspan/verify.hpp"

namespace lspan {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

const char* to_string(Mode m) {
  switch (m) {
    case Mode::General: return "general";
    case Mode::Euclidean: return "euclidean";
    case Mode::Udg: return "udg";
    case Mode::MinorFree: return "minor";
  }
  return "?";
}

double ssa_stretch_constant(Mode mode) {
  switch (mode) {
    case Mode::General: return general_stretch_constant(2.0 * kG);
    case Mode::Euclidean:
    case Mode::Udg: return geom_stretch_constant(2.0 * kG);
    case Mode::MinorFree: return 0.0;
  }
  return 0.0;
}

double stretch_rho(Mode mode) { return std::max(ssa_stretch_constant(mode) + 4.0 * kG, 10.0 * kG); }

double internal_epsilon(const PipelineConfig& cfg) {
  if (!cfg.strict) return cfg.epsilon;
  return std::min(cfg.epsilon / stretch_rho(cfg.mode), 1.0 / 256.0);
}

double stretch_parameter(const PipelineConfig& cfg) {
  if (cfg.mode == Mode::General) return 2.0 * cfg.k - 1.0;
  return 1.0 + internal_epsilon(cfg);
}

double stretch_target(const PipelineConfig& cfg) {
  double target = stretch_parameter(cfg) * (1.0 + stretch_rho(cfg.mode) * internal_epsilon(cfg));
  if (cfg.mode == Mode::Euclidean || cfg.mode == Mode::Udg)
    target *= 1.0 + (cfg.epsilonBase > 0.0 ? cfg.epsilonBase : cfg.epsilon);
  return target;
}

std::string level_dump_text(const LevelDump& d) {
  std::ostringstream out;
  std::vector<int> size(d.phi.size(), 0);
  for (int c : d.clusterOf) ++size[c];
  out << "level sigma=" << d.sigma << " i=" << d.level << " L=" << format_double(d.L) << " clusters=" << d.phi.size()
      << '\n';
  for (std::size_t c = 0; c < d.phi.size(); ++c) out << c << ' ' << format_double(d.phi[c]) << ' ' << size[c] << '\n';
  for (const TreeEdge& e : d.cg.tree) out << "tree " << e.a << ' ' << e.b << ' ' << format_double(e.w) << '\n';
  for (const ClassEdge& e : d.cg.cls) out << "class " << e.a << ' ' << e.b << ' ' << format_double(e.w) << '\n';
  return out.str();
}

std::vector<EdgeId> build_Hi(const ClusterGraph& cg, const ClusteringOutcome& outcome, const SsaBackend& backend,
                             const PositionFn& position, int dimension, LevelStats* stats) {
  const int E = static_cast<int>(cg.cls.size());
  std::vector<char> take(E, 0);
  for (const Subgraph& X : outcome.subgraphs)
    for (int k : X.classEdges) take[k] = 1;
  std::vector<int> local(cg.n, -1);
  SsaInput in;
  in.L = cg.L / (1.0 + cg.psi);
  in.eps = cg.eps;
  in.beta = 2.0 * kG;
  for (int x = 0; x < cg.n; ++x)
    if (outcome.nodeClass[x] == NodeClass::High) {
      local[x] = in.nodeCount++;
      in.rep.push_back(cg.rep[x]);
    }
  std::vector<int> kIndex;
  for (int k = 0; k < E; ++k) {
    const ClassEdge& e = cg.cls[k];
    if (local[e.a] < 0 || local[e.b] < 0) {
      take[k] = 1;
      continue;
    }
    in.edges.push_back({local[e.a], local[e.b], e.w});
    in.source.push_back(e.src);
    kIndex.push_back(k);
  }
  int kept = 0;
  if (!in.edges.empty()) {
    if (position) {
      in.positions.resize(static_cast<std::size_t>(in.nodeCount) * dimension);
      for (int j = 0; j < in.nodeCount; ++j) position(in.rep[j], in.positions.data() + static_cast<std::size_t>(j) * dimension);
    }
    SsaOutput out = backend(in);
    for (int j : out.pruned) take[kIndex[j]] = 1;
    kept = static_cast<int>(out.pruned.size());
  }
  std::vector<EdgeId> hi;
  double w = 0.0;
  for (int k = 0; k < E; ++k)
    if (take[k]) {
      hi.push_back(cg.cls[k].src);
      w += cg.cls[k].w;
    }
  std::sort(hi.begin(), hi.end());
  if (stats) {
    stats->hiEdges = static_cast<int>(hi.size());
    stats->hiWeight = w;
    stats->highNodes = in.nodeCount;
    stats->ssaEdgesIn = static_cast<int>(in.edges.size());
    stats->ssaEdgesKept = kept;
  }
  return hi;
}

TransformOutput light_transform(const WeightedGraph& g, const TransformParams& P) {
  if (!(P.eps > 0.0 && P.eps < 1.0)) throw InvalidInput("epsilon must lie in (0, 1)");
  if (!(P.psi > 0.0 && P.psi <= 1.0)) throw InvalidInput("psi must lie in (0, 1]");
  if (!(P.t >= 1.0)) throw InvalidInput("t must be at least 1");
  if (!P.backend) throw InvalidInput("no sparse spanner backend given");
  TransformOutput out;
  auto tStart = Clock::now();
  if (g.n() <= 1) return out;

  auto t0 = Clock::now();
  const WeightedGraph gs = g.scaled(1.0 / g.min_weight());
  out.mst = build_mst(gs);
  const double wMst = gs.total_weight(out.mst);
  out.timings.mst = ms_since(t0);

  t0 = Clock::now();
  std::vector<char> inMst(gs.m(), 0);
  for (EdgeId id : out.mst) inMst[id] = 1;
  std::vector<EdgeId> candidates;
  int kept = 0;
  for (EdgeId id : dedup_parallel(gs)) {
    if (gs.edge(id).w > wMst) continue;
    ++kept;
    if (!inMst[id]) candidates.push_back(id);
  }
  const double wbar = wMst / kept;
  const LevelSchedule schedule = classify_edges(gs, wbar, P.eps, P.psi, &candidates);
  const SubdividedMst smst = subdivide_mst(gs, out.mst, wbar);
  out.mu = schedule.mu;
  out.lightEdges = static_cast<int>(schedule.light.size());
  out.timings.leveling = ms_since(t0);

  PositionFn position;
  int dim = 0;
  if (P.points) {
    dim = P.points->d();
    position = [&smst, &P, dim](Vertex x, double* outPos) {
      const PointSet& p = *P.points;
      if (!smst.is_virtual(x)) {
        std::copy(p.point(x), p.point(x) + dim, outPos);
        return;
      }
      const Segment& s = smst.segment_of(x);
      double f = static_cast<double>(x - s.virtuals.front() + 1) / static_cast<double>(s.virtuals.size() + 1);
      for (int c = 0; c < dim; ++c) outPos[c] = p.point(s.u)[c] + f * (p.point(s.v)[c] - p.point(s.u)[c]);
    };
  }

  if (P.trace) {
    HierarchyTrace tr;
    tr.n = gs.n();
    tr.extendedCount = smst.extendedCount;
    tr.mstWeight = wMst;
    tr.subEdges = smst.subEdges;
    tr.edges = gs.edges();
    out.trace = std::move(tr);
  }
  std::ostringstream traceText;
  std::vector<EdgeId> base = schedule.light;
  base.insert(base.end(), out.mst.begin(), out.mst.end());

  auto perClass = [&](const LevelSchedule::SigmaClass& sc) {
    ++out.sigmaClasses;
    const int sigma = sc.sigma;
    auto th = Clock::now();
    UnionFind uf = make_union_find(smst);
    ClusterLevel level = build_level1(smst, schedule.L0(sigma), uf);
    level.L = schedule.upper(sigma, 1);
    level.Lprev = schedule.L0(sigma);
    NodeIndex nodes(smst.extendedCount);
    std::vector<EdgeId> hs;
    double hierarchyMs = ms_since(th), ssaMs = 0.0;
    for (int i = 1; i <= sc.max_level(); ++i) {
      th = Clock::now();
      nodes.bind(level);
      ClusterGraph cg = build_cluster_graph(level, gs, sc.levels[i], uf, nodes, {P.eps, P.psi, P.t});
      ClusteringOutcome outcome = run_clustering(cg);
      hierarchyMs += ms_since(th);

      LevelStats st;
      st.sigma = sigma;
      st.level = i;
      st.L = cg.L;
      st.clusters = cg.n;
      st.classEdges = static_cast<int>(cg.cls.size());
      st.rawClassEdges = cg.rawEdges;
      st.removable = cg.removable;
      st.phi = level.total_potential();
      st.degenerate = outcome.degenerate;
      st.terminal = outcome.terminal;
      double nextPhi = 0.0;
      for (const Subgraph& X : outcome.subgraphs) {
        st.delta += X.delta;
        st.deltaPlus += X.deltaPlus;
        nextPhi += X.adm;
      }
      auto ts = Clock::now();
      std::vector<EdgeId> hi = build_Hi(cg, outcome, P.backend, position, dim, &st);
      ssaMs += ms_since(ts);
      if (!outcome.degenerate && st.deltaPlus > 0.0) st.lambda = st.hiWeight / st.deltaPlus;

      th = Clock::now();
      if (out.trace) {
        traceText << trace_lines(outcome, sigma, i);
        LevelDump d;
        d.sigma = sigma;
        d.level = i;
        d.L = cg.L;
        d.Lprev = cg.Lprev;
        d.eps = P.eps;
        d.clusterOf = cluster_assignment(level, uf, smst.extendedCount);
        d.phi = level.phi;
        d.spannerBefore = base;
        d.spannerBefore.insert(d.spannerBefore.end(), hs.begin(), hs.end());
        std::sort(d.spannerBefore.begin(), d.spannerBefore.end());
        d.spannerBefore.erase(std::unique(d.spannerBefore.begin(), d.spannerBefore.end()), d.spannerBefore.end());
        d.hi = hi;
        d.nextPhiTotal = nextPhi;
        d.cg = cg;
        d.outcome = outcome;
        traceText << level_dump_text(d);
        out.trace->levels.push_back(std::move(d));
      }
      hs.insert(hs.end(), hi.begin(), hi.end());
      if (i < sc.max_level()) level = contract_level(level, cg, outcome, uf, schedule.upper(sigma, i + 1));
      hierarchyMs += ms_since(th);
      out.levels.push_back(st);
    }
    out.timings.hierarchy += hierarchyMs;
    out.timings.ssa += ssaMs;
    return hs;
  };
  out.edges = reduce_over_sigma(schedule, out.mst, perClass);
  out.traceText = traceText.str();
  out.timings.total = ms_since(tStart);
  return out;
}

namespace {

void fill_common(SpannerResult& res, const PipelineConfig& cfg, const TransformOutput& tr) {
  SpannerStats& s = res.stats;
  s.mode = cfg.mode;
  s.n = res.graph.n();
  s.m = res.graph.m();
  s.k = cfg.mode == Mode::General ? cfg.k : 0;
  s.epsilonUser = cfg.epsilon;
  s.epsilonInternal = internal_epsilon(cfg);
  s.psi = cfg.psi > 0.0 ? cfg.psi : s.epsilonInternal;
  s.t = stretch_parameter(cfg);
  s.rho = stretch_rho(cfg.mode);
  s.stretchTarget = stretch_target(cfg);
  s.weight = res.graph.total_weight(res.edges);
  s.mstWeight = res.graph.total_weight(tr.mst);
  s.lightness = s.mstWeight > 0.0 ? s.weight / s.mstWeight : 1.0;
  s.sparsity = s.n > 1 ? static_cast<double>(res.edges.size()) / (s.n - 1) : 0.0;
  s.mu = tr.mu;
  s.sigmaClasses = tr.sigmaClasses;
  s.lightEdges = tr.lightEdges;
  s.seed = cfg.seed;
  s.timings = tr.timings;
  for (const LevelStats& l : tr.levels) s.lambdaMeasured = std::max(s.lambdaMeasured, l.lambda);
  res.levels = tr.levels;
  res.traceText = tr.traceText;
}

void check_invariants(SpannerResult& res, const PipelineConfig& cfg, TransformOutput& tr) {
  if (!tr.trace) return;
  VerificationReport rep = check_hierarchy(*tr.trace);
  res.invariantFailures = rep.failures();
  res.invariantsChecked = true;
  if (cfg.trace) res.trace = std::move(tr.trace);
}

std::vector<EdgeId> sample_edges(int m, int count, const std::vector<EdgeId>& always, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x5eedf00dULL);
  std::vector<EdgeId> ids(m);
  std::iota(ids.begin(), ids.end(), 0);
  int take = std::min(count, m);
  for (int j = 0; j < take; ++j) std::swap(ids[j], ids[j + uniform_index(rng, m - j)]);
  ids.resize(take);
  ids.insert(ids.end(), always.begin(), always.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

SpannerResult run_graph_mode(const WeightedGraph& g, const PipelineConfig& cfg, SsaBackend backend) {
  if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0)) throw InvalidInput("epsilon must lie in (0, 1)");
  if (cfg.mode == Mode::General && cfg.k < 2) throw InvalidInput("k must be at least 2");
  if (!g.connected()) throw DisconnectedGraph("input graph is disconnected");
  TransformParams P;
  P.eps = internal_epsilon(cfg);
  P.psi = cfg.psi > 0.0 ? cfg.psi : P.eps;
  P.t = stretch_parameter(cfg);
  P.backend = std::move(backend);
  P.trace = cfg.trace || cfg.strict;
  TransformOutput tr = light_transform(g, P);
  SpannerResult res;
  res.graph = g;
  res.edges = tr.edges;
  fill_common(res, cfg, tr);
  if (cfg.verify && g.m() > 0) {
    auto t0 = Clock::now();
    StretchReport rep;
    if (g.n() <= cfg.exactVerifyCap) {
      rep = measure_stretch(g, res.edges);
      res.stats.stretchExact = true;
    } else {
      rep = measure_stretch(g, res.edges, sample_edges(g.m(), cfg.sampleSize, tr.mst, cfg.seed));
      res.stats.stretchExact = false;
    }
    res.stats.stretchMeasured = rep.maxStretch;
    res.stats.stretchChecked = rep.checked;
    if (rep.witness >= 0) {
      res.stats.witnessU = g.edge(rep.witness).u;
      res.stats.witnessV = g.edge(rep.witness).v;
    }
    res.stats.timings.verify = ms_since(t0);
  }
  check_invariants(res, cfg, tr);
  return res;
}

}  // namespace

SpannerResult light_spanner_general(const WeightedGraph& g, const PipelineConfig& cfg) {
  PipelineConfig c = cfg;
  c.mode = Mode::General;
  const int k = c.k;
  const std::uint64_t seed = c.seed;
  return run_graph_mode(g, c, [k, seed](const SsaInput& in) { return ssa_general(in, k, seed); });
}

SpannerResult light_spanner_minor_free(const WeightedGraph& g, const PipelineConfig& cfg) {
  PipelineConfig c = cfg;
  c.mode = Mode::MinorFree;
  return run_graph_mode(g, c, [](const SsaInput& in) { return ssa_minor(in); });
}

SpannerResult light_spanner_geometric(const PointSet& points, const PipelineConfig& cfg) {
  if (cfg.mode != Mode::Euclidean && cfg.mode != Mode::Udg)
    throw InvalidInput("geometric construction needs euclidean or udg mode");
  if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0)) throw InvalidInput("epsilon must lie in (0, 1)");
  PipelineConfig c = cfg;
  c.dimension = points.d();
  const double epsBase = c.epsilonBase > 0.0 ? c.epsilonBase : c.epsilon;
  points.require_distinct();
  auto t0 = Clock::now();
  WeightedGraph base = c.mode == Mode::Euclidean ? yao_graph(points, epsBase) : udg_yao_graph(points, c.radius, epsBase);
  double baseMs = ms_since(t0);

  TransformParams P;
  P.eps = internal_epsilon(c);
  P.psi = c.psi > 0.0 ? c.psi : P.eps;
  P.t = stretch_parameter(c);
  const int d = points.d();
  P.backend = [d](const SsaInput& in) { return ssa_geom(in, d); };
  P.points = &points;
  P.trace = c.trace || c.strict;
  TransformOutput tr = light_transform(base, P);
  tr.timings.leveling += baseMs;
  tr.timings.total += baseMs;

  SpannerResult res;
  res.graph = std::move(base);
  res.edges = tr.edges;
  fill_common(res, c, tr);
  res.stats.epsilonBase = epsBase;
  if (c.verify && points.n() > 1) {
    auto tv = Clock::now();
    WeightedGraph h = edge_subgraph(res.graph, res.edges);
    PairStretchReport rep;
    if (c.mode == Mode::Euclidean) {
      if (points.n() <= c.exactVerifyCap) {
        rep = measure_pair_stretch(points, h);
      } else {
        std::mt19937_64 rng(c.seed ^ 0x9a1c5ULL);
        std::vector<std::pair<int, int>> pairs;
        for (int j = 0; j < c.sampleSize; ++j) {
          int a = static_cast<int>(uniform_index(rng, points.n()));
          int b = static_cast<int>(uniform_index(rng, points.n() - 1));
          if (b >= a) ++b;
          pairs.push_back({a, b});
        }
        for (EdgeId id : tr.mst) pairs.push_back({res.graph.edge(id).u, res.graph.edge(id).v});
        rep = measure_pair_stretch(points, h, &pairs);
      }
    } else {
      std::vector<std::pair<int, int>> pairs = udg_pairs(points, c.radius);
      if (points.n() > c.exactVerifyCap) {
        std::vector<EdgeId> pick = sample_edges(static_cast<int>(pairs.size()), c.sampleSize, {}, c.seed);
        std::vector<std::pair<int, int>> sub;
        for (EdgeId j : pick) sub.push_back(pairs[j]);
        for (EdgeId id : tr.mst) sub.push_back({res.graph.edge(id).u, res.graph.edge(id).v});
        pairs = std::move(sub);
      }
      rep = measure_pair_stretch(points, h, &pairs);
    }
    res.stats.stretchExact = points.n() <= c.exactVerifyCap;
    res.stats.stretchMeasured = rep.maxStretch;
    res.stats.stretchChecked = rep.checked;
    res.stats.witnessU = rep.a;
    res.stats.witnessV = rep.b;
    res.stats.timings.verify = ms_since(tv);
  }
  check_invariants(res, c, tr);
  return res;
}

}  // namespace lspan
