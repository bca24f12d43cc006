#include "lspan/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "lspan/augmented.hpp"
#include "lspan/shortest_path.hpp"

namespace lspan {

namespace {

InvariantCheck named(std::string name) {
  InvariantCheck c;
  c.name = std::move(name);
  return c;
}

void record(InvariantCheck& c, double slack, const std::string& what) {
  ++c.evaluated;
  if (slack < 0.0) {
    if (c.failures == 0) c.counterexample = what;
    ++c.failures;
    c.worstSlack = std::min(c.worstSlack, slack);
  }
}

std::string describe(const char* kind, int id, double value, double bound) {
  std::ostringstream out;
  out << kind << ' ' << id << ": value " << value << " bound " << bound;
  return out.str();
}

}  // namespace

StretchReport measure_stretch(const WeightedGraph& g, const std::vector<EdgeId>& h) {
  std::vector<EdgeId> all(g.m());
  std::iota(all.begin(), all.end(), 0);
  return measure_stretch(g, h, all);
}

StretchReport measure_stretch(const WeightedGraph& g, const std::vector<EdgeId>& h,
                              const std::vector<EdgeId>& edgesToCheck) {
  AdjList adj = adjacency(g, h);
  std::vector<std::vector<EdgeId>> bySource(g.n());
  for (EdgeId id : edgesToCheck) {
    const Edge& e = g.edge(id);
    bySource[std::min(e.u, e.v)].push_back(id);
  }
  StretchReport rep;
  DijkstraWorkspace ws(g.n());
  for (int s = 0; s < g.n(); ++s) {
    if (bySource[s].empty()) continue;
    std::vector<int> targets;
    for (EdgeId id : bySource[s]) targets.push_back(g.other(id, s));
    const std::vector<double>& dist = ws.run_to(adj, s, targets);
    for (EdgeId id : bySource[s]) {
      const Edge& e = g.edge(id);
      double d = dist[g.other(id, s)];
      if (d == kInf) throw NotSpanning("edge " + std::to_string(id) + " has endpoints disconnected in the spanner");
      double r = d / e.w;
      ++rep.checked;
      if (rep.witness < 0 || r > rep.maxStretch || (r == rep.maxStretch && id < rep.witness)) {
        rep.maxStretch = r;
        rep.witness = id;
      }
    }
  }
  return rep;
}

PairStretchReport measure_pair_stretch(const PointSet& points, const WeightedGraph& h,
                                       const std::vector<std::pair<int, int>>* pairs) {
  if (h.n() != points.n()) throw DimensionMismatch("graph and point set sizes differ");
  AdjList adj = adjacency(h);
  const int n = points.n();
  std::vector<std::vector<int>> targets(n);
  if (pairs) {
    for (auto [a, b] : *pairs) targets[std::min(a, b)].push_back(std::max(a, b));
  } else {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) targets[a].push_back(b);
  }
  PairStretchReport rep;
  DijkstraWorkspace ws(n);
  for (int a = 0; a < n; ++a) {
    if (targets[a].empty()) continue;
    const std::vector<double>& dist = ws.run_to(adj, a, targets[a]);
    for (int b : targets[a]) {
      if (dist[b] == kInf) throw NotSpanning("points " + std::to_string(a) + " and " + std::to_string(b) + " are disconnected");
      double r = dist[b] / points.distance(a, b);
      ++rep.checked;
      if (rep.a < 0 || r > rep.maxStretch) {
        rep.maxStretch = r;
        rep.a = a;
        rep.b = b;
      }
    }
  }
  return rep;
}

std::vector<EdgeId> greedy_spanner(const WeightedGraph& g, double t) {
  if (!(t >= 1.0)) throw InvalidInput("stretch t must be at least 1");
  std::vector<EdgeId> order(g.m());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    double wa = g.edge(a).w, wb = g.edge(b).w;
    return wa != wb ? wa < wb : a < b;
  });
  AdjList adj(g.n());
  DijkstraWorkspace ws(g.n());
  std::vector<EdgeId> kept;
  for (EdgeId id : order) {
    const Edge& e = g.edge(id);
    double limit = t * e.w;
    if (ws.distance(adj, e.u, e.v, limit) <= limit) continue;
    kept.push_back(id);
    adj[e.u].push_back({e.v, e.w});
    adj[e.v].push_back({e.u, e.w});
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

bool VerificationReport::passed() const {
  return std::all_of(invariants.begin(), invariants.end(), [](const InvariantCheck& c) { return c.passed(); });
}

std::vector<std::string> VerificationReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : invariants)
    if (!c.passed())
      out.push_back(c.name + ": " + std::to_string(c.failures) + " of " + std::to_string(c.evaluated) + " failed; " +
                    c.counterexample);
  return out;
}

std::vector<InvariantCheck> check_clustering(const ClusterGraph& cg, const ClusteringOutcome& o,
                                             const ClusteringCheckOptions& opt) {
  const double L = cg.L;
  InvariantCheck partition = named("partition");
  InvariantCheck shape = named("subgraph-adm-recomputed");
  InvariantCheck admBounds = named("adm-bounds");
  InvariantCheck highLow = named("no-high-low-minus-edge");
  InvariantCheck lowClosed = named("low-minus-subgraphs-pure");
  InvariantCheck degenerate = named("degenerate-edge-count");
  InvariantCheck step1 = named("step1-size");
  InvariantCheck corrected = named("corrected-potential-nonnegative");
  InvariantCheck classCount = named("class-edges-per-subgraph");

  std::vector<int> seen(cg.n, 0);
  for (int s = 0; s < static_cast<int>(o.subgraphs.size()); ++s) {
    const Subgraph& X = o.subgraphs[s];
    for (int x : X.nodes) {
      ++seen[x];
      record(partition, o.subgraphOf[x] == s ? 0.0 : -1.0, describe("node", x, o.subgraphOf[x], s));
    }
  }
  for (int x = 0; x < cg.n; ++x) record(partition, seen[x] == 1 ? 0.0 : -1.0, describe("node", x, seen[x], 1));

  for (int s = 0; s < static_cast<int>(o.subgraphs.size()); ++s) {
    const Subgraph& X = o.subgraphs[s];
    std::map<int, int> local;
    std::vector<double> wt;
    for (int x : X.nodes) {
      local.emplace(x, static_cast<int>(wt.size()));
      wt.push_back(cg.weight[x]);
    }
    std::vector<LocalEdge> edges;
    bool inside = true;
    auto add = [&](int a, int b, double w) {
      auto ia = local.find(a), ib = local.find(b);
      if (ia == local.end() || ib == local.end()) {
        inside = false;
        return;
      }
      edges.push_back({ia->second, ib->second, w});
    };
    for (int k : X.treeEdges) add(cg.tree[k].a, cg.tree[k].b, cg.tree[k].w);
    for (int k : X.classEdges) add(cg.cls[k].a, cg.cls[k].b, cg.cls[k].w);
    double adm = -1.0;
    if (inside) {
      try {
        adm = augmented_diameter(wt, edges);
      } catch (const UnsupportedShape&) {
        inside = false;
      }
    }
    record(shape, inside && std::abs(adm - X.adm) <= 1e-9 * std::max(1.0, X.adm) ? 0.0 : -1.0,
           describe("subgraph", s, adm, X.adm));
    record(classCount, static_cast<double>(X.nodes.size()) - static_cast<double>(X.classEdges.size()),
           describe("subgraph", s, X.classEdges.size(), X.nodes.size()));
    if (opt.strict) {
      record(corrected, X.deltaPlus + 1e-9 * std::max(L, 1.0), describe("subgraph", s, X.deltaPlus, 0.0));
      bool exempt = o.terminal && X.tag == Provenance::Step5Pref;
      if (!exempt) {
        record(admBounds, X.adm - L * (1.0 - 1e-12), describe("subgraph", s, X.adm, L));
        record(admBounds, kG * L * (1.0 + 1e-12) - X.adm, describe("subgraph", s, X.adm, kG * L));
      }
      if (X.tag == Provenance::Step1) {
        double need = 2.0 * kG / cg.eps;
        record(step1, static_cast<double>(X.nodes.size()) - need * (1.0 - 1e-12),
               describe("subgraph", s, X.nodes.size(), need));
      }
    }
    bool anyLow = false, allLow = true;
    for (int x : X.nodes) {
      bool low = o.nodeClass[x] == NodeClass::LowMinus;
      anyLow = anyLow || low;
      allLow = allLow && low;
    }
    record(lowClosed, !anyLow || allLow ? 0.0 : -1.0, describe("subgraph", s, anyLow, allLow));
  }

  bool lowLowEdge = false;
  for (int k = 0; k < static_cast<int>(cg.cls.size()); ++k) {
    NodeClass a = o.nodeClass[cg.cls[k].a], b = o.nodeClass[cg.cls[k].b];
    bool bad = (a == NodeClass::High && b == NodeClass::LowMinus) || (a == NodeClass::LowMinus && b == NodeClass::High);
    record(highLow, bad ? -1.0 : 0.0, describe("class edge", k, 0, 0));
    if (a == NodeClass::LowMinus && b == NodeClass::LowMinus) lowLowEdge = true;
  }
  if (lowLowEdge) record(degenerate, o.degenerate ? 0.0 : -1.0, "low-minus edge outside the degenerate case");
  if (opt.strict && o.degenerate) {
    double bound = 4.0 * kG / (cg.eps * cg.eps);
    record(degenerate, bound - static_cast<double>(cg.cls.size()), describe("level edges", 0, cg.cls.size(), bound));
  }
  return {partition, shape, admBounds, highLow, lowClosed, degenerate, step1, corrected, classCount};
}

namespace {

// Diameter of the subgraph induced on the listed vertices.
double induced_diameter(const std::vector<std::vector<std::pair<int, double>>>& adj, const std::vector<int>& vs,
                        std::vector<int>& mark, int stamp, std::vector<double>& dist) {
  for (int v : vs) mark[v] = stamp;
  double diam = 0.0;
  using Item = std::pair<double, int>;
  for (int s : vs) {
    for (int v : vs) dist[v] = kInf;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[s] = 0.0;
    pq.push({0.0, s});
    while (!pq.empty()) {
      auto [d, x] = pq.top();
      pq.pop();
      if (d > dist[x]) continue;
      for (auto [y, w] : adj[x]) {
        if (mark[y] != stamp || d + w >= dist[y]) continue;
        dist[y] = d + w;
        pq.push({dist[y], y});
      }
    }
    for (int v : vs) diam = std::max(diam, dist[v]);
  }
  return diam;
}

}  // namespace

VerificationReport check_hierarchy(const HierarchyTrace& trace, int pdCap) {
  VerificationReport rep;
  InvariantCheck phi1 = named("phi1-at-most-mst");
  InvariantCheck ledger = named("ledger-identity");
  InvariantCheck corrected = named("corrected-potential-nonnegative");
  InvariantCheck partition = named("cluster-partition");
  InvariantCheck pd = named("pd-invariant");
  std::map<std::string, InvariantCheck> clustering;

  const bool doPd = trace.extendedCount <= pdCap;
  std::vector<int> mark(trace.extendedCount, -1);
  std::vector<double> dist(trace.extendedCount, kInf);
  int stamp = 0;

  for (std::size_t li = 0; li < trace.levels.size(); ++li) {
    const LevelDump& d = trace.levels[li];
    double phiTotal = std::accumulate(d.phi.begin(), d.phi.end(), 0.0);
    std::string where = "sigma " + std::to_string(d.sigma) + " level " + std::to_string(d.level);
    if (d.level == 1)
      record(phi1, trace.mstWeight * (1.0 + 1e-9) - phiTotal, where + ": phi1 " + std::to_string(phiTotal));

    ClusteringCheckOptions opt;
    opt.strict = d.eps <= 1.0 / 256.0 + 1e-15;
    double deltaSum = 0.0;
    for (const Subgraph& X : d.outcome.subgraphs) {
      deltaSum += X.delta;
      if (opt.strict) record(corrected, X.deltaPlus + 1e-9 * d.L, where + ": delta+ " + std::to_string(X.deltaPlus));
    }
    double lhs = phiTotal - d.nextPhiTotal;
    double tol = 1e-6 * std::max({1.0, std::abs(phiTotal), std::abs(lhs)});
    record(ledger, tol - std::abs(lhs - deltaSum), where + ": phi difference " + std::to_string(lhs) +
                                                      " vs sum of local changes " + std::to_string(deltaSum));

    std::vector<int> size(d.phi.size(), 0);
    bool ok = static_cast<int>(d.clusterOf.size()) == trace.extendedCount;
    for (int c : d.clusterOf) {
      if (c < 0 || c >= static_cast<int>(d.phi.size())) {
        ok = false;
        break;
      }
      ++size[c];
    }
    for (int s : size) ok = ok && s > 0;
    record(partition, ok ? 0.0 : -1.0, where);

    for (const InvariantCheck& c : check_clustering(d.cg, d.outcome, opt)) {
      InvariantCheck& agg = clustering[c.name];
      agg.name = "clustering/" + c.name;
      if (agg.failures == 0 && c.failures > 0) agg.counterexample = where + ": " + c.counterexample;
      agg.evaluated += c.evaluated;
      agg.failures += c.failures;
      agg.worstSlack = std::min(agg.worstSlack, c.worstSlack);
    }

    if (doPd && ok) {
      std::vector<std::vector<std::pair<int, double>>> adj(trace.extendedCount);
      for (const SubEdge& e : trace.subEdges) {
        adj[e.a].push_back({e.b, e.w});
        adj[e.b].push_back({e.a, e.w});
      }
      for (EdgeId id : d.spannerBefore) {
        const Edge& e = trace.edges[id];
        adj[e.u].push_back({e.v, e.w});
        adj[e.v].push_back({e.u, e.w});
      }
      std::vector<std::vector<int>> members(d.phi.size());
      for (int x = 0; x < trace.extendedCount; ++x) members[d.clusterOf[x]].push_back(x);
      for (std::size_t c = 0; c < members.size(); ++c) {
        double dm = induced_diameter(adj, members[c], mark, stamp++, dist);
        record(pd, d.phi[c] * (1.0 + 1e-9) + 1e-9 - dm,
               where + ": cluster " + std::to_string(c) + " diameter " + std::to_string(dm) + " potential " +
                   std::to_string(d.phi[c]));
      }
    }
  }
  rep.invariants = {phi1, ledger, corrected, partition, pd};
  for (auto& [name, c] : clustering) rep.invariants.push_back(c);
  return rep;
}

}  // namespace lspan
