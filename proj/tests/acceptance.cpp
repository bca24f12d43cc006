// Acceptance run: one PASS/FAIL line per criterion; exit status 1 when any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "lspan/clustering.hpp"
#include "lspan/generators.hpp"
#include "lspan/mst.hpp"
#include "lspan/pipeline.hpp"
#include "lspan/ssa.hpp"
#include "lspan/verify.hpp"
#include "support.hpp"

namespace lspan {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// Traces gathered by the stretch runs, checked again by criterion 3.
std::vector<HierarchyTrace> g_traces;

Outcome stretch_general() {
  auto t0 = Clock::now();
  int violations = 0, runs = 0;
  double worstRatio = 0.0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    int n = 20 + static_cast<int>((seed * 37) % 81);
    int m = std::min(4 * n, n * (n - 1) / 2);
    WeightedGraph g = random_connected_graph(n, m, 1.0, 1000.0, seed);
    for (int k : {2, 3}) {
      PipelineConfig c;
      c.k = k;
      c.epsilon = 0.05;
      c.seed = seed;
      c.trace = true;
      c.verify = false;
      SpannerResult r = light_spanner_general(g, c);
      const double bound = (2 * k - 1) * (1.0 + std::max(general_stretch_constant(2 * kG) + 4 * kG, 10 * kG) * 0.05);
      auto d = test::floyd_warshall(g, &r.edges);
      for (const Edge& e : g.edges()) {
        worstRatio = std::max(worstRatio, d[e.u][e.v] / (bound * e.w));
        if (d[e.u][e.v] > bound * e.w * (1.0 + 1e-12)) ++violations;
      }
      StretchReport rep = measure_stretch(g, r.edges);
      if (rep.maxStretch > bound * (1.0 + 1e-12)) ++violations;
      if (r.trace) g_traces.push_back(std::move(*r.trace));
      ++runs;
    }
  }
  double secs = seconds_since(t0);
  Outcome o;
  o.pass = violations == 0 && secs < 60.0;
  o.detail = std::to_string(runs) + " runs, " + std::to_string(violations) + " violations, worst stretch/bound " +
             fmt("%.4f", worstRatio) + ", " + fmt("%.1f", secs) + " s";
  return o;
}

Outcome stretch_geometric() {
  int violations = 0;
  double worst = 0.0;
  const double epsInt = 0.01, epsBase = 0.01;
  const double bound = (1.0 + epsBase) * (1.0 + geom_stretch_constant(2 * kG) * epsInt);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    PointSet p = uniform_points(200, 2, seed);
    PipelineConfig c;
    c.mode = Mode::Euclidean;
    c.epsilon = epsInt;
    c.epsilonBase = epsBase;
    c.seed = seed;
    c.trace = seed <= 5;
    c.verify = false;
    SpannerResult r = light_spanner_geometric(p, c);
    PairStretchReport rep = measure_pair_stretch(p, edge_subgraph(r.graph, r.edges));
    worst = std::max(worst, rep.maxStretch);
    if (rep.maxStretch > bound * (1.0 + 1e-12)) ++violations;
    if (r.trace) g_traces.push_back(std::move(*r.trace));
  }
  Outcome o;
  o.pass = violations == 0;
  o.detail = "20 instances, worst all-pairs stretch " + fmt("%.4f", worst) + " vs bound " + fmt("%.4f", bound);
  return o;
}

// Strict runs: internal epsilon below 1/256, so every level is in the range
// where the constant-sensitive bounds hold. Heavy classes only exist when the
// edge count is well above 1/eps, hence the dense graphs.
const std::vector<HierarchyTrace>& strict_traces() {
  static const std::vector<HierarchyTrace> traces = [] {
    std::vector<HierarchyTrace> out;
    auto add = [&](int n, int m, double psi, std::uint64_t seed) {
      WeightedGraph g = random_connected_graph(n, m, 1.0, 1e6, seed);
      PipelineConfig c;
      c.strict = true;
      c.epsilon = 0.5;
      c.psi = psi;
      c.trace = true;
      c.verify = false;
      SpannerResult r = light_spanner_general(g, c);
      if (r.trace) out.push_back(std::move(*r.trace));
    };
    for (std::uint64_t seed = 1; seed <= 4; ++seed) add(400, 30000, 0.25, 200 + seed);
    add(150, 8000, 0.0, 205);
    return out;
  }();
  return traces;
}

Outcome potential_ledger() {
  for (const HierarchyTrace& tr : strict_traces()) g_traces.push_back(tr);
  long long levels = 0, subgraphs = 0, negative = 0, failedChecks = 0, pdChecked = 0;
  double worstDeltaPlus = std::numeric_limits<double>::infinity();
  std::string first;
  for (const HierarchyTrace& tr : g_traces) {
    VerificationReport rep = check_hierarchy(tr, 500);
    for (const InvariantCheck& c : rep.invariants) {
      if (c.name == "pd-invariant") pdChecked += c.evaluated;
      if (!c.passed()) {
        ++failedChecks;
        if (first.empty()) first = c.name + ": " + c.counterexample;
      }
    }
    // Corrected potential changes on every level, whatever the epsilon.
    for (const LevelDump& d : tr.levels) {
      ++levels;
      for (const Subgraph& X : d.outcome.subgraphs) {
        ++subgraphs;
        worstDeltaPlus = std::min(worstDeltaPlus, X.deltaPlus / d.L);
        if (X.deltaPlus < -1e-9 * d.L) {
          ++negative;
          if (first.empty())
            first = "delta+ " + fmt("%.4g", X.deltaPlus) + " at L " + fmt("%.4g", d.L) + ", eps " + fmt("%.4g", d.eps);
        }
      }
    }
  }
  Outcome o;
  o.pass = failedChecks == 0 && negative == 0 && pdChecked > 0;
  o.detail = std::to_string(g_traces.size()) + " traces, " + std::to_string(levels) + " levels, " +
             std::to_string(subgraphs) + " subgraphs, " + std::to_string(pdChecked) + " PD checks, min delta+/L " +
             fmt("%.4g", worstDeltaPlus) + ", " + std::to_string(negative) + " negative";
  if (!first.empty()) o.detail += "; first failure: " + first;
  return o;
}

// Hub at node 0 of a long path with class edges to nodes 500..16500; path
// weight to those nodes exceeds the removability threshold, so all stay.
ClusterGraph strict_hub_instance(double eps) {
  const double L = 1000.0, Lprev = eps * L;
  const int n = 24000;
  std::mt19937_64 rng(77);
  std::vector<double> w(n);
  for (double& x : w) x = Lprev * (1.0 + uniform01(rng));
  std::vector<TreeEdge> tree;
  for (int x = 1; x < n; ++x) tree.push_back({x - 1, x, 0.01 * Lprev * (0.5 + uniform01(rng)), -1});
  std::vector<ClassEdge> cls;
  for (int x = 500; x <= 16500; ++x) cls.push_back({0, x, L * (1.0 + eps * uniform01(rng)), -1});
  return test::make_cluster_graph(L, Lprev, eps, w, tree, cls);
}

// Long path whose only class edges join the two red ends: nothing forms in
// Steps 1, 2 and 4.
ClusterGraph strict_degenerate_instance(double eps) {
  const double L = 1000.0, Lprev = eps * L;
  const int n = 4000;
  std::mt19937_64 rng(78);
  std::vector<double> w(n);
  for (double& x : w) x = Lprev * (1.0 + uniform01(rng));
  std::vector<TreeEdge> tree;
  for (int x = 1; x < n; ++x) tree.push_back({x - 1, x, 0.01 * Lprev * (0.5 + uniform01(rng)), -1});
  std::vector<ClassEdge> cls;
  for (int j = 0; j < 40; ++j) cls.push_back({2 * j, n - 1 - 2 * j, L * (1.0 + eps * uniform01(rng)), -1});
  return test::make_cluster_graph(L, Lprev, eps, w, tree, cls);
}

Outcome clustering_structure() {
  const double eps = 1.0 / 256.0;
  std::vector<std::pair<ClusterGraph, std::string>> cases;
  for (std::uint64_t seed = 1; seed <= 6; ++seed)
    cases.push_back({test::random_cluster_graph(4000, eps, seed, 30 * static_cast<int>(seed),
                                                0.0004 * static_cast<double>(seed % 3)),
                     "random " + std::to_string(seed)});
  cases.push_back({strict_hub_instance(eps), "hub"});
  cases.push_back({strict_degenerate_instance(eps), "degenerate"});

  std::map<std::string, long long> evaluated;
  long long failures = 0, step1Subgraphs = 0, degenerateLevels = 0, instances = 0;
  std::string first;
  auto check = [&](const ClusterGraph& cg, const ClusteringOutcome& out, const std::string& what) {
    ++instances;
    for (const InvariantCheck& c : check_clustering(cg, out, ClusteringCheckOptions{true})) {
      evaluated[c.name] += c.evaluated;
      failures += c.failures;
      if (!c.passed() && first.empty()) first = what + " " + c.name + ": " + c.counterexample;
    }
    for (const Subgraph& X : out.subgraphs) step1Subgraphs += X.tag == Provenance::Step1;
    degenerateLevels += out.degenerate;
  };
  for (auto& [cg, what] : cases) check(cg, run_clustering(cg), what);
  for (std::size_t j = 0; j < strict_traces().size(); ++j)
    for (const LevelDump& d : strict_traces()[j].levels) check(d.cg, d.outcome, "strict run " + std::to_string(j + 1));
  bool covered = step1Subgraphs > 0 && degenerateLevels > 0;
  for (const char* name : {"partition", "adm-bounds", "no-high-low-minus-edge", "degenerate-edge-count", "step1-size"})
    covered = covered && evaluated[name] > 0;
  Outcome o;
  o.pass = failures == 0 && covered;
  o.detail = std::to_string(instances) + " clusterings, " + std::to_string(evaluated["adm-bounds"]) +
             " Adm bounds, " + std::to_string(step1Subgraphs) + " Step-1 subgraphs, " +
             std::to_string(degenerateLevels) + " degenerate, " + std::to_string(failures) + " failures";
  if (!covered) o.detail += "; some structure never exercised";
  if (!first.empty()) o.detail += "; first failure: " + first;
  return o;
}

Outcome lightness_trend() {
  std::map<int, double> mean;
  for (int n : {64, 128, 256}) {
    double sum = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      WeightedGraph g = random_connected_graph(n, 8 * n, 1.0, 1000.0, 1000 * n + seed);
      PipelineConfig c;
      c.k = 2;
      c.seed = seed;
      c.verify = false;
      sum += light_spanner_general(g, c).stats.lightness;
    }
    mean[n] = sum / 10.0;
  }
  double ratio = mean[256] / mean[64];
  Outcome o;
  o.pass = ratio <= 2.5;
  o.detail = "mean lightness " + fmt("%.3f", mean[64]) + " / " + fmt("%.3f", mean[128]) + " / " +
             fmt("%.3f", mean[256]) + " at n = 64 / 128 / 256, ratio " + fmt("%.3f", ratio);
  return o;
}

Outcome runtime_trend() {
  const double density = 10.0;
  std::vector<double> medians;
  std::string detail;
  for (int m : {10000, 20000, 40000}) {
    int n = static_cast<int>(m / density);
    std::vector<double> times;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      WeightedGraph g = random_connected_graph(n, m, 1.0, 1000.0, 5000 + seed);
      PipelineConfig c;
      c.seed = seed;
      c.verify = false;
      auto t0 = Clock::now();
      SpannerResult r = light_spanner_general(g, c);
      times.push_back(seconds_since(t0));
      if (r.edges.empty()) times.back() = std::numeric_limits<double>::infinity();
    }
    std::sort(times.begin(), times.end());
    medians.push_back(times[2]);
    detail += (detail.empty() ? "" : ", ") + std::string("m=") + std::to_string(m) + " " + fmt("%.3f", times[2]) + " s";
  }
  double worst = std::max(medians[1] / medians[0], medians[2] / medians[1]);
  Outcome o;
  o.pass = worst <= 3.0;
  o.detail = detail + ", worst doubling ratio " + fmt("%.2f", worst);
  return o;
}

Outcome oracle_equivalence() {
  long long graphs = 0, bad = 0;
  std::string first;
  for (int n = 1; n <= 9; ++n) {
    for (const auto& edges : test::nonisomorphic_graphs(n)) {
      ++graphs;
      for (int k : {2, 3}) {
        std::vector<int> keep = unweighted_spanner(n, edges, k, static_cast<std::uint64_t>(graphs));
        bool ok = test::max_hop_stretch(n, edges, keep) <= 2 * k - 1 &&
                  static_cast<double>(keep.size()) <= unweighted_spanner_bound(n, k);
        std::vector<int> grown = cluster_growing_spanner(n, edges, k, static_cast<std::uint64_t>(graphs));
        ok = ok && test::max_hop_stretch(n, edges, grown) <= 2 * k - 1;
        if (!ok) {
          ++bad;
          if (first.empty()) first = "unweighted n=" + std::to_string(n) + " k=" + std::to_string(k);
        }
      }
    }
  }
  int greedyBad = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    int n = 10 + static_cast<int>(seed % 40);
    int m = std::min(n * (n - 1) / 2, 4 * n);
    double t = 1.0 + 0.25 * static_cast<double>(seed % 9);
    WeightedGraph g = random_connected_graph(n, m, 1.0, 100.0, 300 + seed);
    std::vector<EdgeId> h = greedy_spanner(g, t);
    auto d = test::floyd_warshall(g, &h);
    for (const Edge& e : g.edges())
      if (d[e.u][e.v] > t * e.w * (1.0 + 1e-12)) {
        ++greedyBad;
        if (first.empty()) first = "greedy seed " + std::to_string(seed);
        break;
      }
  }
  int mstBad = 0, mstCases = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    int n = 2 + static_cast<int>(seed % 7);
    int m = std::min(n * (n - 1) / 2, n + 1 + static_cast<int>(seed % 8));
    // Few distinct weights force ties.
    std::mt19937_64 rng(seed);
    WeightedGraph base = random_connected_graph(n, m, 1.0, 2.0, 700 + seed);
    WeightedGraph g(n);
    for (const Edge& e : base.edges()) g.add_edge(e.u, e.v, 1.0 + static_cast<double>(uniform_index(rng, 4)));
    ++mstCases;
    if (std::abs(g.total_weight(build_mst(g)) - test::exhaustive_mst_weight(g)) > 1e-9) {
      ++mstBad;
      if (first.empty()) first = "mst seed " + std::to_string(seed);
    }
  }
  Outcome o;
  o.pass = bad == 0 && greedyBad == 0 && mstBad == 0;
  o.detail = std::to_string(graphs) + " graphs up to 9 vertices (" + std::to_string(bad) + " bad), 100 greedy (" +
             std::to_string(greedyBad) + " bad), " + std::to_string(mstCases) + " MST (" + std::to_string(mstBad) +
             " bad)";
  if (!first.empty()) o.detail += "; first failure: " + first;
  return o;
}

Outcome baseline_comparison() {
  double worst = 0.0;
  std::string detail;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    PointSet p = uniform_points(200, 2, 900 + seed);
    PipelineConfig c;
    c.mode = Mode::Euclidean;
    c.epsilon = 0.1;
    c.verify = false;
    double ours = light_spanner_geometric(p, c).stats.lightness;
    WeightedGraph full = complete_euclidean(p);
    double mst = full.total_weight(build_mst(full));
    double greedy = full.total_weight(greedy_spanner(full, 1.1)) / mst;
    worst = std::max(worst, ours / greedy);
    detail += (detail.empty() ? "" : ", ") + fmt("%.2f", ours) + "/" + fmt("%.2f", greedy);
  }
  Outcome o;
  o.pass = worst <= 10.0;
  o.detail = "lightness pipeline/greedy " + detail + ", worst ratio " + fmt("%.2f", worst);
  return o;
}

}  // namespace
}  // namespace lspan

int main() {
  using namespace lspan;
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"stretch certification, general", stretch_general},
      {"stretch certification, geometric", stretch_geometric},
      {"potential and ledger", potential_ledger},
      {"clustering structure", clustering_structure},
      {"lightness trend", lightness_trend},
      {"runtime trend", runtime_trend},
      {"oracle equivalence", oracle_equivalence},
      {"baseline comparison", baseline_comparison},
  };
  int failed = 0;
  for (std::size_t j = 0; j < criteria.size(); ++j) {
    Outcome o;
    try {
      o = criteria[j].run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::printf("%s  %zu  %s: %s\n", o.pass ? "PASS" : "FAIL", j + 1, criteria[j].name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
