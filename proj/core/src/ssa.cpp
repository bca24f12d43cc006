#include "lspan/ssa.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <tuple>

#include "lspan/cones.hpp"
#include "lspan/generators.hpp"

namespace lspan {

namespace {

void check_sparsity(const SsaOutput& out, int nodes, const char* who) {
  if (static_cast<double>(out.pruned.size()) > out.declaredSparsity * nodes + 1e-9)
    throw std::logic_error(std::string(who) + ": output exceeds declared sparsity");
}

struct Incidence {
  std::vector<int> start;
  std::vector<std::pair<int, int>> arcs;  // (neighbour, edge index)
};

Incidence incidence(int n, const std::vector<std::pair<int, int>>& edges) {
  Incidence inc;
  inc.start.assign(n + 1, 0);
  for (auto [a, b] : edges) {
    ++inc.start[a + 1];
    ++inc.start[b + 1];
  }
  std::partial_sum(inc.start.begin(), inc.start.end(), inc.start.begin());
  inc.arcs.resize(inc.start[n]);
  std::vector<int> fill(inc.start.begin(), inc.start.end() - 1);
  for (int k = 0; k < static_cast<int>(edges.size()); ++k) {
    auto [a, b] = edges[k];
    inc.arcs[fill[a]++] = {b, k};
    inc.arcs[fill[b]++] = {a, k};
  }
  return inc;
}

}  // namespace

double geom_stretch_constant(double beta) { return 2.0 * (19.0 * beta + 14.0); }
double general_stretch_constant(double beta) { return 2.0 * beta + 1.0; }

SsaOutput ssa_geom(const SsaInput& in, int d) {
  const int n = in.nodeCount;
  if (d < 1 || static_cast<long long>(in.positions.size()) != static_cast<long long>(n) * d)
    throw DimensionMismatch("representative positions do not match the dimension");
  SsaOutput out;
  out.stretchConstant = geom_stretch_constant(in.beta);
  if (in.edges.empty()) {
    out.declaredSparsity = 0.0;
    return out;
  }
  ConeFamily cones(d, in.eps);
  out.declaredSparsity = cones.size();
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(in.edges.size());
  for (const LocalEdge& e : in.edges) pairs.push_back({e.a, e.b});
  Incidence inc = incidence(n, pairs);
  std::vector<char> keep(in.edges.size(), 0);
  std::vector<double> dir(d);
  std::vector<std::tuple<int, double, int, int>> cand;  // cone, distance, neighbour, edge
  for (int u = 0; u < n; ++u) {
    cand.clear();
    const double* pu = in.positions.data() + static_cast<std::size_t>(u) * d;
    for (int j = inc.start[u]; j < inc.start[u + 1]; ++j) {
      auto [v, k] = inc.arcs[j];
      const double* pv = in.positions.data() + static_cast<std::size_t>(v) * d;
      double s = 0.0;
      for (int c = 0; c < d; ++c) {
        dir[c] = pv[c] - pu[c];
        s += dir[c] * dir[c];
      }
      cand.push_back({cones.cone_of(dir.data()), std::sqrt(s), v, k});
    }
    std::sort(cand.begin(), cand.end());
    for (std::size_t j = 0; j < cand.size(); ++j)
      if (j == 0 || std::get<0>(cand[j]) != std::get<0>(cand[j - 1])) keep[std::get<3>(cand[j])] = 1;
  }
  for (int k = 0; k < static_cast<int>(keep.size()); ++k)
    if (keep[k]) out.pruned.push_back(k);
  check_sparsity(out, n, "ssa_geom");
  return out;
}

SsaOutput ssa_general(const SsaInput& in, int k, std::uint64_t seed) {
  if (k < 2) throw InvalidInput("k must be at least 2");
  SsaOutput out;
  out.stretchConstant = general_stretch_constant(in.beta);
  const int n = in.nodeCount;
  out.declaredSparsity = n > 0 ? unweighted_spanner_bound(n, k) / n : 0.0;
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(in.edges.size());
  for (const LocalEdge& e : in.edges) pairs.push_back({e.a, e.b});
  out.pruned = unweighted_spanner(n, pairs, k, seed);
  check_sparsity(out, n, "ssa_general");
  return out;
}

SsaOutput ssa_minor(const SsaInput& in) {
  SsaOutput out;
  out.stretchConstant = 0.0;
  out.pruned.resize(in.edges.size());
  std::iota(out.pruned.begin(), out.pruned.end(), 0);
  out.declaredSparsity = in.nodeCount > 0 ? static_cast<double>(in.edges.size()) / in.nodeCount : 0.0;
  return out;
}

double unweighted_spanner_bound(int n, int k) {
  return k * std::pow(static_cast<double>(n), 1.0 + 1.0 / k) + n;
}

std::vector<int> greedy_unweighted_spanner(int n, const std::vector<std::pair<int, int>>& edges, int k) {
  if (k < 2) throw InvalidInput("k must be at least 2");
  const int limit = 2 * k - 1;
  std::vector<std::vector<int>> adj(n);
  std::vector<int> depth(n, -1), touched, queue;
  std::vector<int> kept;
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    auto [a, b] = edges[e];
    // Hop distance from a to b in the current spanner, explored up to limit.
    bool near = false;
    depth[a] = 0;
    touched.assign(1, a);
    queue.assign(1, a);
    for (std::size_t h = 0; h < queue.size() && !near; ++h) {
      int x = queue[h];
      if (depth[x] == limit) continue;
      for (int y : adj[x]) {
        if (depth[y] >= 0) continue;
        depth[y] = depth[x] + 1;
        touched.push_back(y);
        if (y == b) {
          near = true;
          break;
        }
        queue.push_back(y);
      }
    }
    for (int x : touched) depth[x] = -1;
    if (near) continue;
    kept.push_back(e);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return kept;
}

std::vector<int> cluster_growing_spanner(int n, const std::vector<std::pair<int, int>>& edges, int k,
                                         std::uint64_t seed) {
  if (k < 2) throw InvalidInput("k must be at least 2");
  std::mt19937_64 rng(seed);
  const double p = std::pow(static_cast<double>(std::max(n, 1)), -1.0 / k);
  Incidence inc = incidence(n, edges);
  std::vector<char> removed(edges.size(), 0), keep(edges.size(), 0);
  std::vector<int> cluster(n);
  std::iota(cluster.begin(), cluster.end(), 0);
  std::vector<char> sampled(n, 0);
  std::vector<int> firstEdge(n, -1), seenCluster;

  // Keeps one edge from v to every neighbouring cluster other than skip and
  // removes every edge from v into those clusters.
  auto connect_to_clusters = [&](int v, int skip) {
    seenCluster.clear();
    for (int j = inc.start[v]; j < inc.start[v + 1]; ++j) {
      auto [u, e] = inc.arcs[j];
      if (removed[e] || cluster[u] < 0 || cluster[u] == skip) continue;
      int c = cluster[u];
      if (firstEdge[c] < 0) {
        firstEdge[c] = e;
        seenCluster.push_back(c);
      }
    }
    for (int c : seenCluster) keep[firstEdge[c]] = 1;
    for (int j = inc.start[v]; j < inc.start[v + 1]; ++j) {
      auto [u, e] = inc.arcs[j];
      if (!removed[e] && cluster[u] >= 0 && cluster[u] != skip && firstEdge[cluster[u]] >= 0) removed[e] = 1;
    }
    for (int c : seenCluster) firstEdge[c] = -1;
  };

  for (int iter = 1; iter < k; ++iter) {
    for (int c = 0; c < n; ++c) sampled[c] = 0;
    for (int v = 0; v < n; ++v)
      if (cluster[v] == v) sampled[v] = uniform01(rng) < p;
    std::vector<int> next(n, -1);
    for (int v = 0; v < n; ++v) {
      if (cluster[v] < 0) continue;
      if (sampled[cluster[v]]) {
        next[v] = cluster[v];
        continue;
      }
      int joinEdge = -1, joinCluster = -1;
      for (int j = inc.start[v]; j < inc.start[v + 1]; ++j) {
        auto [u, e] = inc.arcs[j];
        if (removed[e] || cluster[u] < 0 || !sampled[cluster[u]]) continue;
        if (joinEdge < 0 || e < joinEdge) {
          joinEdge = e;
          joinCluster = cluster[u];
        }
      }
      if (joinEdge >= 0) {
        keep[joinEdge] = 1;
        next[v] = joinCluster;
        for (int j = inc.start[v]; j < inc.start[v + 1]; ++j) {
          auto [u, e] = inc.arcs[j];
          if (cluster[u] == joinCluster) removed[e] = 1;
        }
      } else {
        connect_to_clusters(v, -1);
      }
    }
    cluster = std::move(next);
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      auto [a, b] = edges[e];
      if (cluster[a] < 0 || cluster[b] < 0 || cluster[a] == cluster[b]) removed[e] = 1;
    }
  }
  for (int v = 0; v < n; ++v)
    if (cluster[v] >= 0) connect_to_clusters(v, cluster[v]);

  std::vector<int> kept;
  for (int e = 0; e < static_cast<int>(edges.size()); ++e)
    if (keep[e]) kept.push_back(e);
  return kept;
}

std::vector<int> unweighted_spanner(int n, const std::vector<std::pair<int, int>>& edges, int k,
                                    std::uint64_t seed) {
  if (n <= 500) return greedy_unweighted_spanner(n, edges, k);
  const double bound = unweighted_spanner_bound(n, k);
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<int> kept = cluster_growing_spanner(n, edges, k, seed + attempt);
    if (static_cast<double>(kept.size()) <= bound) return kept;
  }
  return greedy_unweighted_spanner(n, edges, k);
}

}  // namespace lspan
