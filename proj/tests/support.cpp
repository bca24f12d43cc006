#include "support.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "lspan/generators.hpp"

namespace lspan::test {

WeightedGraph path_graph(int n, double w) {
  WeightedGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1, w);
  return g;
}

WeightedGraph cycle_graph(int n, double w) {
  WeightedGraph g = path_graph(n, w);
  g.add_edge(n - 1, 0, w);
  return g;
}

std::vector<std::vector<double>> floyd_warshall(const WeightedGraph& g, const std::vector<EdgeId>* subset) {
  const double inf = std::numeric_limits<double>::infinity();
  const int n = g.n();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0.0;
  auto relax = [&](const Edge& e) {
    d[e.u][e.v] = std::min(d[e.u][e.v], e.w);
    d[e.v][e.u] = std::min(d[e.v][e.u], e.w);
  };
  if (subset) {
    for (EdgeId id : *subset) relax(g.edge(id));
  } else {
    for (const Edge& e : g.edges()) relax(e);
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

std::vector<double> bellman_ford(const WeightedGraph& g, int source) {
  std::vector<double> d(g.n(), std::numeric_limits<double>::infinity());
  d[source] = 0.0;
  for (int round = 0; round < g.n(); ++round) {
    bool changed = false;
    for (const Edge& e : g.edges()) {
      if (d[e.u] + e.w < d[e.v]) d[e.v] = d[e.u] + e.w, changed = true;
      if (d[e.v] + e.w < d[e.u]) d[e.u] = d[e.v] + e.w, changed = true;
    }
    if (!changed) break;
  }
  return d;
}

std::vector<int> bfs_hops(int n, const std::vector<std::pair<int, int>>& edges, const std::vector<int>& keep, int s) {
  std::vector<std::vector<int>> adj(n);
  for (int k : keep) {
    adj[edges[k].first].push_back(edges[k].second);
    adj[edges[k].second].push_back(edges[k].first);
  }
  std::vector<int> hops(n, -1);
  std::queue<int> q;
  hops[s] = 0;
  q.push(s);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : adj[x])
      if (hops[y] < 0) {
        hops[y] = hops[x] + 1;
        q.push(y);
      }
  }
  return hops;
}

int max_hop_stretch(int n, const std::vector<std::pair<int, int>>& edges, const std::vector<int>& keep) {
  std::vector<std::vector<int>> bySource(n);
  for (auto [a, b] : edges) bySource[a].push_back(b);
  int worst = edges.empty() ? 0 : 1;
  for (int s = 0; s < n; ++s) {
    if (bySource[s].empty()) continue;
    std::vector<int> hops = bfs_hops(n, edges, keep, s);
    for (int b : bySource[s]) {
      if (hops[b] < 0) return std::numeric_limits<int>::max();
      worst = std::max(worst, hops[b]);
    }
  }
  return worst;
}

double brute_augmented_diameter(const std::vector<double>& nodeWeight, const std::vector<LocalEdge>& edges) {
  const int n = static_cast<int>(nodeWeight.size());
  std::vector<std::vector<std::pair<int, double>>> adj(n);
  for (const LocalEdge& e : edges) {
    adj[e.a].push_back({e.b, e.w});
    adj[e.b].push_back({e.a, e.w});
  }
  const double inf = std::numeric_limits<double>::infinity();
  double diam = 0.0;
  std::vector<char> on(n, 0);
  for (int a = 0; a < n; ++a) {
    std::vector<double> best(n, inf);
    std::function<void(int, double)> dfs = [&](int x, double len) {
      best[x] = std::min(best[x], len);
      on[x] = 1;
      for (auto [y, w] : adj[x])
        if (!on[y]) dfs(y, len + w + nodeWeight[y]);
      on[x] = 0;
    };
    dfs(a, nodeWeight[a]);
    for (int b = 0; b < n; ++b) diam = std::max(diam, best[b]);
  }
  return diam;
}

double exhaustive_mst_weight(const WeightedGraph& g) {
  const int n = g.n(), m = g.m();
  if (n <= 1) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(pick.size()) == n - 1) {
      std::vector<int> parent(n);
      std::iota(parent.begin(), parent.end(), 0);
      std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
      double w = 0.0;
      for (int id : pick) {
        int a = find(g.edge(id).u), b = find(g.edge(id).v);
        if (a == b) return;
        parent[a] = b;
        w += g.edge(id).w;
      }
      best = std::min(best, w);
      return;
    }
    for (int k = from; k < m; ++k) {
      if (m - k < n - 1 - static_cast<int>(pick.size())) return;
      pick.push_back(k);
      rec(k + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return best;
}

ClusterGraph make_cluster_graph(double L, double Lprev, double eps, std::vector<double> weight,
                                std::vector<TreeEdge> tree, std::vector<ClassEdge> cls, double t) {
  ClusterGraph cg;
  cg.n = static_cast<int>(weight.size());
  cg.L = L;
  cg.Lprev = Lprev;
  cg.eps = eps;
  cg.psi = eps;
  cg.t = t;
  cg.weight = std::move(weight);
  cg.rep.resize(cg.n);
  std::iota(cg.rep.begin(), cg.rep.end(), 0);
  for (std::size_t k = 0; k < tree.size(); ++k)
    if (tree[k].src < 0) tree[k].src = static_cast<int>(k);
  for (std::size_t k = 0; k < cls.size(); ++k)
    if (cls[k].src < 0) cls[k].src = static_cast<EdgeId>(k);
  cg.tree = std::move(tree);
  cg.cls = std::move(cls);
  cg.rawEdges = static_cast<int>(cg.cls.size());
  cg.build_adjacency();
  return cg;
}

ClusterGraph path_cluster_graph(int n, double L, double eps, double nodeWeight, double edgeWeight) {
  std::vector<TreeEdge> tree;
  for (int i = 0; i + 1 < n; ++i) tree.push_back({i, i + 1, edgeWeight, -1});
  return make_cluster_graph(L, eps * L, eps, std::vector<double>(n, nodeWeight), tree, {});
}

double walk_path_weight(const ClusterGraph& cg, int a, int b) {
  std::vector<int> parent(cg.n, -2);
  std::vector<double> parentW(cg.n, 0.0);
  std::queue<int> q;
  parent[a] = -1;
  q.push(a);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (auto [y, k] : cg.treeAdj[x])
      if (parent[y] == -2) {
        parent[y] = x;
        parentW[y] = cg.tree[k].w;
        q.push(y);
      }
  }
  if (parent[b] == -2) return -1.0;
  double w = cg.weight[b];
  for (int x = b; x != a; x = parent[x]) {
    if (x != b && cg.tree_degree(x) > 2) return -1.0;
    w += parentW[x] + cg.weight[parent[x]];
  }
  return w;
}

std::vector<ClassEdge> non_removable(const ClusterGraph& cg, const std::vector<ClassEdge>& cand) {
  std::vector<ClassEdge> out;
  double factor = removable_factor(cg.t, cg.eps);
  for (const ClassEdge& e : cand) {
    double pw = walk_path_weight(cg, e.a, e.b);
    if (pw >= 0.0 && pw <= factor * e.w) continue;
    out.push_back(e);
  }
  return out;
}

namespace {

using Rows = std::vector<std::uint16_t>;

// Colour refinement: a vertex's new colour ranks (old colour, neighbour colour
// counts). Stops when the number of colours no longer grows.
void refine(const Rows& adj, std::vector<int>& col) {
  const int n = static_cast<int>(adj.size());
  int classes = 1 + *std::max_element(col.begin(), col.end());
  while (true) {
    std::vector<std::uint64_t> key(n);
    for (int v = 0; v < n; ++v) {
      std::uint64_t k = static_cast<std::uint64_t>(col[v]) << 40;
      for (int u = 0; u < n; ++u)
        if (adj[v] >> u & 1) k += std::uint64_t{1} << (4 * (9 - col[u]));
      key[v] = k;
    }
    std::vector<std::uint64_t> sorted = key;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v)
      col[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), key[v]) - sorted.begin());
    if (static_cast<int>(sorted.size()) == classes) return;
    classes = static_cast<int>(sorted.size());
  }
}

void search(const Rows& adj, std::vector<int> col, std::uint64_t& best) {
  const int n = static_cast<int>(adj.size());
  refine(adj, col);
  std::vector<int> count(n, 0);
  for (int c : col) ++count[c];
  int target = -1;
  for (int c = 0; c < n && target < 0; ++c)
    if (count[c] > 1) target = c;
  if (target < 0) {
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[col[v]] = v;
    std::uint64_t cert = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) cert = cert << 1 | (adj[inv[i]] >> inv[j] & 1);
    best = std::max(best, cert);
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (col[v] != target) continue;
    std::vector<int> next(n);
    for (int u = 0; u < n; ++u) next[u] = 2 * col[u] + (col[u] == target && u != v ? 1 : 0);
    std::vector<int> sorted = next;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int u = 0; u < n; ++u)
      next[u] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), next[u]) - sorted.begin());
    search(adj, next, best);
  }
}

std::uint64_t certificate(const Rows& adj) {
  std::uint64_t best = 0;
  search(adj, std::vector<int>(adj.size(), 0), best);
  return best;
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> nonisomorphic_graphs(int n) {
  if (n < 1 || n > 10) throw std::invalid_argument("vertex count out of range");
  std::vector<Rows> level{Rows(1, 0)};
  for (int k = 2; k <= n; ++k) {
    std::vector<Rows> next;
    std::unordered_set<std::uint64_t> seen;
    for (const Rows& g : level) {
      for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
        Rows h = g;
        h.push_back(static_cast<std::uint16_t>(mask));
        for (int u = 0; u < k - 1; ++u)
          if (mask >> u & 1) h[u] |= static_cast<std::uint16_t>(1u << (k - 1));
        if (seen.insert(certificate(h)).second) next.push_back(std::move(h));
      }
    }
    level = std::move(next);
  }
  std::vector<std::vector<std::pair<int, int>>> out;
  out.reserve(level.size());
  for (const Rows& g : level) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (g[a] >> b & 1) edges.push_back({a, b});
    out.push_back(std::move(edges));
  }
  return out;
}

ClusterGraph random_cluster_graph(int n, double eps, std::uint64_t seed, int classEdges, double branchProb, int hubs,
                                  int hubDegree) {
  std::mt19937_64 rng(seed);
  const double L = 1000.0, Lprev = eps * L;
  std::vector<double> w(n);
  for (double& x : w) x = Lprev * (1.0 + uniform01(rng));
  std::vector<TreeEdge> tree;
  for (int x = 1; x < n; ++x) {
    int parent = uniform01(rng) < branchProb ? static_cast<int>(uniform_index(rng, x)) : x - 1;
    tree.push_back({parent, x, 0.01 * Lprev * (0.5 + uniform01(rng)), -1});
  }
  std::map<std::pair<int, int>, ClassEdge> pairs;
  auto add = [&](int a, int b) {
    if (a == b) return;
    if (a > b) std::swap(a, b);
    pairs.try_emplace({a, b}, ClassEdge{a, b, L * (1.0 + eps * uniform01(rng)), -1});
  };
  for (int k = 0; k < classEdges; ++k)
    add(static_cast<int>(uniform_index(rng, n)), static_cast<int>(uniform_index(rng, n)));
  for (int h = 0; h < hubs; ++h) {
    int hub = static_cast<int>(uniform_index(rng, n));
    for (int k = 0; k < hubDegree; ++k) add(hub, static_cast<int>(uniform_index(rng, n)));
  }
  std::vector<ClassEdge> cand;
  for (auto& [key, e] : pairs) cand.push_back(e);
  ClusterGraph bare = make_cluster_graph(L, Lprev, eps, w, tree, {});
  std::vector<ClassEdge> kept = non_removable(bare, cand);
  return make_cluster_graph(L, Lprev, eps, w, tree, kept);
}

}  // namespace lspan::test
