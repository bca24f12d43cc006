#include "lspan/hierarchy.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "lspan/clustering.hpp"

namespace lspan {
namespace {

std::uint64_t pair_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
}

struct TreeArc {
  Vertex to;
  double w;
};

// Farthest vertex from s by path length, restricted to vertices with label == lab.
std::pair<Vertex, double> farthest_in(const std::vector<std::vector<TreeArc>>& adj, const std::vector<int>& label,
                                      int lab, Vertex s, std::vector<double>& dist, std::vector<Vertex>& stack,
                                      std::vector<Vertex>& parent) {
  Vertex best = s;
  double bestD = 0.0;
  dist[s] = 0.0;
  parent[s] = -1;
  stack.clear();
  stack.push_back(s);
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (const TreeArc& a : adj[x]) {
      if (a.to == parent[x] || label[a.to] != lab) continue;
      parent[a.to] = x;
      dist[a.to] = dist[x] + a.w;
      if (dist[a.to] > bestD) {
        bestD = dist[a.to];
        best = a.to;
      }
      stack.push_back(a.to);
    }
  }
  return {best, bestD};
}

}  // namespace

double ClusterLevel::total_potential() const {
  double s = 0.0;
  for (double p : phi) s += p;
  return s;
}

void NodeIndex::bind(const ClusterLevel& level) {
  for (Vertex r : bound_) slot_[r] = -1;
  bound_ = level.rep;
  for (int k = 0; k < level.size(); ++k) slot_[level.rep[k]] = k;
}

UnionFind make_union_find(const SubdividedMst& mst) {
  std::vector<std::pair<Vertex, Vertex>> ends;
  ends.reserve(mst.virtual_count());
  for (int j = 0; j < mst.virtual_count(); ++j) {
    const Segment& s = mst.segments[mst.virtualSegment[j]];
    ends.push_back({s.u, s.v});
  }
  return UnionFind(mst.n, std::move(ends));
}

ClusterLevel build_level1(const SubdividedMst& mst, double L0, UnionFind& uf) {
  const int N = mst.extendedCount;
  std::vector<std::vector<TreeArc>> adj(N);
  for (const SubEdge& e : mst.subEdges) {
    adj[e.a].push_back({e.b, e.w});
    adj[e.b].push_back({e.a, e.w});
  }
  std::vector<int> cluster(N, -1);
  std::vector<double> dist(N, 0.0);
  std::vector<Vertex> stack, parent(N, -1);

  int clusters = 0;
  if (N > 0) {
    std::vector<int> all(N, 0);
    Vertex a = farthest_in(adj, all, 0, 0, dist, stack, parent).first;
    double diam = farthest_in(adj, all, 0, a, dist, stack, parent).second;
    if (diam < 4.0 * L0) {
      std::fill(cluster.begin(), cluster.end(), 0);
      clusters = 1;
    } else {
      // Root at 0; children come after parents in preorder.
      std::vector<Vertex> order;
      order.reserve(N);
      std::vector<double> parentW(N, 0.0);
      parent[0] = -1;
      stack.assign(1, 0);
      while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        order.push_back(x);
        for (const TreeArc& arc : adj[x])
          if (arc.to != parent[x]) {
            parent[arc.to] = x;
            parentW[arc.to] = arc.w;
            stack.push_back(arc.to);
          }
      }
      // Phase 1: carve v with its uncarved subtree once that subtree reaches height L0.
      std::vector<double> height(N, 0.0);
      for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex v = *it;
        double h = 0.0;
        for (const TreeArc& arc : adj[v])
          if (arc.to != parent[v] && cluster[arc.to] < 0) h = std::max(h, height[arc.to] + arc.w);
        height[v] = h;
        if (h >= L0) {
          int id = clusters++;
          stack.assign(1, v);
          cluster[v] = id;
          while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (const TreeArc& arc : adj[x])
              if (arc.to != parent[x] && cluster[arc.to] < 0) {
                cluster[arc.to] = id;
                stack.push_back(arc.to);
              }
          }
        }
      }
      // Phase 2: the uncarved part around the root joins an adjacent carved subtree.
      if (cluster[0] < 0) {
        int host = -1;
        for (int k = 0; k < static_cast<int>(mst.subEdges.size()) && host < 0; ++k) {
          const SubEdge& e = mst.subEdges[k];
          if ((cluster[e.a] < 0) != (cluster[e.b] < 0)) host = std::max(cluster[e.a], cluster[e.b]);
        }
        for (Vertex x = 0; x < N; ++x)
          if (cluster[x] < 0) cluster[x] = host;
      }
    }
  }

  ClusterLevel level;
  level.level = 1;
  level.rep.assign(clusters, -1);
  level.phi.assign(clusters, 0.0);
  for (const SubEdge& e : mst.subEdges)
    if (cluster[e.a] == cluster[e.b]) uf.unite(e.a, e.b);
  std::vector<char> done(clusters, 0);
  for (Vertex x = 0; x < N; ++x) {
    int c = cluster[x];
    if (done[c]) continue;
    done[c] = 1;
    level.rep[c] = uf.find(x);
    Vertex a = farthest_in(adj, cluster, c, x, dist, stack, parent).first;
    level.phi[c] = farthest_in(adj, cluster, c, a, dist, stack, parent).second;
  }
  for (int k = 0; k < static_cast<int>(mst.subEdges.size()); ++k) {
    const SubEdge& e = mst.subEdges[k];
    if (cluster[e.a] != cluster[e.b]) level.tree.push_back({cluster[e.a], cluster[e.b], e.w, k});
  }
  return level;
}

void ClusterGraph::build_adjacency() {
  treeAdj.assign(n, {});
  clsAdj.assign(n, {});
  for (int k = 0; k < static_cast<int>(tree.size()); ++k) {
    treeAdj[tree[k].a].push_back({tree[k].b, k});
    treeAdj[tree[k].b].push_back({tree[k].a, k});
  }
  for (int k = 0; k < static_cast<int>(cls.size()); ++k) {
    clsAdj[cls[k].a].push_back({cls[k].b, k});
    clsAdj[cls[k].b].push_back({cls[k].a, k});
  }
}

double removable_factor(double t, double eps) { return t * (1.0 + 6.0 * kG * eps); }

ChainIndex::ChainIndex(const ClusterGraph& cg) : cg_(cg), chainOf_(cg.n, -1), posOf_(cg.n, -1) {
  const int n = cg.n;
  auto deg = [&](int x) { return cg.tree_degree(x); };
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (deg(s) > 2 || seen[s]) continue;
    // Walk to one end of the maximal chain of degree <= 2 nodes.
    int end = s, prev = -1;
    while (true) {
      int nxt = -1;
      for (auto [y, k] : cg.treeAdj[end])
        if (y != prev && deg(y) <= 2) nxt = y;
      if (nxt < 0 || nxt == s) break;
      prev = end;
      end = nxt;
    }
    std::vector<int> chain;
    prev = -1;
    for (int x = end; x >= 0;) {
      seen[x] = 1;
      chain.push_back(x);
      int nxt = -1;
      for (auto [y, k] : cg.treeAdj[x])
        if (y != prev && deg(y) <= 2 && !seen[y]) nxt = y;
      prev = x;
      x = nxt;
    }
    auto terminal = [&](int x, int inner) {
      for (auto [y, k] : cg.treeAdj[x])
        if (y != inner && deg(y) > 2) return y;
      return -1;
    };
    int first = chain.front(), last = chain.back();
    int t0 = terminal(first, chain.size() > 1 ? chain[1] : -1);
    int t1 = -1;
    if (chain.size() > 1) {
      t1 = terminal(last, chain[chain.size() - 2]);
    } else {
      for (auto [y, k] : cg.treeAdj[first])
        if (deg(y) > 2 && y != t0) t1 = y;
    }
    std::vector<int> path;
    if (t0 >= 0) path.push_back(t0);
    path.insert(path.end(), chain.begin(), chain.end());
    if (t1 >= 0) path.push_back(t1);
    std::vector<double> pre(path.size());
    for (std::size_t j = 0; j < path.size(); ++j) {
      pre[j] = cg.weight[path[j]];
      if (j > 0) {
        double ew = 0.0;
        for (auto [y, k] : cg.treeAdj[path[j]])
          if (y == path[j - 1]) ew = cg.tree[k].w;
        pre[j] += pre[j - 1] + ew;
      }
    }
    int id = static_cast<int>(chains_.size());
    for (std::size_t j = 0; j < path.size(); ++j)
      if (deg(path[j]) <= 2) {
        chainOf_[path[j]] = id;
        posOf_[path[j]] = static_cast<int>(j);
      }
    if (t0 >= 0 && t1 >= 0) terminalPairs_.push_back({pair_key(t0, t1), id});
    chains_.push_back(std::move(path));
    pre_.push_back(std::move(pre));
  }
  std::sort(terminalPairs_.begin(), terminalPairs_.end());
  for (const TreeEdge& e : cg.tree)
    if (deg(e.a) > 2 && deg(e.b) > 2) treePairs_.push_back(pair_key(e.a, e.b));
  std::sort(treePairs_.begin(), treePairs_.end());
}

double ChainIndex::path_weight(int a, int b) const {
  auto deg = [&](int x) { return cg_.tree_degree(x); };
  auto span = [&](int c, int p, int q) {
    if (p > q) std::swap(p, q);
    const auto& pre = pre_[c];
    return pre[q] - pre[p] + cg_.weight[chains_[c][p]];
  };
  auto terminal_pos = [&](int c, int t) {
    const auto& path = chains_[c];
    if (path.front() == t) return 0;
    if (path.back() == t) return static_cast<int>(path.size()) - 1;
    return -1;
  };
  if (a == b) return -1.0;
  if (deg(a) <= 2 && deg(b) <= 2) {
    if (chainOf_[a] != chainOf_[b]) return -1.0;
    return span(chainOf_[a], posOf_[a], posOf_[b]);
  }
  if (deg(a) > 2 && deg(b) <= 2) std::swap(a, b);
  if (deg(a) <= 2) {
    int c = chainOf_[a];
    int p = terminal_pos(c, b);
    if (p < 0) return -1.0;
    return span(c, posOf_[a], p);
  }
  std::uint64_t key = pair_key(a, b);
  if (std::binary_search(treePairs_.begin(), treePairs_.end(), key)) {
    for (auto [y, k] : cg_.treeAdj[a])
      if (y == b) return cg_.weight[a] + cg_.tree[k].w + cg_.weight[b];
  }
  auto it = std::lower_bound(terminalPairs_.begin(), terminalPairs_.end(), std::make_pair(key, -1));
  if (it == terminalPairs_.end() || it->first != key) return -1.0;
  int c = it->second;
  return span(c, terminal_pos(c, a), terminal_pos(c, b));
}

ClusterGraph build_cluster_graph(const ClusterLevel& level, const WeightedGraph& g,
                                 const std::vector<EdgeId>& levelEdges, UnionFind& uf,
                                 const NodeIndex& nodes, const ClusterGraphParams& params) {
  ClusterGraph cg;
  cg.n = level.size();
  cg.L = level.L;
  cg.Lprev = level.Lprev;
  cg.eps = params.eps;
  cg.psi = params.psi;
  cg.t = params.t;
  cg.weight = level.phi;
  cg.rep = level.rep;
  cg.tree = level.tree;
  cg.rawEdges = static_cast<int>(levelEdges.size());

  std::vector<ClassEdge> cand;
  cand.reserve(levelEdges.size());
  for (EdgeId id : levelEdges) {
    const Edge& e = g.edge(id);
    int a = nodes.node_of(uf, e.u);
    int b = nodes.node_of(uf, e.v);
    if (a == b) {
      ++cg.selfLoops;
      continue;
    }
    if (a > b) std::swap(a, b);
    cand.push_back({a, b, e.w, id});
  }
  std::sort(cand.begin(), cand.end(), [](const ClassEdge& x, const ClassEdge& y) {
    return std::tie(x.a, x.b, x.w, x.src) < std::tie(y.a, y.b, y.w, y.src);
  });
  std::vector<ClassEdge> simple;
  for (std::size_t k = 0; k < cand.size(); ++k) {
    if (k > 0 && cand[k].a == cand[k - 1].a && cand[k].b == cand[k - 1].b) {
      ++cg.parallel;
      continue;
    }
    simple.push_back(cand[k]);
  }
  cg.build_adjacency();
  ChainIndex chains(cg);
  double factor = removable_factor(params.t, params.eps);
  for (const ClassEdge& e : simple) {
    double pw = chains.path_weight(e.a, e.b);
    if (pw >= 0.0 && pw <= factor * e.w) {
      ++cg.removable;
      continue;
    }
    cg.cls.push_back(e);
  }
  std::sort(cg.cls.begin(), cg.cls.end(), [](const ClassEdge& x, const ClassEdge& y) { return x.src < y.src; });
  cg.build_adjacency();
  return cg;
}

ClusterLevel contract_level(const ClusterLevel& level, const ClusterGraph& cg, const ClusteringOutcome& outcome,
                            UnionFind& uf, double nextL) {
  ClusterLevel next;
  next.level = level.level + 1;
  next.L = nextL;
  next.Lprev = level.L;
  const int X = static_cast<int>(outcome.subgraphs.size());
  next.rep.resize(X);
  next.phi.resize(X);
  for (int x = 0; x < X; ++x) {
    const Subgraph& s = outcome.subgraphs[x];
    for (int k : s.treeEdges) uf.unite(level.rep[cg.tree[k].a], level.rep[cg.tree[k].b]);
    for (int k : s.classEdges) uf.unite(level.rep[cg.cls[k].a], level.rep[cg.cls[k].b]);
    next.rep[x] = uf.find(level.rep[s.nodes.front()]);
    next.phi[x] = s.adm;
  }
  std::vector<int> cand;
  for (int k = 0; k < static_cast<int>(cg.tree.size()); ++k)
    if (outcome.subgraphOf[cg.tree[k].a] != outcome.subgraphOf[cg.tree[k].b]) cand.push_back(k);
  std::sort(cand.begin(), cand.end(), [&](int x, int y) {
    return std::tie(cg.tree[x].w, cg.tree[x].src) < std::tie(cg.tree[y].w, cg.tree[y].src);
  });
  std::vector<int> parent(X);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int k : cand) {
    int a = outcome.subgraphOf[cg.tree[k].a];
    int b = outcome.subgraphOf[cg.tree[k].b];
    int ra = find(a), rb = find(b);
    if (ra == rb) continue;
    parent[ra] = rb;
    next.tree.push_back({a, b, cg.tree[k].w, cg.tree[k].src});
  }
  return next;
}

std::vector<int> cluster_assignment(const ClusterLevel& level, UnionFind& uf, int extendedCount) {
  NodeIndex idx(extendedCount);
  idx.bind(level);
  std::vector<int> out(extendedCount);
  for (Vertex x = 0; x < extendedCount; ++x) out[x] = idx.node_of(uf, x);
  return out;
}

}  // namespace lspan
