#include "lspan/augmented.hpp"

#include <algorithm>
#include <utility>

#include "lspan/graph.hpp"

namespace lspan {
namespace {

struct Arc {
  int to;
  double w;
  int id;
};

using Adj = std::vector<std::vector<Arc>>;

Adj build_adj(int n, const std::vector<LocalEdge>& edges) {
  Adj adj(n);
  for (int id = 0; id < static_cast<int>(edges.size()); ++id) {
    const LocalEdge& e = edges[id];
    if (e.a < 0 || e.b < 0 || e.a >= n || e.b >= n) throw UnsupportedShape("edge endpoint out of range");
    adj[e.a].push_back({e.b, e.w, id});
    adj[e.b].push_back({e.a, e.w, id});
  }
  return adj;
}

// Farthest node from start by augmented distance, never crossing the blocked
// edge and, when allowed is given, staying on allowed nodes.
std::pair<int, double> farthest(const Adj& adj, const std::vector<double>& wt, int start, int blocked,
                                const std::vector<char>* allowed, std::vector<double>& dist) {
  int best = start;
  double bestD = wt[start];
  dist[start] = wt[start];
  std::vector<std::pair<int, int>> st{{start, -1}};
  while (!st.empty()) {
    auto [x, via] = st.back();
    st.pop_back();
    for (const Arc& a : adj[x]) {
      if (a.id == via || a.id == blocked) continue;
      if (allowed && !(*allowed)[a.to]) continue;
      dist[a.to] = dist[x] + a.w + wt[a.to];
      if (dist[a.to] > bestD) {
        bestD = dist[a.to];
        best = a.to;
      }
      st.push_back({a.to, a.id});
    }
  }
  return {best, bestD};
}

double tree_diameter(const Adj& adj, const std::vector<double>& wt, int start, int blocked,
                     const std::vector<char>* allowed) {
  std::vector<double> dist(wt.size(), 0.0);
  int a = farthest(adj, wt, start, blocked, allowed, dist).first;
  return farthest(adj, wt, a, blocked, allowed, dist).second;
}

int count_reachable(const Adj& adj, int n) {
  std::vector<char> seen(n, 0);
  std::vector<int> st{0};
  seen[0] = 1;
  int c = 1;
  while (!st.empty()) {
    int x = st.back();
    st.pop_back();
    for (const Arc& a : adj[x])
      if (!seen[a.to]) {
        seen[a.to] = 1;
        ++c;
        st.push_back(a.to);
      }
  }
  return c;
}

// Cycle of a connected unicyclic graph: nodes in order and the edge ids between
// consecutive nodes (cycleEdges[j] joins nodes[j] and nodes[j+1 mod k]).
void find_cycle(const Adj& adj, int n, std::vector<int>& nodes, std::vector<int>& cycleEdges,
                std::vector<char>& onCycle) {
  std::vector<int> deg(n);
  for (int x = 0; x < n; ++x) deg[x] = static_cast<int>(adj[x].size());
  std::vector<char> removed(n, 0);
  std::vector<int> queue;
  for (int x = 0; x < n; ++x)
    if (deg[x] == 1) queue.push_back(x);
  for (std::size_t h = 0; h < queue.size(); ++h) {
    int x = queue[h];
    removed[x] = 1;
    for (const Arc& a : adj[x])
      if (!removed[a.to] && --deg[a.to] == 1) queue.push_back(a.to);
  }
  onCycle.assign(n, 0);
  int start = -1;
  for (int x = 0; x < n; ++x)
    if (!removed[x]) {
      onCycle[x] = 1;
      if (start < 0) start = x;
    }
  nodes.clear();
  cycleEdges.clear();
  int x = start;
  int via = -1;
  do {
    nodes.push_back(x);
    int nextNode = -1, nextEdge = -1;
    for (const Arc& a : adj[x])
      if (onCycle[a.to] && a.id != via) {
        nextNode = a.to;
        nextEdge = a.id;
        break;
      }
    cycleEdges.push_back(nextEdge);
    via = nextEdge;
    x = nextNode;
  } while (x != start);
}

}  // namespace

double augmented_diameter(const std::vector<double>& wt, const std::vector<LocalEdge>& edges) {
  int n = static_cast<int>(wt.size());
  if (n == 0) return 0.0;
  Adj adj = build_adj(n, edges);
  if (count_reachable(adj, n) != n) throw UnsupportedShape("subgraph is not connected");
  int m = static_cast<int>(edges.size());
  if (m == n - 1) return tree_diameter(adj, wt, 0, -1, nullptr);
  if (m > n) throw UnsupportedShape("subgraph has more than one independent cycle");

  std::vector<int> cyc, cycEdges;
  std::vector<char> onCycle;
  find_cycle(adj, n, cyc, cycEdges, onCycle);
  int k = static_cast<int>(cyc.size());

  // Attach every off-cycle node to its cycle root.
  std::vector<int> root(n, -1);
  std::vector<int> st;
  for (int c : cyc) {
    root[c] = c;
    st.push_back(c);
  }
  while (!st.empty()) {
    int x = st.back();
    st.pop_back();
    for (const Arc& a : adj[x])
      if (root[a.to] < 0) {
        root[a.to] = root[x];
        st.push_back(a.to);
      }
  }

  std::vector<std::vector<int>> members(n);
  for (int x = 0; x < n; ++x) members[root[x]].push_back(x);
  double best = 0.0;
  std::vector<double> depth(k, 0.0);
  std::vector<char> allowed(n, 0);
  std::vector<double> dist(n, 0.0);
  for (int j = 0; j < k; ++j) {
    // A path between two nodes of one hanging tree never leaves it.
    int c = cyc[j];
    for (int x : members[c]) allowed[x] = 1;
    depth[j] = farthest(adj, wt, c, -1, &allowed, dist).second - wt[c];
    best = std::max(best, tree_diameter(adj, wt, c, -1, &allowed));
    for (int x : members[c]) allowed[x] = 0;
  }

  std::vector<double> pre(k + 1, 0.0);
  for (int j = 0; j < k; ++j) pre[j + 1] = pre[j] + wt[cyc[j]] + edges[cycEdges[j]].w;
  double total = pre[k];
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      double arc1 = pre[b] - pre[a] + wt[cyc[b]];
      double arc2 = total - (pre[b] - pre[a]) + wt[cyc[a]];
      best = std::max(best, depth[a] + depth[b] + std::min(arc1, arc2));
    }
  return best;
}

double augmented_diameter_by_deletion(const std::vector<double>& wt, const std::vector<LocalEdge>& edges) {
  int n = static_cast<int>(wt.size());
  if (n == 0) return 0.0;
  Adj adj = build_adj(n, edges);
  if (count_reachable(adj, n) != n) throw UnsupportedShape("subgraph is not connected");
  int m = static_cast<int>(edges.size());
  if (m == n - 1) return tree_diameter(adj, wt, 0, -1, nullptr);
  if (m > n) throw UnsupportedShape("subgraph has more than one independent cycle");
  std::vector<int> cyc, cycEdges;
  std::vector<char> onCycle;
  find_cycle(adj, n, cyc, cycEdges, onCycle);
  double best = -1.0;
  for (int id : cycEdges) {
    double d = tree_diameter(adj, wt, 0, id, nullptr);
    if (best < 0.0 || d < best) best = d;
  }
  return best;
}

}  // namespace lspan
