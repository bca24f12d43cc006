#include "lspan/shortest_path.hpp"

#include <functional>
#include <queue>

namespace lspan {
namespace {

using Item = std::pair<double, int>;
using MinHeap = std::priority_queue<Item, std::vector<Item>, std::greater<Item>>;

}  // namespace

AdjList adjacency(const WeightedGraph& g) {
  AdjList adj(g.n());
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back({e.v, e.w});
    adj[e.v].push_back({e.u, e.w});
  }
  return adj;
}

AdjList adjacency(const WeightedGraph& g, const std::vector<EdgeId>& subset) {
  AdjList adj(g.n());
  for (EdgeId id : subset) {
    const Edge& e = g.edge(id);
    adj[e.u].push_back({e.v, e.w});
    adj[e.v].push_back({e.u, e.w});
  }
  return adj;
}

std::vector<double> dijkstra(const AdjList& adj, int source) {
  std::vector<double> dist(adj.size(), kInf);
  MinHeap heap;
  dist[source] = 0.0;
  heap.push({0.0, source});
  while (!heap.empty()) {
    auto [d, x] = heap.top();
    heap.pop();
    if (d > dist[x]) continue;
    for (auto [y, w] : adj[x]) {
      double nd = d + w;
      if (nd < dist[y]) {
        dist[y] = nd;
        heap.push({nd, y});
      }
    }
  }
  return dist;
}

std::vector<double> dijkstra(const WeightedGraph& g, Vertex source) { return dijkstra(adjacency(g), source); }

DijkstraWorkspace::DijkstraWorkspace(int n) { resize(n); }

void DijkstraWorkspace::resize(int n) {
  dist_.assign(n, kInf);
  isTarget_.assign(n, 0);
  touched_.clear();
}

void DijkstraWorkspace::reset() {
  for (int x : touched_) dist_[x] = kInf;
  touched_.clear();
}

double DijkstraWorkspace::distance(const AdjList& adj, int s, int t, double cutoff) {
  reset();
  MinHeap heap;
  dist_[s] = 0.0;
  touched_.push_back(s);
  heap.push({0.0, s});
  while (!heap.empty()) {
    auto [d, x] = heap.top();
    heap.pop();
    if (d > dist_[x]) continue;
    if (x == t) return d;
    for (auto [y, w] : adj[x]) {
      double nd = d + w;
      if (nd > cutoff) continue;
      if (nd < dist_[y]) {
        if (dist_[y] == kInf) touched_.push_back(y);
        dist_[y] = nd;
        heap.push({nd, y});
      }
    }
  }
  return kInf;
}

const std::vector<double>& DijkstraWorkspace::run(const AdjList& adj, int s, double cutoff) {
  reset();
  MinHeap heap;
  dist_[s] = 0.0;
  touched_.push_back(s);
  heap.push({0.0, s});
  while (!heap.empty()) {
    auto [d, x] = heap.top();
    heap.pop();
    if (d > dist_[x]) continue;
    for (auto [y, w] : adj[x]) {
      double nd = d + w;
      if (nd > cutoff) continue;
      if (nd < dist_[y]) {
        if (dist_[y] == kInf) touched_.push_back(y);
        dist_[y] = nd;
        heap.push({nd, y});
      }
    }
  }
  return dist_;
}

const std::vector<double>& DijkstraWorkspace::run_to(const AdjList& adj, int s, const std::vector<int>& targets) {
  reset();
  int pending = 0;
  for (int t : targets) {
    if (!isTarget_[t]) ++pending;
    isTarget_[t] = 1;
  }
  MinHeap heap;
  dist_[s] = 0.0;
  touched_.push_back(s);
  heap.push({0.0, s});
  while (!heap.empty() && pending > 0) {
    auto [d, x] = heap.top();
    heap.pop();
    if (d > dist_[x]) continue;
    if (isTarget_[x]) {
      isTarget_[x] = 0;
      --pending;
    }
    for (auto [y, w] : adj[x]) {
      double nd = d + w;
      if (nd < dist_[y]) {
        if (dist_[y] == kInf) touched_.push_back(y);
        dist_[y] = nd;
        heap.push({nd, y});
      }
    }
  }
  for (int t : targets) isTarget_[t] = 0;
  return dist_;
}

}  // namespace lspan
