#include "lspan/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

namespace lspan {

WeightedGraph::WeightedGraph(int n) : n_(n), adj_(n) {
  if (n < 0) throw InvalidInput("negative vertex count");
}

WeightedGraph::WeightedGraph(int n, const std::vector<Edge>& edges) : WeightedGraph(n) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) add_edge(e.u, e.v, e.w);
}

EdgeId WeightedGraph::add_edge(Vertex u, Vertex v, double w) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw InvalidInput("edge endpoint out of range");
  if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
  if (!std::isfinite(w) || w <= 0.0) throw InvalidInput("edge weight must be finite and positive");
  EdgeId id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({u, v, w});
  adj_[u].push_back(id);
  adj_[v].push_back(id);
  return id;
}

double WeightedGraph::total_weight() const {
  double s = 0.0;
  for (const Edge& e : edges_) s += e.w;
  return s;
}

double WeightedGraph::total_weight(const std::vector<EdgeId>& subset) const {
  double s = 0.0;
  for (EdgeId id : subset) s += edges_[id].w;
  return s;
}

double WeightedGraph::min_weight() const {
  double best = 0.0;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (i == 0 || edges_[i].w < best) best = edges_[i].w;
  return best;
}

int WeightedGraph::component_count() const {
  std::vector<int> seen(n_, 0);
  std::vector<Vertex> stack;
  int comps = 0;
  for (Vertex s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    ++comps;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (EdgeId id : adj_[x]) {
        Vertex y = other(id, x);
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  return comps;
}

WeightedGraph WeightedGraph::scaled(double factor) const {
  WeightedGraph out(n_);
  out.edges_.reserve(edges_.size());
  for (const Edge& e : edges_) out.add_edge(e.u, e.v, e.w * factor);
  return out;
}

std::vector<EdgeId> dedup_parallel(const WeightedGraph& g) {
  std::vector<EdgeId> order(g.m());
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](EdgeId id) {
    const Edge& e = g.edge(id);
    return std::pair<int, int>(std::min(e.u, e.v), std::max(e.u, e.v));
  };
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    auto ka = key(a), kb = key(b);
    if (ka != kb) return ka < kb;
    if (g.edge(a).w != g.edge(b).w) return g.edge(a).w < g.edge(b).w;
    return a < b;
  });
  std::vector<EdgeId> kept;
  for (std::size_t i = 0; i < order.size(); ++i)
    if (i == 0 || key(order[i]) != key(order[i - 1])) kept.push_back(order[i]);
  std::sort(kept.begin(), kept.end());
  return kept;
}

WeightedGraph edge_subgraph(const WeightedGraph& g, const std::vector<EdgeId>& ids) {
  WeightedGraph h(g.n());
  for (EdgeId id : ids) {
    const Edge& e = g.edge(id);
    h.add_edge(e.u, e.v, e.w);
  }
  return h;
}

PointSet::PointSet(int d, std::vector<double> coords) : d_(d), coords_(std::move(coords)) {
  if (d < 1) throw InvalidInput("point dimension must be at least 1");
  if (coords_.size() % static_cast<std::size_t>(d) != 0)
    throw DimensionMismatch("coordinate count is not a multiple of the dimension");
  for (double c : coords_)
    if (!std::isfinite(c)) throw InvalidInput("non-finite coordinate");
}

double PointSet::distance(int a, int b) const {
  const double* p = point(a);
  const double* q = point(b);
  double s = 0.0;
  for (int k = 0; k < d_; ++k) {
    double t = p[k] - q[k];
    s += t * t;
  }
  return std::sqrt(s);
}

void PointSet::require_distinct() const {
  std::vector<int> idx(n());
  std::iota(idx.begin(), idx.end(), 0);
  auto less = [&](int a, int b) {
    return std::lexicographical_compare(point(a), point(a) + d_, point(b), point(b) + d_);
  };
  std::sort(idx.begin(), idx.end(), less);
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (std::equal(point(idx[i]), point(idx[i]) + d_, point(idx[i - 1])))
      throw DegeneratePoints("points " + std::to_string(idx[i - 1]) + " and " +
                             std::to_string(idx[i]) + " coincide");
}

WeightedGraph complete_euclidean(const PointSet& p) {
  WeightedGraph g(p.n());
  for (int a = 0; a < p.n(); ++a)
    for (int b = a + 1; b < p.n(); ++b) g.add_edge(a, b, p.distance(a, b));
  return g;
}

}  // namespace lspan
