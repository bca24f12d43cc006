#include "lspan/base_spanner.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "lspan/cones.hpp"

namespace lspan {

namespace {

using Cell = std::vector<long long>;

std::map<Cell, std::vector<int>> bucket(const PointSet& p, double side) {
  std::map<Cell, std::vector<int>> grid;
  Cell c(p.d());
  for (int i = 0; i < p.n(); ++i) {
    for (int j = 0; j < p.d(); ++j) c[j] = static_cast<long long>(std::floor(p.point(i)[j] / side));
    grid[c].push_back(i);
  }
  return grid;
}

// Calls f(i, j) for every i and every candidate j != i in the 3^d cells around i.
template <class F>
void for_grid_neighbours(const PointSet& p, double side, F&& f) {
  const int d = p.d();
  auto grid = bucket(p, side);
  Cell base(d), probe(d);
  std::vector<int> off(d);
  for (int i = 0; i < p.n(); ++i) {
    for (int j = 0; j < d; ++j) base[j] = static_cast<long long>(std::floor(p.point(i)[j] / side));
    std::fill(off.begin(), off.end(), -1);
    while (true) {
      for (int j = 0; j < d; ++j) probe[j] = base[j] + off[j];
      auto it = grid.find(probe);
      if (it != grid.end())
        for (int q : it->second)
          if (q != i) f(i, q);
      int j = 0;
      while (j < d && off[j] == 1) off[j++] = -1;
      if (j == d) break;
      ++off[j];
    }
  }
}

WeightedGraph cone_graph(const PointSet& p, double epsBase, const std::vector<std::vector<int>>& candidates) {
  ConeFamily cones(p.d(), yao_cone_angle(epsBase));
  const int d = p.d();
  std::vector<double> dir(d);
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::tuple<int, double, int>> cand;
  for (int i = 0; i < p.n(); ++i) {
    cand.clear();
    for (int j : candidates[i]) {
      for (int c = 0; c < d; ++c) dir[c] = p.point(j)[c] - p.point(i)[c];
      cand.push_back({cones.cone_of(dir.data()), p.distance(i, j), j});
    }
    std::sort(cand.begin(), cand.end());
    for (std::size_t k = 0; k < cand.size(); ++k)
      if (k == 0 || std::get<0>(cand[k]) != std::get<0>(cand[k - 1])) {
        int j = std::get<2>(cand[k]);
        pairs.push_back({std::min(i, j), std::max(i, j)});
      }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  WeightedGraph g(p.n());
  for (auto [a, b] : pairs) g.add_edge(a, b, p.distance(a, b));
  return g;
}

}  // namespace

WeightedGraph yao_graph(const PointSet& points, double epsBase) {
  points.require_distinct();
  std::vector<std::vector<int>> candidates(points.n());
  for (int i = 0; i < points.n(); ++i)
    for (int j = 0; j < points.n(); ++j)
      if (j != i) candidates[i].push_back(j);
  return cone_graph(points, epsBase, candidates);
}

std::vector<std::pair<int, int>> udg_pairs(const PointSet& points, double radius) {
  if (!(radius > 0.0)) throw InvalidInput("radius must be positive");
  std::vector<std::pair<int, int>> out;
  for_grid_neighbours(points, radius, [&](int i, int j) {
    if (i < j && points.distance(i, j) <= radius) out.push_back({i, j});
  });
  std::sort(out.begin(), out.end());
  return out;
}

WeightedGraph udg_yao_graph(const PointSet& points, double radius, double epsBase) {
  points.require_distinct();
  std::vector<std::vector<int>> candidates(points.n());
  for (auto [a, b] : udg_pairs(points, radius)) {
    candidates[a].push_back(b);
    candidates[b].push_back(a);
  }
  for (auto& c : candidates) std::sort(c.begin(), c.end());
  WeightedGraph g = cone_graph(points, epsBase, candidates);
  if (!g.connected()) throw DisconnectedGraph("unit disk graph is disconnected at this radius");
  return g;
}

}  // namespace lspan
