#include "lspan/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <unordered_set>
#include <utility>
#include <vector>

namespace lspan {

namespace {

std::uint64_t pair_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

template <class T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_index(rng, i)]);
}

}  // namespace

WeightedGraph random_connected_graph(int n, int m, double wmin, double wmax, std::uint64_t seed) {
  if (n < 1) throw InvalidInput("n must be positive");
  long long maxEdges = static_cast<long long>(n) * (n - 1) / 2;
  if (m < n - 1) throw InvalidInput("m must be at least n - 1 for a connected graph");
  if (m > maxEdges) throw InvalidInput("m exceeds the number of vertex pairs");
  if (!(wmin > 0.0) || !(wmax >= wmin)) throw InvalidInput("weight range must satisfy 0 < wmin <= wmax");
  std::mt19937_64 rng(seed);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  shuffle(perm, rng);
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(m);
  std::unordered_set<std::uint64_t> used;
  used.reserve(static_cast<std::size_t>(m) * 2);
  for (int i = 1; i < n; ++i) {
    int parent = perm[uniform_index(rng, i)];
    pairs.push_back({perm[i], parent});
    used.insert(pair_key(perm[i], parent));
  }
  long long extra = m - (n - 1);
  if (extra * 2 > maxEdges) {
    std::vector<std::pair<int, int>> rest;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (!used.count(pair_key(a, b))) rest.push_back({a, b});
    shuffle(rest, rng);
    pairs.insert(pairs.end(), rest.begin(), rest.begin() + extra);
  } else {
    while (extra > 0) {
      int a = static_cast<int>(uniform_index(rng, n));
      int b = static_cast<int>(uniform_index(rng, n));
      if (a == b || !used.insert(pair_key(a, b)).second) continue;
      pairs.push_back({a, b});
      --extra;
    }
  }
  shuffle(pairs, rng);
  WeightedGraph g(n);
  for (auto [a, b] : pairs) g.add_edge(a, b, wmin + (wmax - wmin) * uniform01(rng));
  return g;
}

PointSet uniform_points(int n, int d, std::uint64_t seed) {
  if (n < 0 || d < 1) throw InvalidInput("need n >= 0 and d >= 1");
  std::mt19937_64 rng(seed);
  std::vector<double> coords(static_cast<std::size_t>(n) * d);
  for (double& c : coords) c = uniform01(rng);
  // Redraw any point equal to an earlier one.
  while (true) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    auto at = [&](int i) { return coords.begin() + static_cast<std::ptrdiff_t>(i) * d; };
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (std::equal(at(a), at(a) + d, at(b))) return a < b;
      return std::lexicographical_compare(at(a), at(a) + d, at(b), at(b) + d);
    });
    bool clash = false;
    for (int j = 1; j < n; ++j)
      if (std::equal(at(order[j]), at(order[j]) + d, at(order[j - 1]))) {
        clash = true;
        for (int c = 0; c < d; ++c) *(at(order[j]) + c) = uniform01(rng);
      }
    if (!clash) break;
  }
  return PointSet(d, std::move(coords));
}

WeightedGraph grid_graph(int side) {
  if (side < 1) throw InvalidInput("grid side must be positive");
  WeightedGraph g(side * side);
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c) {
      int v = r * side + c;
      if (c + 1 < side) g.add_edge(v, v + 1, 1.0);
      if (r + 1 < side) g.add_edge(v, v + side, 1.0);
    }
  return g;
}

WeightedGraph planar_triangulation(int n, std::uint64_t seed, PointSet* points) {
  if (n < 3) throw InvalidInput("a triangulation needs at least 3 points");
  std::mt19937_64 rng(seed);
  std::vector<double> xy;
  xy.reserve(static_cast<std::size_t>(n) * 2);
  auto area2 = [&](int a, int b, int c) {
    return (xy[2 * b] - xy[2 * a]) * (xy[2 * c + 1] - xy[2 * a + 1]) -
           (xy[2 * b + 1] - xy[2 * a + 1]) * (xy[2 * c] - xy[2 * a]);
  };
  do {
    xy.clear();
    for (int j = 0; j < 6; ++j) xy.push_back(uniform01(rng));
  } while (std::abs(area2(0, 1, 2)) < 0.05);
  std::vector<std::array<int, 3>> faces{{0, 1, 2}};
  std::vector<std::pair<int, int>> pairs{{0, 1}, {1, 2}, {0, 2}};
  for (int p = 3; p < n; ++p) {
    std::size_t f = uniform_index(rng, faces.size());
    auto [a, b, c] = faces[f];
    // Uniform point of the triangle, kept away from its sides.
    double r1 = std::sqrt(uniform01(rng)), r2 = uniform01(rng);
    double la = 1.0 - r1, lb = r1 * (1.0 - r2), lc = r1 * r2;
    const double floor = 0.05;
    la = floor + (1.0 - 3.0 * floor) * la;
    lb = floor + (1.0 - 3.0 * floor) * lb;
    lc = floor + (1.0 - 3.0 * floor) * lc;
    xy.push_back(la * xy[2 * a] + lb * xy[2 * b] + lc * xy[2 * c]);
    xy.push_back(la * xy[2 * a + 1] + lb * xy[2 * b + 1] + lc * xy[2 * c + 1]);
    faces[f] = {a, b, p};
    faces.push_back({b, c, p});
    faces.push_back({a, c, p});
    pairs.push_back({a, p});
    pairs.push_back({b, p});
    pairs.push_back({c, p});
  }
  PointSet ps(2, std::move(xy));
  WeightedGraph g(n);
  for (auto [a, b] : pairs) g.add_edge(a, b, ps.distance(a, b));
  if (points) *points = std::move(ps);
  return g;
}

}  // namespace lspan
