#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <tuple>

#include "lspan/cones.hpp"
#include "lspan/generators.hpp"
#include "lspan/ssa.hpp"
#include "support.hpp"

namespace lspan {
namespace {

std::vector<double> random_direction(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<double> x(d);
  double s = 0.0;
  for (double& c : x) {
    c = g(rng);
    s += c * c;
  }
  for (double& c : x) c /= std::sqrt(s);
  return x;
}

double angle(const std::vector<double>& a, const std::vector<double>& b) {
  double dot = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) dot += a[j] * b[j];
  return std::acos(std::clamp(dot, -1.0, 1.0));
}

TEST(Cones, PlanarSectors) {
  ConeFamily six(2, std::numbers::pi / 3);
  EXPECT_EQ(six.size(), 6);
  for (int j = 0; j < 6; ++j) {
    double mid = (j + 0.5) * std::numbers::pi / 3;
    double dir[2] = {std::cos(mid), std::sin(mid)};
    EXPECT_EQ(six.cone_of(dir), j);
  }
  // Sector boundaries belong to the sector that starts there.
  double east[2] = {1.0, 0.0};
  double north[2] = {0.0, 1.0};
  EXPECT_EQ(six.cone_of(east), 0);
  EXPECT_EQ(ConeFamily(2, std::numbers::pi / 2).cone_of(north), 1);
  // A width that does not divide the circle leaves a narrower last sector.
  ConeFamily odd(2, 2.5);
  EXPECT_EQ(odd.size(), 3);
  double south[2] = {0.0, -1.0};
  EXPECT_EQ(odd.cone_of(south), 1);
}

TEST(Cones, LineHasTwoHalves) {
  ConeFamily line(1, 0.1);
  EXPECT_EQ(line.size(), 2);
  double plus = 3.0, minus = -0.5;
  EXPECT_EQ(line.cone_of(&plus), 0);
  EXPECT_EQ(line.cone_of(&minus), 1);
}

TEST(Cones, HigherDimensionalConesAreNarrow) {
  std::mt19937_64 rng(5);
  for (auto [d, width] : {std::pair{3, 0.6}, std::pair{3, 0.3}, std::pair{4, 0.8}}) {
    ConeFamily f(d, width);
    EXPECT_GE(f.size(), 1 << d);
    std::vector<std::vector<std::vector<double>>> members(f.size());
    for (int s = 0; s < 6000; ++s) {
      std::vector<double> x = random_direction(d, rng);
      int c = f.cone_of(x.data());
      ASSERT_GE(c, 0);
      ASSERT_LT(c, f.size());
      members[c].push_back(std::move(x));
    }
    for (const auto& group : members)
      for (std::size_t a = 0; a < group.size(); ++a)
        for (std::size_t b = a + 1; b < group.size(); ++b) EXPECT_LE(angle(group[a], group[b]), width + 1e-9);
  }
}

TEST(Cones, YaoAngleMeetsStretchBound) {
  for (double eb : {0.01, 0.1, 0.5, 1.0}) {
    double t = yao_cone_angle(eb);
    EXPECT_GT(t, 0.0);
    EXPECT_NEAR(1.0 / (std::cos(t) - std::sin(t)), 1.0 + eb, 1e-9);
  }
  EXPECT_THROW(yao_cone_angle(0.0), InvalidInput);
}

TEST(StretchConstants, Values) {
  EXPECT_DOUBLE_EQ(geom_stretch_constant(62.0), 2384.0);
  EXPECT_DOUBLE_EQ(general_stretch_constant(62.0), 125.0);
}

SsaInput random_geometric_input(int n, int d, int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SsaInput in;
  in.nodeCount = n;
  in.eps = 0.4;
  in.L = 1.0;
  PointSet p = uniform_points(n, d, seed);
  in.positions = p.coords();
  std::set<std::pair<int, int>> seen;
  while (static_cast<int>(in.edges.size()) < m) {
    int a = static_cast<int>(uniform_index(rng, n)), b = static_cast<int>(uniform_index(rng, n));
    if (a == b || !seen.insert({std::min(a, b), std::max(a, b)}).second) continue;
    in.edges.push_back({a, b, 1.0});
  }
  return in;
}

// Nearest neighbour per (node, cone), ties by neighbour id; an edge survives
// when either endpoint picks it.
std::vector<int> nearest_in_cone(const SsaInput& in, int d) {
  ConeFamily cones(d, in.eps);
  std::map<std::pair<int, int>, std::tuple<double, int, int>> best;
  auto consider = [&](int u, int v, int k) {
    std::vector<double> dir(d);
    double s = 0.0;
    for (int c = 0; c < d; ++c) {
      dir[c] = in.positions[v * d + c] - in.positions[u * d + c];
      s += dir[c] * dir[c];
    }
    auto key = std::make_pair(u, cones.cone_of(dir.data()));
    auto cand = std::make_tuple(std::sqrt(s), v, k);
    auto it = best.find(key);
    if (it == best.end() || cand < it->second) best[key] = cand;
  };
  for (int k = 0; k < static_cast<int>(in.edges.size()); ++k) {
    consider(in.edges[k].a, in.edges[k].b, k);
    consider(in.edges[k].b, in.edges[k].a, k);
  }
  std::set<int> kept;
  for (auto& [key, v] : best) kept.insert(std::get<2>(v));
  return {kept.begin(), kept.end()};
}

TEST(SsaGeom, KeepsNearestPerCone) {
  for (int d : {2, 3}) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      SsaInput in = random_geometric_input(60, d, 600, seed);
      SsaOutput out = ssa_geom(in, d);
      EXPECT_EQ(out.pruned, nearest_in_cone(in, d));
      EXPECT_LE(static_cast<double>(out.pruned.size()), out.declaredSparsity * in.nodeCount);
      EXPECT_DOUBLE_EQ(out.stretchConstant, 2384.0);
    }
  }
}

TEST(SsaGeom, RejectsMissingPositions) {
  SsaInput in;
  in.nodeCount = 3;
  in.edges = {{0, 1, 1.0}};
  in.eps = 0.3;
  EXPECT_THROW(ssa_geom(in, 2), DimensionMismatch);
}

SsaInput from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  SsaInput in;
  in.nodeCount = n;
  in.eps = 0.1;
  in.L = 1.0;
  for (auto [a, b] : pairs) in.edges.push_back({a, b, 1.0});
  return in;
}

TEST(SsaGeneral, TreeKeepsEverything) {
  std::vector<std::pair<int, int>> tree;
  for (int x = 1; x < 30; ++x) tree.push_back({x / 2, x});
  SsaOutput out = ssa_general(from_pairs(30, tree), 2, 1);
  EXPECT_EQ(out.pruned.size(), tree.size());
  EXPECT_DOUBLE_EQ(out.stretchConstant, 125.0);
}

TEST(SsaGeneral, CompleteGraphOnFour) {
  std::vector<std::pair<int, int>> k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  SsaOutput out = ssa_general(from_pairs(4, k4), 2, 1);
  EXPECT_EQ(out.pruned, (std::vector<int>{0, 1, 2}));
  std::vector<int> keep(out.pruned.begin(), out.pruned.end());
  EXPECT_LE(test::max_hop_stretch(4, k4, keep), 3);
  EXPECT_THROW(ssa_general(from_pairs(4, k4), 1, 1), InvalidInput);
}

TEST(SsaMinor, ReturnsEveryEdge) {
  SsaOutput out = ssa_minor(from_pairs(4, {{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(out.pruned, (std::vector<int>{0, 1, 2}));
  EXPECT_DOUBLE_EQ(out.declaredSparsity, 0.75);
}

std::vector<std::pair<int, int>> gnp(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (uniform01(rng) < p) e.push_back({a, b});
  return e;
}

TEST(UnweightedSpanner, ShortCycles) {
  std::vector<std::pair<int, int>> c5{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
  EXPECT_EQ(unweighted_spanner(5, c5, 2, 1).size(), 5u);
  // Stretch 5 lets the closing edge of C5 go, but not of C7.
  EXPECT_EQ(greedy_unweighted_spanner(5, c5, 3).size(), 4u);
  std::vector<std::pair<int, int>> c7;
  for (int x = 0; x < 7; ++x) c7.push_back({x, (x + 1) % 7});
  EXPECT_EQ(greedy_unweighted_spanner(7, c7, 3).size(), 7u);
  std::vector<std::pair<int, int>> c4{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  EXPECT_EQ(greedy_unweighted_spanner(4, c4, 2).size(), 3u);
}

TEST(UnweightedSpanner, RandomGraphsMeetStretchAndSize) {
  for (int k : {2, 3}) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      auto edges = gnp(200, 0.2, seed);
      std::vector<int> keep = unweighted_spanner(200, edges, k, seed);
      EXPECT_LE(test::max_hop_stretch(200, edges, keep), 2 * k - 1);
      EXPECT_LE(static_cast<double>(keep.size()), unweighted_spanner_bound(200, k));
      EXPECT_TRUE(std::is_sorted(keep.begin(), keep.end()));
    }
  }
}

TEST(UnweightedSpanner, ClusterGrowingMeetsStretch) {
  for (int k : {2, 3, 4}) {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      auto edges = gnp(700, 0.03, seed * 7 + k);
      std::vector<int> keep = cluster_growing_spanner(700, edges, k, seed);
      EXPECT_LE(test::max_hop_stretch(700, edges, keep), 2 * k - 1) << "k " << k << " seed " << seed;
      std::vector<int> viaDispatch = unweighted_spanner(700, edges, k, seed);
      EXPECT_LE(static_cast<double>(viaDispatch.size()), unweighted_spanner_bound(700, k));
      EXPECT_LE(test::max_hop_stretch(700, edges, viaDispatch), 2 * k - 1);
    }
  }
}

TEST(UnweightedSpanner, GreedyHasGirthAboveTwoK) {
  auto edges = gnp(60, 0.3, 9);
  for (int k : {2, 3}) {
    std::vector<int> keep = greedy_unweighted_spanner(60, edges, k);
    // Every kept edge is the only short route between its ends.
    for (int e : keep) {
      std::vector<int> others;
      for (int f : keep)
        if (f != e) others.push_back(f);
      std::vector<int> hops = test::bfs_hops(60, edges, others, edges[e].first);
      int h = hops[edges[e].second];
      EXPECT_TRUE(h < 0 || h >= 2 * k);
    }
  }
}

}  // namespace
}  // namespace lspan
