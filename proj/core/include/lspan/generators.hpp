#pragma once

#include <cstdint>
#include <random>

#include "lspan/graph.hpp"

namespace lspan {

// Uniform real in [0, 1) from the top 53 bits of one draw; identical on every
// platform, unlike std::uniform_real_distribution.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n).
inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
  return static_cast<std::uint64_t>(uniform01(rng) * static_cast<double>(n));
}

// Connected simple graph: a random spanning tree plus m - n + 1 further
// distinct vertex pairs, weights uniform in [wmin, wmax). Requires
// n - 1 <= m <= n (n - 1) / 2.
WeightedGraph random_connected_graph(int n, int m, double wmin, double wmax, std::uint64_t seed);

// n distinct points uniform in [0, 1)^d.
PointSet uniform_points(int n, int d, std::uint64_t seed);

// side x side grid with unit weights; vertex (r, c) has id r * side + c.
WeightedGraph grid_graph(int side);

// Stacked planar triangulation on n >= 3 points: a random triangle of the unit
// square, then every further point inside a uniformly chosen face, splitting
// it into three. Weights are Euclidean lengths; positions are returned in points.
WeightedGraph planar_triangulation(int n, std::uint64_t seed, PointSet* points = nullptr);

}  // namespace lspan
