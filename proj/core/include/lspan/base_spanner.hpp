#pragma once

#include <utility>
#include <vector>

#include "lspan/graph.hpp"

namespace lspan {

// Yao graph: every point keeps an edge to its nearest point (ties by id) in each
// cone of width yao_cone_angle(epsBase), giving a (1 + epsBase)-spanner of the
// complete Euclidean graph. Vertex ids are point ids.
WeightedGraph yao_graph(const PointSet& points, double epsBase);

// Same construction restricted to pairs at distance <= radius; candidates come
// from a grid with cell side radius. The result is a (1 + epsBase)-spanner of
// the unit disk graph. Throws DisconnectedGraph when that graph is disconnected.
WeightedGraph udg_yao_graph(const PointSet& points, double radius, double epsBase);

// All pairs at distance <= radius, via the same grid.
std::vector<std::pair<int, int>> udg_pairs(const PointSet& points, double radius);

}  // namespace lspan
