#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lspan/augmented.hpp"
#include "lspan/graph.hpp"
#include "lspan/hierarchy.hpp"

namespace lspan {

// Cluster-graph view handed to a sparse spanner subroutine: the high nodes of a
// level and the class edges between them. Edge weights lie in [L, (1 + eps) L).
struct SsaInput {
  int nodeCount = 0;
  std::vector<LocalEdge> edges;  // endpoints are local node indices
  std::vector<EdgeId> source;    // input edge behind each edge
  std::vector<Vertex> rep;       // representative vertex of each node
  // Representative positions, node-major with dimension d (geometric backend only).
  std::vector<double> positions;
  double L = 0.0;
  double eps = 0.0;
  double beta = 2.0 * kG;
};

struct SsaOutput {
  std::vector<int> pruned;       // kept indices into SsaInput::edges, increasing
  double declaredSparsity = 0.0;  // chi with |pruned| <= chi * nodeCount
  double stretchConstant = 0.0;   // s_SSA(beta)
};

double geom_stretch_constant(double beta);
double general_stretch_constant(double beta);

// Per node and per cone of angular width eps around the node's representative,
// keeps the edge to the neighbour whose representative is nearest (ties by
// node id). An edge survives if either endpoint keeps it.
SsaOutput ssa_geom(const SsaInput& in, int d);

// (2k-1)-spanner of the unweighted graph on the nodes.
SsaOutput ssa_general(const SsaInput& in, int k, std::uint64_t seed);

// Returns every edge.
SsaOutput ssa_minor(const SsaInput& in);

// Edge bound c_k * n^(1 + 1/k) asserted for unweighted_spanner output.
double unweighted_spanner_bound(int n, int k);

// Hop-stretch (2k-1) spanner of a simple unweighted graph; returns kept edge
// indices in increasing order. Small graphs use the greedy girth construction;
// larger ones use randomized cluster growing, retried with fresh seeds and
// finally replaced by greedy if the edge bound is missed.
std::vector<int> unweighted_spanner(int n, const std::vector<std::pair<int, int>>& edges, int k,
                                    std::uint64_t seed);
std::vector<int> greedy_unweighted_spanner(int n, const std::vector<std::pair<int, int>>& edges, int k);
std::vector<int> cluster_growing_spanner(int n, const std::vector<std::pair<int, int>>& edges, int k,
                                         std::uint64_t seed);

}  // namespace lspan
