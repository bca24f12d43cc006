#pragma once

#include <vector>

#include "lspan/graph.hpp"

namespace lspan {

// Kruskal with ties broken by (weight, min endpoint, max endpoint, id).
// Throws DisconnectedGraph unless the graph is connected.
std::vector<EdgeId> build_mst(const WeightedGraph& g);
// Same, restricted to the candidate edges.
std::vector<EdgeId> build_mst(const WeightedGraph& g, const std::vector<EdgeId>& candidates);

// One MST edge after subdivision: virtual vertices ordered from u to v and
// pieces of equal weight.
struct Segment {
  EdgeId edge = -1;
  Vertex u = 0;
  Vertex v = 0;
  double weight = 0.0;
  double piece = 0.0;
  std::vector<Vertex> virtuals;
};

struct SubEdge {
  Vertex a = 0;
  Vertex b = 0;
  double w = 0.0;
  int segment = 0;
};

// MST with every edge heavier than wbar split into ceil(w / wbar) equal pieces.
// Vertex ids [0, n) are original; [n, extendedCount) are virtual.
struct SubdividedMst {
  int n = 0;
  int extendedCount = 0;
  double wbar = 0.0;
  std::vector<EdgeId> mstEdges;
  std::vector<Segment> segments;
  std::vector<SubEdge> subEdges;
  // For each virtual vertex x, the segment it lies on (index x - n).
  std::vector<int> virtualSegment;

  int virtual_count() const { return extendedCount - n; }
  bool is_virtual(Vertex x) const { return x >= n; }
  const Segment& segment_of(Vertex x) const { return segments[virtualSegment[x - n]]; }
  double total_weight() const;
};

SubdividedMst subdivide_mst(const WeightedGraph& g, const std::vector<EdgeId>& mst, double wbar);

}  // namespace lspan
