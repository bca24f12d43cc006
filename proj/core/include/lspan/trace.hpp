#pragma once

#include <string>
#include <vector>

#include "lspan/clustering.hpp"
#include "lspan/graph.hpp"
#include "lspan/hierarchy.hpp"
#include "lspan/mst.hpp"

namespace lspan {

// Snapshot of one (sigma, i) step of the hierarchy, taken after clustering.
struct LevelDump {
  int sigma = 0;
  int level = 0;
  double L = 0.0;
  double Lprev = 0.0;
  double eps = 0.0;
  std::vector<int> clusterOf;  // extended vertex -> level-i cluster
  std::vector<double> phi;     // level-i potentials
  // Edges of the class spanner built before this level: light edges, MST and
  // H_1 .. H_{i-1} of this sigma, as normalized-graph ids.
  std::vector<EdgeId> spannerBefore;
  ClusterGraph cg;
  ClusteringOutcome outcome;
  std::vector<EdgeId> hi;
  double nextPhiTotal = 0.0;  // sum of Adm(X), the level-(i+1) potential
};

// Everything the hierarchy checks need, owned by value.
struct HierarchyTrace {
  int n = 0;
  int extendedCount = 0;
  double mstWeight = 0.0;  // normalized weights
  std::vector<SubEdge> subEdges;
  std::vector<Edge> edges;  // normalized input edges
  std::vector<LevelDump> levels;
};

// Text dump of one level: a header, one line "id phi size" per cluster and one
// line "type u v w" per cluster-graph edge ("tree" or "class").
std::string level_dump_text(const LevelDump& dump);

}  // namespace lspan
