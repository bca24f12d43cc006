#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lspan/clustering.hpp"
#include "lspan/graph.hpp"
#include "lspan/trace.hpp"

namespace lspan {

struct StretchReport {
  double maxStretch = 1.0;
  EdgeId witness = -1;  // input edge attaining the maximum, lowest id among ties
  long long checked = 0;
};

// Exact max over input edges of d_H(u, v) / w(u, v), H given as edge ids of g.
// Throws NotSpanning when some input edge has endpoints disconnected in H.
StretchReport measure_stretch(const WeightedGraph& g, const std::vector<EdgeId>& h);
// Same, restricted to the listed input edges.
StretchReport measure_stretch(const WeightedGraph& g, const std::vector<EdgeId>& h,
                              const std::vector<EdgeId>& edgesToCheck);

struct PairStretchReport {
  double maxStretch = 1.0;
  int a = -1;
  int b = -1;
  long long checked = 0;
};

// Max over point pairs of d_H(a, b) / |ab| with H a graph on the points; all
// pairs when pairs is null.
PairStretchReport measure_pair_stretch(const PointSet& points, const WeightedGraph& h,
                                       const std::vector<std::pair<int, int>>* pairs = nullptr);

// Path-greedy t-spanner: edges by (weight, id), kept iff the current distance
// exceeds t w(e). Returns sorted ids.
std::vector<EdgeId> greedy_spanner(const WeightedGraph& g, double t);

struct InvariantCheck {
  std::string name;
  long long evaluated = 0;
  long long failures = 0;
  double worstSlack = 0.0;    // most negative margin seen (0 when all hold)
  std::string counterexample;  // first failure
  bool passed() const { return failures == 0; }
};

struct VerificationReport {
  double maxStretch = 1.0;
  EdgeId witness = -1;
  double lightness = 0.0;
  double sparsity = 0.0;
  std::vector<InvariantCheck> invariants;
  bool passed() const;
  std::vector<std::string> failures() const;
};

struct ClusteringCheckOptions {
  // Assert the constant-sensitive bounds: L <= Adm(X) <= g L, Step-1 sizes,
  // the degenerate edge count and Delta+ >= 0.
  bool strict = true;
};

// Structural checks of one clustering: partition, Adm bounds, node classes,
// degenerate edge count, Step-1 sizes, corrected potentials.
std::vector<InvariantCheck> check_clustering(const ClusterGraph& cg, const ClusteringOutcome& outcome,
                                             const ClusteringCheckOptions& opt = {});

// Hierarchy checks over a trace: Phi_1 <= w(MST), the ledger identity, corrected
// potentials (on levels with eps <= 1/256), partition of the extended vertex
// set, and the PD invariant (exact, when the extended vertex count is at most pdCap).
VerificationReport check_hierarchy(const HierarchyTrace& trace, int pdCap = 500);

}  // namespace lspan
