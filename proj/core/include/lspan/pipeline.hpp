#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lspan/clustering.hpp"
#include "lspan/graph.hpp"
#include "lspan/ssa.hpp"
#include "lspan/trace.hpp"

namespace lspan {

enum class Mode { General, Euclidean, Udg, MinorFree };

const char* to_string(Mode m);

struct PipelineConfig {
  Mode mode = Mode::General;
  int k = 2;
  int dimension = 2;        // geometric modes; taken from the point set
  double radius = 1.0;      // udg mode
  double epsilon = 0.25;    // user epsilon
  double epsilonBase = 0.0; // base cone spanner; 0 selects epsilon
  double psi = 0.0;         // class granularity; 0 selects the internal epsilon
  bool strict = false;
  std::uint64_t seed = 1;
  bool trace = false;       // keep per-level dumps and trace text
  bool verify = true;
  int exactVerifyCap = 500;
  int sampleSize = 1000;
};

// s_SSA(2g) of the mode's backend.
double ssa_stretch_constant(Mode mode);
// rho = max{s_SSA(2g) + 4g, 10g}.
double stretch_rho(Mode mode);
// Epsilon used inside the construction: the user value, or in strict mode
// min(epsilon / rho, 1/256).
double internal_epsilon(const PipelineConfig& cfg);
// t = 2k - 1 in general mode, 1 + internal epsilon otherwise.
double stretch_parameter(const PipelineConfig& cfg);
// Certified stretch bound: t (1 + rho eps_int), times (1 + eps_base) in geometric modes.
double stretch_target(const PipelineConfig& cfg);

struct PhaseTimings {
  double mst = 0.0;
  double leveling = 0.0;
  double hierarchy = 0.0;
  double ssa = 0.0;
  double verify = 0.0;
  double total = 0.0;
};

struct LevelStats {
  int sigma = 0;
  int level = 0;
  double L = 0.0;
  int clusters = 0;
  int classEdges = 0;   // |E_i| after pruning
  int rawClassEdges = 0;
  int removable = 0;
  int hiEdges = 0;
  double hiWeight = 0.0;  // normalized weights
  double phi = 0.0;       // level-i total potential
  double delta = 0.0;     // sum of Delta(X)
  double deltaPlus = 0.0; // sum of corrected changes
  bool degenerate = false;
  bool terminal = false;
  int highNodes = 0;
  int ssaEdgesIn = 0;
  int ssaEdgesKept = 0;
  double lambda = -1.0;  // w(H_i) / sum Delta+ on nondegenerate levels with positive Delta+
};

struct SpannerStats {
  Mode mode = Mode::General;
  int n = 0;
  int m = 0;
  int k = 0;
  double epsilonUser = 0.0;
  double epsilonInternal = 0.0;
  double epsilonBase = 0.0;
  double psi = 0.0;
  double t = 1.0;
  double rho = 0.0;
  double stretchTarget = 0.0;
  double stretchMeasured = 0.0;
  bool stretchExact = true;
  long long stretchChecked = 0;
  int witnessU = -1;
  int witnessV = -1;
  double weight = 0.0;
  double mstWeight = 0.0;
  double lightness = 0.0;
  double sparsity = 0.0;
  double lambdaMeasured = 0.0;
  int mu = 0;
  int sigmaClasses = 0;
  int lightEdges = 0;
  std::uint64_t seed = 0;
  PhaseTimings timings;
};

struct SpannerResult {
  // Graph the spanner edges refer to: the input graph, or the base cone
  // spanner in geometric modes.
  WeightedGraph graph;
  std::vector<EdgeId> edges;
  SpannerStats stats;
  std::vector<LevelStats> levels;
  std::optional<HierarchyTrace> trace;
  std::string traceText;
  // Hierarchy and clustering checks, filled in strict or trace mode.
  std::vector<std::string> invariantFailures;
  bool invariantsChecked = false;

  bool stretch_ok() const { return stats.stretchMeasured <= stats.stretchTarget * (1.0 + 1e-9); }
};

using SsaBackend = std::function<SsaOutput(const SsaInput&)>;

struct TransformParams {
  double eps = 0.25;
  double psi = 0.25;
  double t = 1.0;
  SsaBackend backend;
  // Point positions of input vertices; when set, SsaInput::positions is filled.
  const PointSet* points = nullptr;
  bool trace = false;
};

struct TransformOutput {
  std::vector<EdgeId> edges;  // sorted ids of the input graph
  std::vector<EdgeId> mst;
  std::vector<LevelStats> levels;
  PhaseTimings timings;
  int mu = 0;
  int sigmaClasses = 0;
  int lightEdges = 0;
  std::optional<HierarchyTrace> trace;
  std::string traceText;
};

// H_i: source edges of class edges inside subgraphs, of class edges touching a
// low node, and of the backend's choice among high-high class edges.
// position, when set, writes the coordinates of an extended vertex; it fills
// SsaInput::positions for the geometric backend.
using PositionFn = std::function<void(Vertex, double*)>;
std::vector<EdgeId> build_Hi(const ClusterGraph& cg, const ClusteringOutcome& outcome, const SsaBackend& backend,
                             const PositionFn& position = {}, int dimension = 0, LevelStats* stats = nullptr);

// The light-spanner transformation on a connected weighted graph.
TransformOutput light_transform(const WeightedGraph& g, const TransformParams& params);

SpannerResult light_spanner_general(const WeightedGraph& g, const PipelineConfig& cfg);
SpannerResult light_spanner_minor_free(const WeightedGraph& g, const PipelineConfig& cfg);
SpannerResult light_spanner_geometric(const PointSet& points, const PipelineConfig& cfg);

}  // namespace lspan
