#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lspan/hierarchy.hpp"

namespace lspan {

enum class Provenance { Step1, Step2, Step4, Step5Pref, Step5Intrnl };
enum class NodeClass : std::uint8_t { High, LowPlus, LowMinus };

const char* to_string(Provenance p);
const char* to_string(NodeClass c);

struct Subgraph {
  Provenance tag = Provenance::Step1;
  std::vector<int> nodes;
  std::vector<int> treeEdges;   // indices into ClusterGraph::tree
  std::vector<int> classEdges;  // indices into ClusterGraph::cls
  int center = -1;              // star or carve centre; chord index for Step 4
  double admFormed = 0.0;       // Adm right after formation
  double admStep3 = 0.0;        // Adm after Step 3 (Step 1 and Step 2 subgraphs)
  double adm = 0.0;             // final Adm
  double delta = 0.0;           // sum of node weights minus Adm
  double deltaPlus = 0.0;       // delta plus weight of tree edges in the subgraph
};

struct StepCounters {
  long long ops[5] = {0, 0, 0, 0, 0};
  int formed[5] = {0, 0, 0, 0, 0};
  int attached3 = 0;
  int attached5A = 0;
  int attached5B = 0;
  int blueToRed = 0;
  int intervalsOverlapping = 0;
};

struct ClusteringOutcome {
  std::vector<Subgraph> subgraphs;
  std::vector<int> subgraphOf;
  std::vector<NodeClass> nodeClass;
  std::vector<char> high;
  std::vector<char> highPlus;
  int highThreshold = 0;
  bool degenerate = false;
  // The whole tree was short and became a single subgraph.
  bool terminal = false;
  StepCounters counters;
};

// Mutable state threaded through the five steps. Nodes with group < 0 form the
// current forest.
struct ClusteringState {
  explicit ClusteringState(const ClusterGraph& graph);

  const ClusterGraph& cg;
  std::vector<int> group;
  std::vector<int> stage;  // step that grouped the node, 0 if none
  std::vector<Subgraph> subgraphs;
  std::vector<char> high;
  std::vector<char> highPlus;
  std::vector<int> forestDegree;
  int highThreshold = 0;
  bool degenerate = false;
  bool terminal = false;
  StepCounters counters;

  bool alive(int x) const { return group[x] < 0; }
  int new_subgraph(Provenance tag);
  void add_node(int s, int x, int step);
  // Connected components of the current forest, ordered by smallest node.
  std::vector<std::vector<int>> components() const;
  // Augmented diameter of a forest component (a tree of alive nodes).
  double forest_adm(const std::vector<int>& comp) const;
  double subgraph_adm(const Subgraph& s) const;
};

int high_degree_threshold(double eps);

void step1_high_nodes(ClusteringState& st);
void step2_branching(ClusteringState& st);
void step3_augment(ClusteringState& st);
void step4_blue_pairs(ClusteringState& st);
void step5_paths(ClusteringState& st);
ClusteringOutcome finalize_clustering(ClusteringState&& st);

ClusteringOutcome run_clustering(const ClusterGraph& cg);

std::vector<NodeClass> partition_nodes(const ClusteringOutcome& outcome);

// Potential change plus the corrective tree-edge term.
double corrected_potential(const ClusterGraph& cg, const Subgraph& x, double delta);

// One line per step: formed subgraph counts and operation counters.
std::string trace_lines(const ClusteringOutcome& outcome, int sigma, int level);

}  // namespace lspan
