#pragma once

#include <cstdint>
#include <vector>

#include "lspan/graph.hpp"
#include "lspan/mst.hpp"
#include "lspan/union_find.hpp"

namespace lspan {

// Diameter constant of the clustering: every new cluster has augmented
// diameter at most kG * L_i.
inline constexpr double kG = 31.0;

// Edge of the contracted tree MST~_i. src indexes SubdividedMst::subEdges.
struct TreeEdge {
  int a = 0;
  int b = 0;
  double w = 0.0;
  int src = -1;
};

// Class edge between two cluster nodes. src is the input edge id.
struct ClassEdge {
  int a = 0;
  int b = 0;
  double w = 0.0;
  EdgeId src = -1;
};

struct ClusterLevel {
  int level = 1;
  double L = 0.0;      // L_i
  double Lprev = 0.0;  // L_{i-1}
  std::vector<Vertex> rep;
  std::vector<double> phi;
  std::vector<TreeEdge> tree;

  int size() const { return static_cast<int>(rep.size()); }
  double total_potential() const;
};

// Translates union-find representatives of the current level to node indices.
class NodeIndex {
 public:
  explicit NodeIndex(int extendedCount = 0) : slot_(extendedCount, -1) {}
  void bind(const ClusterLevel& level);
  int node_of(UnionFind& uf, Vertex v) const { return slot_[uf.find(v)]; }

 private:
  std::vector<int> slot_;
  std::vector<Vertex> bound_;
};

// Union-find matching a subdivided MST, one singleton per extended vertex.
UnionFind make_union_find(const SubdividedMst& mst);

// Level-1 clusters: connected subtrees of the subdivided MST with diameter in
// [L0, 14 L0], or one cluster when the whole tree has diameter below 4 L0.
// Performs the unions in uf. The returned level has level = 1, L = L1 and
// Lprev = L0 filled in by the caller.
ClusterLevel build_level1(const SubdividedMst& mst, double L0, UnionFind& uf);

struct ClusterGraphParams {
  double eps = 0.0;
  double psi = 0.0;
  double t = 1.0;
};

// Node- and edge-weighted cluster graph G_i.
struct ClusterGraph {
  int n = 0;
  double L = 0.0;
  double Lprev = 0.0;
  double eps = 0.0;
  double psi = 0.0;
  double t = 1.0;
  std::vector<double> weight;
  std::vector<Vertex> rep;
  std::vector<TreeEdge> tree;
  std::vector<ClassEdge> cls;
  // (neighbor, edge index) pairs.
  std::vector<std::vector<std::pair<int, int>>> treeAdj;
  std::vector<std::vector<std::pair<int, int>>> clsAdj;

  int rawEdges = 0;
  int selfLoops = 0;
  int parallel = 0;
  int removable = 0;

  void build_adjacency();
  int tree_degree(int x) const { return static_cast<int>(treeAdj[x].size()); }
};

// Removability threshold factor t (1 + 6 g eps).
double removable_factor(double t, double eps);

// Builds G_i: drops self-loops, keeps the lightest of parallel class edges
// (lowest id on ties), then deletes removable edges. nodes must be bound to level.
ClusterGraph build_cluster_graph(const ClusterLevel& level, const WeightedGraph& g,
                                 const std::vector<EdgeId>& levelEdges, UnionFind& uf,
                                 const NodeIndex& nodes, const ClusterGraphParams& params);

// Augmented weight of the tree path between a and b when every interior node
// has tree degree at most 2; negative when no such path exists.
class ChainIndex {
 public:
  explicit ChainIndex(const ClusterGraph& cg);
  double path_weight(int a, int b) const;

 private:
  const ClusterGraph& cg_;
  std::vector<std::vector<int>> chains_;
  std::vector<std::vector<double>> pre_;
  std::vector<int> chainOf_;
  std::vector<int> posOf_;
  std::vector<std::pair<std::uint64_t, int>> terminalPairs_;
  std::vector<std::uint64_t> treePairs_;
};

struct ClusteringOutcome;

// Contracts every subgraph X into cluster C_X with potential Adm(X) and builds
// MST~_{i+1} from tree edges joining different subgraphs (Kruskal on
// (weight, source id)).
ClusterLevel contract_level(const ClusterLevel& level, const ClusterGraph& cg, const ClusteringOutcome& outcome,
                            UnionFind& uf, double nextL);

// Level-i cluster of every extended vertex, as node indices of level.
std::vector<int> cluster_assignment(const ClusterLevel& level, UnionFind& uf, int extendedCount);

}  // namespace lspan
