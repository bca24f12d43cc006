#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lspan/augmented.hpp"
#include "lspan/clustering.hpp"
#include "lspan/graph.hpp"
#include "lspan/hierarchy.hpp"

namespace lspan::test {

WeightedGraph path_graph(int n, double w = 1.0);
WeightedGraph cycle_graph(int n, double w = 1.0);

// All-pairs distances over the listed edges (all edges when subset is null).
std::vector<std::vector<double>> floyd_warshall(const WeightedGraph& g, const std::vector<EdgeId>* subset = nullptr);
std::vector<double> bellman_ford(const WeightedGraph& g, int source);

// Hop distances from s; -1 when unreachable.
std::vector<int> bfs_hops(int n, const std::vector<std::pair<int, int>>& edges, const std::vector<int>& keep, int s);

// Largest ratio of spanner hop distance over 1 across the input edges.
int max_hop_stretch(int n, const std::vector<std::pair<int, int>>& edges, const std::vector<int>& keep);

// Augmented diameter by enumerating every simple path.
double brute_augmented_diameter(const std::vector<double>& nodeWeight, const std::vector<LocalEdge>& edges);

// Minimum spanning tree weight by trying every (n - 1)-subset of edges.
double exhaustive_mst_weight(const WeightedGraph& g);

// Cluster graph assembled from explicit parts.
ClusterGraph make_cluster_graph(double L, double Lprev, double eps, std::vector<double> weight,
                                std::vector<TreeEdge> tree, std::vector<ClassEdge> cls, double t = 1.0);

// Path of n nodes with uniform node weight and tree edge weight.
ClusterGraph path_cluster_graph(int n, double L, double eps, double nodeWeight, double edgeWeight);

// Random cluster graph with L = 1000 and Lprev = eps L: node weights in
// [Lprev, 2 Lprev), a random tree (path-like unless branchProb is large) with
// light edges, and class edges of weight in [L, (1 + eps) L) between random
// pairs and around random hubs, minus the removable ones.
ClusterGraph random_cluster_graph(int n, double eps, std::uint64_t seed, int classEdges, double branchProb,
                                  int hubs = 0, int hubDegree = 0);

// Class edges of the cluster graph that the removability rule would keep.
std::vector<ClassEdge> non_removable(const ClusterGraph& cg, const std::vector<ClassEdge>& cand);

// Tree-path augmented weight between a and b by walking the tree; negative
// when some interior node has tree degree above 2.
double walk_path_weight(const ClusterGraph& cg, int a, int b);

// Enumerates every simple graph on n vertices up to isomorphism, as edge lists.
std::vector<std::vector<std::pair<int, int>>> nonisomorphic_graphs(int n);

}  // namespace lspan::test
