#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "lspan/graph.hpp"

namespace lspan {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Plain adjacency: (neighbor, weight) pairs.
using AdjList = std::vector<std::vector<std::pair<int, double>>>;

AdjList adjacency(const WeightedGraph& g);
AdjList adjacency(const WeightedGraph& g, const std::vector<EdgeId>& subset);

std::vector<double> dijkstra(const WeightedGraph& g, Vertex source);
std::vector<double> dijkstra(const AdjList& adj, int source);

// Reusable Dijkstra state for many truncated queries on a growing graph.
class DijkstraWorkspace {
 public:
  explicit DijkstraWorkspace(int n = 0);
  void resize(int n);
  // Distance from s to t, or kInf when it exceeds cutoff.
  double distance(const AdjList& adj, int s, int t, double cutoff = kInf);
  // Distances from s within cutoff; entries beyond cutoff are kInf.
  const std::vector<double>& run(const AdjList& adj, int s, double cutoff = kInf);
  // Distances from s, searching only until every listed target is settled.
  // Target entries are exact (kInf when unreachable); others may be upper bounds.
  const std::vector<double>& run_to(const AdjList& adj, int s, const std::vector<int>& targets);

 private:
  void reset();
  std::vector<double> dist_;
  std::vector<int> touched_;
  std::vector<char> isTarget_;
};

}  // namespace lspan
