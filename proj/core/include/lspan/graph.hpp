#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lspan {

using Vertex = int;
using EdgeId = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  double w = 0.0;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DisconnectedGraph : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class DegeneratePoints : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedShape : public Error {
 public:
  using Error::Error;
};

class NotSpanning : public Error {
 public:
  using Error::Error;
};

// Undirected weighted multigraph with per-vertex incidence lists.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(int n);
  WeightedGraph(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }

  // Rejects self-loops, out-of-range endpoints and weights that are not finite and positive.
  EdgeId add_edge(Vertex u, Vertex v, double w);

  const Edge& edge(EdgeId id) const { return edges_[id]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<EdgeId>& incident(Vertex v) const { return adj_[v]; }
  Vertex other(EdgeId id, Vertex v) const {
    const Edge& e = edges_[id];
    return e.u == v ? e.v : e.u;
  }

  double total_weight() const;
  double total_weight(const std::vector<EdgeId>& subset) const;
  double min_weight() const;

  int component_count() const;
  bool connected() const { return component_count() <= 1; }

  // Same graph with every weight multiplied by factor.
  WeightedGraph scaled(double factor) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> adj_;
};

// For every unordered vertex pair keeps the lightest edge (lowest id on ties).
// Returned ids are sorted.
std::vector<EdgeId> dedup_parallel(const WeightedGraph& g);

// Subgraph on the same vertex set holding the listed edges; ids are renumbered
// in list order.
WeightedGraph edge_subgraph(const WeightedGraph& g, const std::vector<EdgeId>& ids);

class PointSet {
 public:
  PointSet() = default;
  PointSet(int d, std::vector<double> coords);

  int d() const { return d_; }
  int n() const { return d_ == 0 ? 0 : static_cast<int>(coords_.size()) / d_; }
  const double* point(int i) const { return coords_.data() + static_cast<std::size_t>(i) * d_; }
  const std::vector<double>& coords() const { return coords_; }

  double distance(int a, int b) const;
  // Throws DegeneratePoints when two points coincide.
  void require_distinct() const;

 private:
  int d_ = 0;
  std::vector<double> coords_;
};

// Complete graph on the points with Euclidean weights.
WeightedGraph complete_euclidean(const PointSet& p);

}  // namespace lspan
