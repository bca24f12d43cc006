#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lspan/graph.hpp"

namespace lspan {

// Text formats. Graph: header "n m" then m lines "u v w" (0-based ids).
// Points: header "n d" then n lines of d coordinates. Lines whose first
// non-blank character is '#' are ignored, as are blank lines.
WeightedGraph read_graph(std::istream& in);
WeightedGraph read_graph_file(const std::string& path);
PointSet read_points(std::istream& in);
PointSet read_points_file(const std::string& path);

void write_graph(std::ostream& out, const WeightedGraph& g);
// Writes the listed edges of g in graph format (header uses g.n()).
void write_edges(std::ostream& out, const WeightedGraph& g, const std::vector<EdgeId>& ids);
void write_points(std::ostream& out, const PointSet& p);

// Shortest decimal form that parses back to the same double.
std::string format_double(double x);

}  // namespace lspan
