#pragma once

#include <vector>

namespace lspan {

struct LocalEdge {
  int a = 0;
  int b = 0;
  double w = 0.0;
};

// Maximum over node pairs of the lightest path weight, where a path weighs the
// sum of its edges and of all its nodes (both ends included). Accepts a
// connected tree or a connected graph with exactly one cycle; anything else
// throws UnsupportedShape.
double augmented_diameter(const std::vector<double>& nodeWeight, const std::vector<LocalEdge>& edges);

// Minimum over cycle edges of the augmented diameter of the tree left after
// deleting that edge. Never below augmented_diameter; equal on trees.
double augmented_diameter_by_deletion(const std::vector<double>& nodeWeight, const std::vector<LocalEdge>& edges);

}  // namespace lspan
