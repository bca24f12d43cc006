#pragma once

#include <functional>
#include <vector>

#include "lspan/graph.hpp"

namespace lspan {

// Class count: smallest mu >= 1 with (1 + psi)^mu >= 1 / eps.
int mu_psi(double eps, double psi);

// Upper threshold L_i = wbar (1 + psi)^sigma / eps^i of class (sigma, i).
// The lower threshold of (sigma, i) is class_upper(sigma - 1, i), so the
// intervals of one level tile [wbar / eps^i, wbar (1 + psi)^mu / eps^i).
double class_upper(double wbar, double eps, double psi, int sigma, int i);

struct ClassKey {
  int sigma = 0;  // 0 marks a light edge
  int level = 0;
};

// Light iff w <= wbar / eps. Heavy edges get the largest level i with
// w >= wbar / eps^i, then the smallest sigma < mu with w < L_i, else mu.
ClassKey classify_weight(double w, double wbar, double eps, double psi, int mu);

class LevelSchedule {
 public:
  struct SigmaClass {
    int sigma = 0;
    // levels[i] holds E^sigma_i; index 0 is unused.
    std::vector<std::vector<EdgeId>> levels;
    int max_level() const { return levels.empty() ? 0 : static_cast<int>(levels.size()) - 1; }
    bool empty() const { return max_level() == 0; }
    int nonempty_level_count() const;
    std::size_t edge_count() const;
  };

  double eps = 0.0;
  double psi = 0.0;
  double wbar = 0.0;
  int mu = 0;
  std::vector<EdgeId> light;
  std::vector<SigmaClass> classes;  // classes[sigma - 1]

  const SigmaClass& sigma_class(int sigma) const { return classes[sigma - 1]; }
  double L0(int sigma) const { return class_upper(wbar, eps, psi, sigma, 0); }
  double upper(int sigma, int i) const { return class_upper(wbar, eps, psi, sigma, i); }
  double lower(int sigma, int i) const { return class_upper(wbar, eps, psi, sigma - 1, i); }
  std::size_t heavy_count() const;
};

// Classifies the listed edges (all edges when subset is null).
LevelSchedule classify_edges(const WeightedGraph& g, double wbar, double eps, double psi,
                             const std::vector<EdgeId>* subset = nullptr);

using PerClassSpanner = std::function<std::vector<EdgeId>(const LevelSchedule::SigmaClass&)>;

// E_light, the MST and every per-class spanner, merged into sorted unique ids.
// Empty classes are not passed to the procedure.
std::vector<EdgeId> reduce_over_sigma(const LevelSchedule& schedule, const std::vector<EdgeId>& mst,
                                      const PerClassSpanner& perClass);

}  // namespace lspan
