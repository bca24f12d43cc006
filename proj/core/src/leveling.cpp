#include "lspan/leveling.hpp"

#include <algorithm>
#include <cmath>

namespace lspan {

int mu_psi(double eps, double psi) {
  int mu = std::max(1, static_cast<int>(std::ceil(std::log(1.0 / eps) / std::log1p(psi))) - 1);
  while (std::pow(1.0 + psi, mu) < 1.0 / eps) ++mu;
  while (mu > 1 && std::pow(1.0 + psi, mu - 1) >= 1.0 / eps) --mu;
  return mu;
}

double class_upper(double wbar, double eps, double psi, int sigma, int i) {
  return wbar * std::pow(1.0 + psi, sigma) / std::pow(eps, i);
}

ClassKey classify_weight(double w, double wbar, double eps, double psi, int mu) {
  if (w <= class_upper(wbar, eps, psi, 0, 1)) return {0, 0};
  int i = std::max(1, static_cast<int>(std::floor(std::log(w / wbar) / std::log(1.0 / eps))));
  while (w >= class_upper(wbar, eps, psi, 0, i + 1)) ++i;
  while (i > 1 && w < class_upper(wbar, eps, psi, 0, i)) --i;
  double base = class_upper(wbar, eps, psi, 0, i);
  int sigma = static_cast<int>(std::floor(std::log(w / base) / std::log1p(psi))) + 1;
  sigma = std::clamp(sigma, 1, mu);
  while (sigma > 1 && w < class_upper(wbar, eps, psi, sigma - 1, i)) --sigma;
  while (sigma < mu && w >= class_upper(wbar, eps, psi, sigma, i)) ++sigma;
  return {sigma, i};
}

int LevelSchedule::SigmaClass::nonempty_level_count() const {
  int c = 0;
  for (const auto& lv : levels)
    if (!lv.empty()) ++c;
  return c;
}

std::size_t LevelSchedule::SigmaClass::edge_count() const {
  std::size_t c = 0;
  for (const auto& lv : levels) c += lv.size();
  return c;
}

std::size_t LevelSchedule::heavy_count() const {
  std::size_t c = 0;
  for (const auto& sc : classes) c += sc.edge_count();
  return c;
}

LevelSchedule classify_edges(const WeightedGraph& g, double wbar, double eps, double psi,
                             const std::vector<EdgeId>* subset) {
  if (!(eps > 0.0 && eps < 1.0)) throw InvalidInput("epsilon must lie in (0,1)");
  if (!(psi > 0.0 && psi <= 1.0)) throw InvalidInput("psi must lie in (0,1]");
  if (!(wbar > 0.0)) throw InvalidInput("mean MST weight must be positive");
  LevelSchedule s;
  s.eps = eps;
  s.psi = psi;
  s.wbar = wbar;
  s.mu = mu_psi(eps, psi);
  s.classes.resize(s.mu);
  for (int sg = 1; sg <= s.mu; ++sg) s.classes[sg - 1].sigma = sg;
  auto place = [&](EdgeId id) {
    ClassKey k = classify_weight(g.edge(id).w, wbar, eps, psi, s.mu);
    if (k.sigma == 0) {
      s.light.push_back(id);
      return;
    }
    auto& levels = s.classes[k.sigma - 1].levels;
    if (static_cast<int>(levels.size()) <= k.level) levels.resize(k.level + 1);
    levels[k.level].push_back(id);
  };
  if (subset) {
    for (EdgeId id : *subset) place(id);
  } else {
    for (EdgeId id = 0; id < g.m(); ++id) place(id);
  }
  return s;
}

std::vector<EdgeId> reduce_over_sigma(const LevelSchedule& schedule, const std::vector<EdgeId>& mst,
                                      const PerClassSpanner& perClass) {
  std::vector<EdgeId> out = schedule.light;
  out.insert(out.end(), mst.begin(), mst.end());
  for (const auto& sc : schedule.classes) {
    if (sc.empty()) continue;
    std::vector<EdgeId> h = perClass(sc);
    out.insert(out.end(), h.begin(), h.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace lspan
