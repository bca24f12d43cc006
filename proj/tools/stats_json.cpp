#include <sstream>

#include "cli.hpp"
#include "lspan/io.hpp"

namespace lspan::cli {

const char* const kSweepColumns =
    "mode,n,m,k,epsilon,stretch_measured,lightness,sparsity,time_ms_total,time_ms_ssa,levels";

nlohmann::json stats_json(const SpannerResult& res, bool withTimings) {
  const SpannerStats& s = res.stats;
  auto ms = [withTimings](double v) { return withTimings ? v : 0.0; };
  nlohmann::json j;
  j["mode"] = to_string(s.mode);
  j["n"] = s.n;
  j["m"] = s.m;
  j["k"] = s.k;
  j["epsilon_user"] = s.epsilonUser;
  j["epsilon_internal"] = s.epsilonInternal;
  j["epsilon_base"] = s.epsilonBase;
  j["psi"] = s.psi;
  j["t"] = s.t;
  j["rho"] = s.rho;
  j["stretch_target"] = s.stretchTarget;
  j["stretch_measured"] = s.stretchMeasured;
  j["stretch_exact"] = s.stretchExact;
  j["stretch_checked"] = s.stretchChecked;
  j["witness"] = {s.witnessU, s.witnessV};
  j["weight"] = s.weight;
  j["lightness"] = s.lightness;
  j["sparsity"] = s.sparsity;
  j["mst_weight"] = s.mstWeight;
  j["lambda_measured"] = s.lambdaMeasured;
  j["mu"] = s.mu;
  j["sigma_classes"] = s.sigmaClasses;
  j["light_edges"] = s.lightEdges;
  j["spanner_edges"] = res.edges.size();
  j["seed"] = s.seed;
  j["timings_ms"] = {{"mst", ms(s.timings.mst)},
                     {"leveling", ms(s.timings.leveling)},
                     {"hierarchy", ms(s.timings.hierarchy)},
                     {"ssa", ms(s.timings.ssa)},
                     {"verify", ms(s.timings.verify)},
                     {"total", ms(s.timings.total)}};
  nlohmann::json levels = nlohmann::json::array();
  for (const LevelStats& l : res.levels) {
    levels.push_back({{"sigma", l.sigma},
                      {"i", l.level},
                      {"L", l.L},
                      {"clusters", l.clusters},
                      {"class_edges", l.classEdges},
                      {"raw_class_edges", l.rawClassEdges},
                      {"removable", l.removable},
                      {"h_i_edges", l.hiEdges},
                      {"h_i_weight", l.hiWeight},
                      {"phi", l.phi},
                      {"delta", l.delta},
                      {"delta_plus", l.deltaPlus},
                      {"high_nodes", l.highNodes},
                      {"ssa_in", l.ssaEdgesIn},
                      {"ssa_kept", l.ssaEdgesKept},
                      {"degenerate", l.degenerate},
                      {"terminal", l.terminal}});
  }
  j["levels"] = std::move(levels);
  if (res.invariantsChecked) j["invariant_failures"] = res.invariantFailures;
  return j;
}

std::string sweep_row(const SpannerResult& res, bool withTimings) {
  const SpannerStats& s = res.stats;
  std::ostringstream os;
  os << to_string(s.mode) << ',' << s.n << ',' << s.m << ',' << s.k << ',' << format_double(s.epsilonUser) << ','
     << format_double(s.stretchMeasured) << ',' << format_double(s.lightness) << ',' << format_double(s.sparsity)
     << ',' << format_double(withTimings ? s.timings.total : 0.0) << ','
     << format_double(withTimings ? s.timings.ssa : 0.0) << ',' << res.levels.size();
  return os.str();
}

}  // namespace lspan::cli
