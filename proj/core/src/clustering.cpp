#include "lspan/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lspan/augmented.hpp"

namespace lspan {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Step1: return "step1";
    case Provenance::Step2: return "step2";
    case Provenance::Step4: return "step4";
    case Provenance::Step5Pref: return "step5-pref";
    case Provenance::Step5Intrnl: return "step5-intrnl";
  }
  return "?";
}

const char* to_string(NodeClass c) {
  switch (c) {
    case NodeClass::High: return "high";
    case NodeClass::LowPlus: return "low+";
    case NodeClass::LowMinus: return "low-";
  }
  return "?";
}

int high_degree_threshold(double eps) {
  return static_cast<int>(std::ceil(2.0 * kG / eps * (1.0 - 1e-12)));
}

ClusteringState::ClusteringState(const ClusterGraph& graph)
    : cg(graph),
      group(graph.n, -1),
      stage(graph.n, 0),
      high(graph.n, 0),
      highPlus(graph.n, 0),
      forestDegree(graph.n, 0) {
  for (int x = 0; x < cg.n; ++x) forestDegree[x] = cg.tree_degree(x);
  highThreshold = high_degree_threshold(cg.eps);
}

int ClusteringState::new_subgraph(Provenance tag) {
  Subgraph s;
  s.tag = tag;
  subgraphs.push_back(std::move(s));
  return static_cast<int>(subgraphs.size()) - 1;
}

void ClusteringState::add_node(int s, int x, int step) {
  group[x] = s;
  stage[x] = step;
  subgraphs[s].nodes.push_back(x);
  for (auto [y, k] : cg.treeAdj[x])
    if (alive(y)) --forestDegree[y];
}

std::vector<std::vector<int>> ClusteringState::components() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(cg.n, 0);
  std::vector<int> stack;
  for (int s = 0; s < cg.n; ++s) {
    if (!alive(s) || seen[s]) continue;
    std::vector<int> comp;
    seen[s] = 1;
    stack.assign(1, s);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (auto [y, k] : cg.treeAdj[x])
        if (alive(y) && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

namespace {

// Farthest alive node from s by augmented distance within its forest tree.
std::pair<int, double> farthest_alive(const ClusteringState& st, int s) {
  const ClusterGraph& cg = st.cg;
  int best = s;
  double bestD = cg.weight[s];
  std::vector<std::tuple<int, int, double>> stack{{s, -1, cg.weight[s]}};
  while (!stack.empty()) {
    auto [x, from, d] = stack.back();
    stack.pop_back();
    if (d > bestD) {
      bestD = d;
      best = x;
    }
    for (auto [y, k] : cg.treeAdj[x])
      if (y != from && st.alive(y)) stack.push_back({y, x, d + cg.tree[k].w + cg.weight[y]});
  }
  return {best, bestD};
}

// Tree edges joining two alive nodes of comp.
std::vector<int> internal_edges(const ClusteringState& st, const std::vector<int>& comp) {
  std::vector<int> out;
  for (int x : comp)
    for (auto [y, k] : st.cg.treeAdj[x])
      if (x < y && st.alive(y)) out.push_back(k);
  return out;
}

// Nodes of a path-shaped forest component in order, starting at the endpoint
// with the smaller id.
std::vector<int> order_path(const ClusteringState& st, const std::vector<int>& comp) {
  int start = -1;
  for (int x : comp) {
    if (st.forestDegree[x] > 2) throw std::logic_error("forest component is not a path");
    if (st.forestDegree[x] <= 1 && (start < 0 || x < start)) start = x;
  }
  std::vector<int> path;
  int prev = -1;
  for (int x = start; x >= 0;) {
    path.push_back(x);
    int nxt = -1;
    for (auto [y, k] : st.cg.treeAdj[x])
      if (y != prev && st.alive(y)) nxt = y;
    prev = x;
    x = nxt;
  }
  return path;
}

// Tree edge index between consecutive path nodes.
std::vector<int> path_edges(const ClusterGraph& cg, const std::vector<int>& path) {
  std::vector<int> out(path.size() > 0 ? path.size() - 1 : 0, -1);
  for (std::size_t j = 0; j + 1 < path.size(); ++j)
    for (auto [y, k] : cg.treeAdj[path[j]])
      if (y == path[j + 1]) out[j] = k;
  return out;
}

std::vector<double> path_prefix(const ClusterGraph& cg, const std::vector<int>& path, const std::vector<int>& edges) {
  std::vector<double> pre(path.size());
  for (std::size_t j = 0; j < path.size(); ++j) {
    pre[j] = cg.weight[path[j]];
    if (j > 0) pre[j] += pre[j - 1] + cg.tree[edges[j - 1]].w;
  }
  return pre;
}

// Lowest subgraph id among groups of tree neighbours of the given nodes, using
// the snapshot anchor; returns (group, tree edge) or (-1, -1).
std::pair<int, int> lowest_anchor(const ClusterGraph& cg, const std::vector<int>& nodes,
                                  const std::vector<int>& anchor) {
  int bestG = -1, bestK = -1;
  for (int x : nodes)
    for (auto [y, k] : cg.treeAdj[x]) {
      int gy = anchor[y];
      if (gy < 0) continue;
      if (bestG < 0 || gy < bestG || (gy == bestG && k < bestK)) {
        bestG = gy;
        bestK = k;
      }
    }
  return {bestG, bestK};
}

}  // namespace

double ClusteringState::forest_adm(const std::vector<int>& comp) const {
  int a = farthest_alive(*this, comp.front()).first;
  return farthest_alive(*this, a).second;
}

double ClusteringState::subgraph_adm(const Subgraph& s) const {
  std::vector<double> wt(s.nodes.size());
  std::vector<LocalEdge> edges;
  edges.reserve(s.treeEdges.size() + s.classEdges.size());
  // Local ids via a sorted copy; subgraphs are small relative to the level.
  std::vector<std::pair<int, int>> local(s.nodes.size());
  for (std::size_t j = 0; j < s.nodes.size(); ++j) {
    local[j] = {s.nodes[j], static_cast<int>(j)};
    wt[j] = cg.weight[s.nodes[j]];
  }
  std::sort(local.begin(), local.end());
  auto id = [&](int x) {
    auto it = std::lower_bound(local.begin(), local.end(), std::make_pair(x, -1));
    if (it == local.end() || it->first != x) throw std::logic_error("subgraph edge leaves its node set");
    return it->second;
  };
  for (int k : s.treeEdges) edges.push_back({id(cg.tree[k].a), id(cg.tree[k].b), cg.tree[k].w});
  for (int k : s.classEdges) edges.push_back({id(cg.cls[k].a), id(cg.cls[k].b), cg.cls[k].w});
  return augmented_diameter(wt, edges);
}

void step1_high_nodes(ClusteringState& st) {
  const ClusterGraph& cg = st.cg;
  const int n = cg.n;
  auto& ops = st.counters.ops[0];
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(cg.clsAdj[x].size()) < st.highThreshold) continue;
    st.high[x] = 1;
    st.highPlus[x] = 1;
    for (auto [y, k] : cg.clsAdj[x]) st.highPlus[y] = 1;
    ops += static_cast<long long>(cg.clsAdj[x].size());
  }
  std::vector<int> sub(n, 0);
  std::vector<char> covered(n, 0);
  // (1) stars around a greedy maximal set of high nodes with disjoint closed neighbourhoods.
  for (int x = 0; x < n; ++x) {
    if (!st.high[x] || covered[x]) continue;
    bool free = true;
    for (auto [y, k] : cg.clsAdj[x]) {
      ++ops;
      if (covered[y]) {
        free = false;
        break;
      }
    }
    if (!free) continue;
    int s = st.new_subgraph(Provenance::Step1);
    st.subgraphs[s].center = x;
    st.add_node(s, x, 1);
    sub[x] = 1;
    covered[x] = 1;
    for (auto [y, k] : cg.clsAdj[x]) {
      st.add_node(s, y, 1);
      sub[y] = 1;
      covered[y] = 1;
      st.subgraphs[s].classEdges.push_back(k);
    }
  }
  // (2) remaining high nodes join a neighbour grouped in (1); (3) remaining
  // neighbours of high nodes join a neighbour grouped in (1) or (2).
  for (int pass = 2; pass <= 3; ++pass) {
    for (int x = 0; x < n; ++x) {
      if (!st.alive(x)) continue;
      if (pass == 2 ? !st.high[x] : !st.highPlus[x]) continue;
      int bestG = -1, bestK = -1;
      for (auto [y, k] : cg.clsAdj[x]) {
        ++ops;
        if (sub[y] == 0 || sub[y] >= pass) continue;
        int gy = st.group[y];
        if (bestG < 0 || gy < bestG || (gy == bestG && k < bestK)) {
          bestG = gy;
          bestK = k;
        }
      }
      if (bestG < 0) throw std::logic_error("step 1: node of V^high+ without a grouped neighbour");
      st.add_node(bestG, x, 1);
      sub[x] = pass;
      st.subgraphs[bestG].classEdges.push_back(bestK);
    }
  }
  for (auto& s : st.subgraphs)
    if (s.tag == Provenance::Step1) {
      s.admFormed = st.subgraph_adm(s);
      ++st.counters.formed[0];
    }
}

void step2_branching(ClusteringState& st) {
  const ClusterGraph& cg = st.cg;
  const int n = cg.n;
  const double L = cg.L;
  auto& ops = st.counters.ops[1];
  std::vector<int> branching;
  for (int x = 0; x < n; ++x)
    if (st.alive(x) && st.forestDegree[x] >= 3) branching.push_back(x);
  std::vector<char> shortDone(n, 0), inX(n, 0);
  std::vector<double> dist(n, 0.0);
  for (int phi : branching) {
    if (!st.alive(phi) || shortDone[phi] || st.forestDegree[phi] < 3) continue;
    // Truncated traversal: nodes at augmented distance >= L from phi are kept as leaves.
    std::vector<int> nodes{phi};
    std::vector<int> edges;
    inX[phi] = 1;
    dist[phi] = cg.weight[phi];
    bool reached = dist[phi] >= L;
    std::vector<int> stack{phi};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (x != phi && dist[x] >= L) continue;
      for (auto [y, k] : cg.treeAdj[x]) {
        ++ops;
        if (!st.alive(y) || inX[y]) continue;
        inX[y] = 1;
        dist[y] = dist[x] + cg.tree[k].w + cg.weight[y];
        if (dist[y] >= L) reached = true;
        nodes.push_back(y);
        edges.push_back(k);
        stack.push_back(y);
      }
    }
    for (int x : nodes) inX[x] = 0;
    if (!reached) {
      // The whole tree lies within distance L of phi; it stays for later steps.
      for (int x : nodes) shortDone[x] = 1;
      continue;
    }
    int s = st.new_subgraph(Provenance::Step2);
    st.subgraphs[s].center = phi;
    for (int x : nodes) st.add_node(s, x, 2);
    st.subgraphs[s].treeEdges = std::move(edges);
    st.subgraphs[s].admFormed = st.subgraph_adm(st.subgraphs[s]);
    ++st.counters.formed[1];
  }
}

void step3_augment(ClusteringState& st) {
  const ClusterGraph& cg = st.cg;
  const double L = cg.L;
  auto& ops = st.counters.ops[2];
  std::vector<int> attach;
  for (const auto& comp : st.components()) {
    ops += static_cast<long long>(comp.size());
    if (st.forest_adm(comp) < 6.0 * L) continue;
    for (int x : comp)
      if (cg.tree_degree(x) >= 3) attach.push_back(x);
  }
  std::sort(attach.begin(), attach.end());
  std::vector<int> anchor = st.group;
  for (int phi : attach) {
    auto [g, k] = lowest_anchor(cg, {phi}, anchor);
    ops += cg.tree_degree(phi);
    if (g < 0) continue;
    st.add_node(g, phi, 3);
    st.subgraphs[g].treeEdges.push_back(k);
    ++st.counters.attached3;
  }
  for (auto& s : st.subgraphs) s.admStep3 = st.subgraph_adm(s);
}

void step4_blue_pairs(ClusteringState& st) {
  const ClusterGraph& cg = st.cg;
  const int n = cg.n;
  const double L = cg.L;
  auto& ops = st.counters.ops[3];

  struct Path {
    std::vector<int> nodes;
    std::vector<int> edges;
    std::vector<double> pre;
    std::set<int> cuts;
  };
  std::vector<Path> paths;
  std::vector<int> pathOf(n, -1), posOf(n, -1);
  std::vector<char> blue(n, 0);
  for (const auto& comp : st.components()) {
    ops += static_cast<long long>(comp.size());
    if (st.forest_adm(comp) < 6.0 * L) continue;
    Path p;
    p.nodes = order_path(st, comp);
    p.edges = path_edges(cg, p.nodes);
    p.pre = path_prefix(cg, p.nodes, p.edges);
    int id = static_cast<int>(paths.size());
    int len = static_cast<int>(p.nodes.size());
    for (int j = 0; j < len; ++j) {
      int x = p.nodes[j];
      pathOf[x] = id;
      posOf[x] = j;
      double fromStart = p.pre[j];
      double fromEnd = p.pre[len - 1] - p.pre[j] + cg.weight[x];
      blue[x] = fromStart > L && fromEnd > L;
    }
    paths.push_back(std::move(p));
  }
  if (paths.empty()) return;

  auto segment = [&](int p, int pos) {
    const auto& cuts = paths[p].cuts;
    auto it = cuts.upper_bound(pos);
    int hi = it == cuts.end() ? static_cast<int>(paths[p].nodes.size()) - 1 : *it - 1;
    int lo = it == cuts.begin() ? 0 : *std::prev(it) + 1;
    return std::make_pair(lo, hi);
  };
  auto redden = [&](int x) {
    if (blue[x]) {
      blue[x] = 0;
      ++st.counters.blueToRed;
    }
  };
  auto recolor = [&](int p, int a, int b) {
    const Path& P = paths[p];
    double adm = P.pre[b] - P.pre[a] + cg.weight[P.nodes[a]];
    if (adm < 6.0 * L) {
      for (int j = a; j <= b; ++j) redden(P.nodes[j]);
      ops += b - a + 1;
      return;
    }
    for (int j = a; j <= b && P.pre[j] - P.pre[a] + cg.weight[P.nodes[a]] <= L; ++j, ++ops) redden(P.nodes[j]);
    for (int j = b; j >= a && P.pre[b] - P.pre[j] + cg.weight[P.nodes[j]] <= L; --j, ++ops) redden(P.nodes[j]);
  };
  auto interval = [&](int x) {
    int p = pathOf[x], pos = posOf[x];
    auto [lo, hi] = segment(p, pos);
    const Path& P = paths[p];
    int q = pos, r = pos;
    while (q - 1 >= lo && P.pre[pos] - P.pre[q - 1] + cg.weight[P.nodes[q - 1]] <= L) --q;
    while (r + 1 <= hi && P.pre[r + 1] - P.pre[pos] + cg.weight[x] <= L) ++r;
    ops += r - q + 1;
    return std::make_pair(q, r);
  };

  for (int k = 0; k < static_cast<int>(cg.cls.size()); ++k) {
    int a = cg.cls[k].a, b = cg.cls[k].b;
    ++ops;
    if (!blue[a] || !blue[b]) continue;
    int pa = pathOf[a], pb = pathOf[b];
    auto ia = interval(a);
    auto ib = interval(b);
    std::vector<std::pair<int, std::pair<int, int>>> ranges;
    if (pa == pb && std::max(ia.first, ib.first) <= std::min(ia.second, ib.second) + 1) {
      if (std::max(ia.first, ib.first) <= std::min(ia.second, ib.second)) ++st.counters.intervalsOverlapping;
      ranges.push_back({pa, {std::min(ia.first, ib.first), std::max(ia.second, ib.second)}});
    } else {
      ranges.push_back({pa, ia});
      ranges.push_back({pb, ib});
    }
    int s = st.new_subgraph(Provenance::Step4);
    Subgraph& X = st.subgraphs[s];
    X.center = k;
    X.classEdges.push_back(k);
    for (auto& [p, rg] : ranges) {
      Path& P = paths[p];
      for (int j = rg.first; j <= rg.second; ++j) {
        st.add_node(s, P.nodes[j], 4);
        blue[P.nodes[j]] = 0;
        P.cuts.insert(j);
        if (j < rg.second) X.treeEdges.push_back(P.edges[j]);
      }
    }
    for (auto& [p, rg] : ranges) {
      int len = static_cast<int>(paths[p].nodes.size());
      for (int nb : {rg.first - 1, rg.second + 1}) {
        if (nb < 0 || nb >= len || !st.alive(paths[p].nodes[nb])) continue;
        auto [lo, hi] = segment(p, nb);
        recolor(p, lo, hi);
      }
    }
    st.subgraphs[s].admFormed = st.subgraph_adm(st.subgraphs[s]);
    ++st.counters.formed[2];
  }
}

void step5_paths(ClusteringState& st) {
  const ClusterGraph& cg = st.cg;
  const double L = cg.L;
  auto& ops = st.counters.ops[4];
  st.degenerate = st.subgraphs.empty();
  std::vector<int> anchor = st.group;
  for (const auto& comp : st.components()) {
    ops += static_cast<long long>(comp.size());
    double adm = st.forest_adm(comp);
    std::vector<int> inner = internal_edges(st, comp);
    if (adm <= 6.0 * L) {
      auto [g, k] = st.degenerate ? std::make_pair(-1, -1) : lowest_anchor(cg, comp, anchor);
      if (g >= 0) {
        for (int x : comp) st.add_node(g, x, 5);
        auto& te = st.subgraphs[g].treeEdges;
        te.insert(te.end(), inner.begin(), inner.end());
        te.push_back(k);
        ++st.counters.attached5A;
      } else {
        // Only reachable when the whole tree is one short component.
        int s = st.new_subgraph(Provenance::Step5Pref);
        for (int x : comp) st.add_node(s, x, 5);
        st.subgraphs[s].treeEdges = inner;
        st.terminal = true;
        ++st.counters.formed[3];
      }
      continue;
    }
    std::vector<int> path = order_path(st, comp);
    std::vector<int> edges = path_edges(cg, path);
    std::vector<double> pre = path_prefix(cg, path, edges);
    int len = static_cast<int>(path.size());
    std::vector<std::pair<int, int>> pieces;
    int cur = 0;
    for (int j = 0; j < len; ++j, ++ops)
      if (pre[j] - pre[cur] + cg.weight[path[cur]] >= L) {
        pieces.push_back({cur, j});
        cur = j + 1;
      }
    if (cur < len) {
      if (pieces.empty()) pieces.push_back({cur, len - 1});
      else pieces.back().second = len - 1;
    }
    for (auto [a, b] : pieces) {
      std::vector<int> nodes(path.begin() + a, path.begin() + b + 1);
      std::vector<int> pe(edges.begin() + a, edges.begin() + b);
      auto [g, k] = st.degenerate ? std::make_pair(-1, -1) : lowest_anchor(cg, nodes, anchor);
      if (g >= 0) {
        for (int x : nodes) st.add_node(g, x, 5);
        auto& te = st.subgraphs[g].treeEdges;
        te.insert(te.end(), pe.begin(), pe.end());
        te.push_back(k);
        ++st.counters.attached5B;
        continue;
      }
      bool endpoint = a == 0 || b == len - 1;
      int s = st.new_subgraph(endpoint ? Provenance::Step5Pref : Provenance::Step5Intrnl);
      for (int x : nodes) st.add_node(s, x, 5);
      st.subgraphs[s].treeEdges = std::move(pe);
      ++st.counters.formed[endpoint ? 3 : 4];
    }
  }
}

ClusteringOutcome finalize_clustering(ClusteringState&& st) {
  const ClusterGraph& cg = st.cg;
  for (int x = 0; x < cg.n; ++x)
    if (st.group[x] < 0) throw std::logic_error("clustering left a node ungrouped");
  ClusteringOutcome out;
  out.subgraphs = std::move(st.subgraphs);
  for (auto& s : out.subgraphs) {
    s.adm = st.subgraph_adm(s);
    if (s.tag == Provenance::Step5Pref || s.tag == Provenance::Step5Intrnl) s.admFormed = s.adm;
    double sum = 0.0;
    for (int x : s.nodes) sum += cg.weight[x];
    s.delta = sum - s.adm;
    s.deltaPlus = corrected_potential(cg, s, s.delta);
  }
  out.subgraphOf = std::move(st.group);
  out.high = std::move(st.high);
  out.highPlus = std::move(st.highPlus);
  out.highThreshold = st.highThreshold;
  out.degenerate = st.degenerate;
  out.terminal = st.terminal;
  out.counters = st.counters;
  out.nodeClass = partition_nodes(out);
  return out;
}

ClusteringOutcome run_clustering(const ClusterGraph& cg) {
  ClusteringState st(cg);
  step1_high_nodes(st);
  step2_branching(st);
  step3_augment(st);
  step4_blue_pairs(st);
  step5_paths(st);
  return finalize_clustering(std::move(st));
}

std::vector<NodeClass> partition_nodes(const ClusteringOutcome& outcome) {
  const int n = static_cast<int>(outcome.subgraphOf.size());
  std::vector<NodeClass> cls(n, NodeClass::LowPlus);
  if (outcome.degenerate) {
    std::fill(cls.begin(), cls.end(), NodeClass::LowMinus);
    return cls;
  }
  for (const auto& s : outcome.subgraphs)
    if (s.tag == Provenance::Step5Intrnl)
      for (int x : s.nodes) cls[x] = NodeClass::LowMinus;
  for (int x = 0; x < n; ++x)
    if (outcome.high[x]) cls[x] = NodeClass::High;
  return cls;
}

double corrected_potential(const ClusterGraph& cg, const Subgraph& x, double delta) {
  double s = delta;
  for (int k : x.treeEdges) s += cg.tree[k].w;
  return s;
}

std::string trace_lines(const ClusteringOutcome& o, int sigma, int level) {
  std::ostringstream out;
  const auto& c = o.counters;
  out << "level sigma=" << sigma << " i=" << level << " subgraphs=" << o.subgraphs.size()
      << " degenerate=" << (o.degenerate ? 1 : 0) << " terminal=" << (o.terminal ? 1 : 0) << '\n';
  out << "step1 formed=" << c.formed[0] << " ops=" << c.ops[0] << '\n';
  out << "step2 formed=" << c.formed[1] << " ops=" << c.ops[1] << '\n';
  out << "step3 attached=" << c.attached3 << " ops=" << c.ops[2] << '\n';
  out << "step4 formed=" << c.formed[2] << " overlapping=" << c.intervalsOverlapping
      << " recolored=" << c.blueToRed << " ops=" << c.ops[3] << '\n';
  out << "step5 pref=" << c.formed[3] << " intrnl=" << c.formed[4] << " attached5A=" << c.attached5A
      << " attached5B=" << c.attached5B << " ops=" << c.ops[4] << '\n';
  return out.str();
}

}  // namespace lspan
