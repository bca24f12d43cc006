#include "lspan/mst.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

namespace lspan {
namespace {

struct PlainDsu {
  std::vector<int> parent, rank;
  explicit PlainDsu(int n) : parent(n), rank(n, 0) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank[a] < rank[b]) std::swap(a, b);
    parent[b] = a;
    if (rank[a] == rank[b]) ++rank[a];
    return true;
  }
};

}  // namespace

std::vector<EdgeId> build_mst(const WeightedGraph& g, const std::vector<EdgeId>& candidates) {
  std::vector<EdgeId> order = candidates;
  auto key = [&](EdgeId id) {
    const Edge& e = g.edge(id);
    return std::make_tuple(e.w, std::min(e.u, e.v), std::max(e.u, e.v), id);
  };
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return key(a) < key(b); });
  PlainDsu dsu(g.n());
  std::vector<EdgeId> tree;
  tree.reserve(g.n() > 0 ? g.n() - 1 : 0);
  for (EdgeId id : order) {
    const Edge& e = g.edge(id);
    if (dsu.unite(e.u, e.v)) tree.push_back(id);
  }
  if (g.n() > 0 && static_cast<int>(tree.size()) != g.n() - 1)
    throw DisconnectedGraph("graph has more than one connected component");
  std::sort(tree.begin(), tree.end());
  return tree;
}

std::vector<EdgeId> build_mst(const WeightedGraph& g) {
  std::vector<EdgeId> all(g.m());
  std::iota(all.begin(), all.end(), 0);
  return build_mst(g, all);
}

double SubdividedMst::total_weight() const {
  double s = 0.0;
  for (const SubEdge& e : subEdges) s += e.w;
  return s;
}

SubdividedMst subdivide_mst(const WeightedGraph& g, const std::vector<EdgeId>& mst, double wbar) {
  SubdividedMst out;
  out.n = g.n();
  out.wbar = wbar;
  out.mstEdges = mst;
  Vertex nextId = g.n();
  for (std::size_t s = 0; s < mst.size(); ++s) {
    const Edge& e = g.edge(mst[s]);
    Segment seg;
    seg.edge = mst[s];
    seg.u = e.u;
    seg.v = e.v;
    seg.weight = e.w;
    long long pieces = 1;
    if (e.w > wbar) {
      pieces = static_cast<long long>(std::ceil(e.w / wbar));
      while (e.w / static_cast<double>(pieces) > wbar) ++pieces;
    }
    seg.piece = e.w / static_cast<double>(pieces);
    for (long long k = 1; k < pieces; ++k) {
      seg.virtuals.push_back(nextId++);
      out.virtualSegment.push_back(static_cast<int>(s));
    }
    Vertex prev = e.u;
    for (Vertex x : seg.virtuals) {
      out.subEdges.push_back({prev, x, seg.piece, static_cast<int>(s)});
      prev = x;
    }
    out.subEdges.push_back({prev, e.v, seg.piece, static_cast<int>(s)});
    out.segments.push_back(std::move(seg));
  }
  out.extendedCount = nextId;
  return out;
}

}  // namespace lspan
