#pragma once

#include <utility>
#include <vector>

#include "lspan/graph.hpp"

namespace lspan {

// Disjoint sets over the extended vertex set where only original vertices live
// in the parent/rank forest. A virtual vertex either points to an endpoint of
// its split edge lying in the same set, or belongs to a list of virtual vertices
// forming a set with no original vertex. The list head represents such a set.
class UnionFind {
 public:
  UnionFind() = default;
  // virtualEnds[j] holds the endpoints of the split edge carrying virtual vertex n + j.
  UnionFind(int n, std::vector<std::pair<Vertex, Vertex>> virtualEnds);

  int original_count() const { return n_; }
  int size() const { return n_ + static_cast<int>(ends_.size()); }

  Vertex find(Vertex x);
  void unite(Vertex a, Vertex b);
  bool same(Vertex a, Vertex b) { return find(a) == find(b); }

  bool is_pure_virtual(Vertex x) const { return x >= n_ && ptr_[x - n_] < 0; }
  // p(x) for a virtual vertex in a set containing an original vertex, else -1.
  Vertex pointer(Vertex x) const { return x >= n_ ? ptr_[x - n_] : x; }

 private:
  Vertex find_original(Vertex x);
  void absorb_list(Vertex head, Vertex root);

  int n_ = 0;
  std::vector<Vertex> parent_;
  std::vector<int> rank_;
  std::vector<std::pair<Vertex, Vertex>> ends_;
  std::vector<Vertex> ptr_;
  // Pure-virtual lists, indexed by virtual slot.
  std::vector<Vertex> head_;
  std::vector<Vertex> next_;
  std::vector<int> listSize_;
  std::vector<Vertex> tail_;
};

}  // namespace lspan
