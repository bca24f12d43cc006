#include "lspan/union_find.hpp"

#include <numeric>

namespace lspan {

UnionFind::UnionFind(int n, std::vector<std::pair<Vertex, Vertex>> virtualEnds)
    : n_(n), parent_(n), rank_(n, 0), ends_(std::move(virtualEnds)) {
  std::iota(parent_.begin(), parent_.end(), 0);
  std::size_t k = ends_.size();
  ptr_.assign(k, -1);
  head_.resize(k);
  next_.assign(k, -1);
  listSize_.assign(k, 1);
  tail_.resize(k);
  for (std::size_t j = 0; j < k; ++j) {
    head_[j] = n + static_cast<Vertex>(j);
    tail_[j] = n + static_cast<Vertex>(j);
  }
}

Vertex UnionFind::find_original(Vertex x) {
  Vertex r = x;
  while (parent_[r] != r) r = parent_[r];
  while (parent_[x] != r) {
    Vertex nx = parent_[x];
    parent_[x] = r;
    x = nx;
  }
  return r;
}

Vertex UnionFind::find(Vertex x) {
  if (x < n_) return find_original(x);
  int j = x - n_;
  if (ptr_[j] >= 0) return find_original(ptr_[j]);
  return head_[j];
}

// Moves every member of the pure-virtual list headed by head into the set of
// root, pointing each at whichever endpoint of its split edge lies in that set.
void UnionFind::absorb_list(Vertex head, Vertex root) {
  for (Vertex x = head; x >= 0;) {
    int j = x - n_;
    auto [u, v] = ends_[j];
    if (find_original(u) == root) {
      ptr_[j] = u;
    } else if (find_original(v) == root) {
      ptr_[j] = v;
    } else {
      // Sets are connected along split edges, so one endpoint is always present.
      throw Error("union-find: virtual vertex merged into a set without its endpoints");
    }
    Vertex nx = next_[j];
    next_[j] = -1;
    x = nx;
  }
}

void UnionFind::unite(Vertex a, Vertex b) {
  Vertex ra = find(a);
  Vertex rb = find(b);
  if (ra == rb) return;
  bool va = ra >= n_;
  bool vb = rb >= n_;
  if (!va && !vb) {
    if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    if (rank_[ra] == rank_[rb]) ++rank_[ra];
    return;
  }
  if (va && vb) {
    int ja = ra - n_;
    int jb = rb - n_;
    if (listSize_[ja] < listSize_[jb]) std::swap(ja, jb);
    Vertex keep = n_ + ja;
    for (Vertex x = n_ + jb; x >= 0; x = next_[x - n_]) head_[x - n_] = keep;
    next_[tail_[ja] - n_] = n_ + jb;
    tail_[ja] = tail_[jb];
    listSize_[ja] += listSize_[jb];
    return;
  }
  if (va) std::swap(ra, rb);
  absorb_list(rb, ra);
}

}  // namespace lspan
