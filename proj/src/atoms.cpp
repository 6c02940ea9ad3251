#include "lightsector/atoms.hpp"

#include <numeric>

namespace lightsector {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // Keeps the smaller index as root so roots are cluster minima.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

AtomSplittingReport atom_splitting(const InteractionMatrix& lambda) {
  const std::size_t r = lambda.size();
  AtomSplittingReport out;
  DisjointSets sets(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (!lambda(i, j).is_zero()) {
        out.mixing_edges.emplace_back(i, j);
        sets.unite(i, j);
      }
  out.is_split = out.mixing_edges.empty();

  std::vector<std::size_t> slot(r, r);
  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t root = sets.find(k);
    if (slot[root] == r) {
      slot[root] = out.clusters.size();
      out.clusters.emplace_back();
    }
    out.clusters[slot[root]].push_back(k);
  }
  return out;
}

AtomSplittingReport blockwise_atom_splitting(const ReducedInteractionMatrix& reduced) {
  return atom_splitting(reduced);
}

}  // namespace lightsector
