#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lightsector/blocks.hpp"
#include "lightsector/transport.hpp"

namespace lightsector {

/// Splitting verdict of the atom exact sequence together with the mixing
/// graph: edges at nonzero off-diagonal entries, clusters = its connected
/// components (sorted members, ordered by least member).
struct AtomSplittingReport {
  bool is_split = true;
  std::vector<std::pair<std::size_t, std::size_t>> mixing_edges;  // i < j, 0-based
  std::vector<std::vector<std::size_t>> clusters;
};

AtomSplittingReport atom_splitting(const InteractionMatrix& lambda);
AtomSplittingReport blockwise_atom_splitting(const ReducedInteractionMatrix& reduced);

}  // namespace lightsector
