#pragma once

// Relation-block decompositions of the node set, the block-separation
// hypothesis (one common vanishing class per block), the reduced block
// interaction matrix and the checks of the block-reduced structure theorem.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lightsector/gluing.hpp"
#include "lightsector/linalg.hpp"
#include "lightsector/pairing.hpp"
#include "lightsector/transport.hpp"
#include "lightsector/verification.hpp"

namespace lightsector {

/// A partition of {0..r-1} into nonempty blocks. Members are sorted within a
/// block and blocks are sorted by their least member.
class BlockDecomposition {
 public:
  /// Throws InvalidPartition on empty blocks, repeated or out-of-range
  /// indices, or incomplete coverage.
  BlockDecomposition(std::size_t r, std::vector<std::vector<std::size_t>> blocks);
  static BlockDecomposition singletons(std::size_t r);

  std::size_t node_count() const { return r_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
  std::size_t block_of(std::size_t node) const { return owner_.at(node); }

  friend bool operator==(const BlockDecomposition& a, const BlockDecomposition& b) {
    return a.r_ == b.r_ && a.blocks_ == b.blocks_;
  }

  /// "{1,2},{3}" with 1-based indices.
  std::string str() const;

 private:
  std::size_t r_;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> owner_;
};

struct BlockClasses {
  BlockDecomposition decomposition;
  std::vector<Vector> classes;  // v_β, indexed like decomposition.blocks()
};

struct SeparationViolation {
  std::size_t block = 0;       // 0-based block index
  std::size_t first_node = 0;  // 0-based; the block's least member
  std::size_t other_node = 0;  // first member whose cycle differs from first_node's

  std::string describe() const;
};

using SeparationResult = std::variant<BlockClasses, SeparationViolation>;

/// Demands exact equality δ_k = v_β within every block.
/// Throws DimensionMismatch when part and cfg disagree on r.
SeparationResult check_block_separation(const CycleConfiguration& cfg,
                                        const BlockDecomposition& part);

class ReducedInteractionMatrix : public InteractionMatrix {
 public:
  using InteractionMatrix::InteractionMatrix;
};

/// μ_βγ = ⟨v_β, v_γ⟩.
ReducedInteractionMatrix reduced_matrix(const PairingSpace& space, const BlockClasses& bc);

/// One check per ordered pair (i, j): λ_ij against μ of the owning blocks,
/// with intra-block entries expected to vanish.
VerificationReport verify_block_consistency(const InteractionMatrix& lambda,
                                            const BlockClasses& bc,
                                            const ReducedInteractionMatrix& reduced);

/// Builds N_β from each v_β and compares the matrix commutator with the
/// closed form for every ordered pair, then checks that pairwise
/// commutation holds iff every off-diagonal μ_βγ is zero.
VerificationReport block_commutator_check(const PairingSpace& space, const BlockClasses& bc);

std::size_t surviving_dimension(const BlockDecomposition& part);

/// R_blk = span{ e_i − e_j : i, j in a common block } ⊆ ℚ^r.
Subspace relation_lattice_from_blocks(const BlockDecomposition& part);

struct NotBlockAdapted {
  std::string reason;
  std::optional<Vector> offending;
};

using BlockInference = std::variant<BlockDecomposition, NotBlockAdapted>;

/// Succeeds when the canonical basis of the realized space consists of 0/1
/// vectors with disjoint supports covering every node.
BlockInference infer_blocks_from_incidence(const IncidenceDatum& inc);

}  // namespace lightsector
