#include "lightsector/blocks.hpp"

#include <algorithm>
#include <limits>

#include "lightsector/errors.hpp"

namespace lightsector {

namespace {

constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();

std::string pair_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

BlockDecomposition::BlockDecomposition(std::size_t r, std::vector<std::vector<std::size_t>> blocks)
    : r_(r), blocks_(std::move(blocks)), owner_(r, kUnassigned) {
  for (auto& b : blocks_) {
    if (b.empty()) throw InvalidPartition("partition contains an empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t beta = 0; beta < blocks_.size(); ++beta)
    for (std::size_t k : blocks_[beta]) {
      if (k >= r_)
        throw InvalidPartition("node index " + std::to_string(k + 1) + " outside 1.." +
                               std::to_string(r_));
      if (owner_[k] != kUnassigned)
        throw InvalidPartition("node " + std::to_string(k + 1) + " appears in two blocks");
      owner_[k] = beta;
    }
  for (std::size_t k = 0; k < r_; ++k)
    if (owner_[k] == kUnassigned)
      throw InvalidPartition("node " + std::to_string(k + 1) + " is not covered by any block");
}

BlockDecomposition BlockDecomposition::singletons(std::size_t r) {
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t k = 0; k < r; ++k) blocks.push_back({k});
  return BlockDecomposition(r, std::move(blocks));
}

std::string BlockDecomposition::str() const {
  std::string out;
  for (std::size_t beta = 0; beta < blocks_.size(); ++beta) {
    if (beta) out += ',';
    out += '{';
    for (std::size_t m = 0; m < blocks_[beta].size(); ++m) {
      if (m) out += ',';
      out += std::to_string(blocks_[beta][m] + 1);
    }
    out += '}';
  }
  return out;
}

std::string SeparationViolation::describe() const {
  return "block " + std::to_string(block + 1) + ": cycle of node " +
         std::to_string(other_node + 1) + " differs from cycle of node " +
         std::to_string(first_node + 1);
}

SeparationResult check_block_separation(const CycleConfiguration& cfg,
                                        const BlockDecomposition& part) {
  if (part.node_count() != cfg.node_count())
    throw DimensionMismatch("partition covers " + std::to_string(part.node_count()) +
                            " nodes but configuration has " + std::to_string(cfg.node_count()));
  BlockClasses bc{part, {}};
  for (std::size_t beta = 0; beta < part.block_count(); ++beta) {
    const auto& members = part.blocks()[beta];
    const Vector& v = cfg.cycle(members.front());
    for (std::size_t m = 1; m < members.size(); ++m)
      if (cfg.cycle(members[m]) != v) return SeparationViolation{beta, members.front(), members[m]};
    bc.classes.push_back(v);
  }
  return bc;
}

ReducedInteractionMatrix reduced_matrix(const PairingSpace& space, const BlockClasses& bc) {
  const std::size_t b = bc.classes.size();
  Matrix mu(b, b);
  for (std::size_t beta = 0; beta < b; ++beta)
    for (std::size_t gamma = 0; gamma < b; ++gamma)
      mu(beta, gamma) = space.pair(bc.classes[beta], bc.classes[gamma]);
  return ReducedInteractionMatrix(std::move(mu));
}

VerificationReport verify_block_consistency(const InteractionMatrix& lambda,
                                            const BlockClasses& bc,
                                            const ReducedInteractionMatrix& reduced) {
  const auto& part = bc.decomposition;
  if (lambda.size() != part.node_count() || reduced.size() != part.block_count())
    throw DimensionMismatch("interaction matrix sizes do not match the block decomposition");
  VerificationReport report;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (std::size_t j = 0; j < lambda.size(); ++j) {
      const std::size_t beta = part.block_of(i);
      const std::size_t gamma = part.block_of(j);
      if (beta == gamma) {
        report.add("intra-block lambda" + pair_name(i, j), "0", lambda(i, j).str());
      } else {
        report.add("lambda" + pair_name(i, j) + " = mu" + pair_name(beta, gamma),
                   reduced(beta, gamma).str(), lambda(i, j).str());
      }
    }
  return report;
}

VerificationReport block_commutator_check(const PairingSpace& space, const BlockClasses& bc) {
  const std::size_t b = bc.classes.size();
  std::vector<TransportOperator> ops;
  ops.reserve(b);
  for (const auto& v : bc.classes) ops.push_back(transport_of_class(space, v));

  VerificationReport report;
  bool all_commute = true;
  bool mu_offdiag_zero = true;
  for (std::size_t beta = 0; beta < b; ++beta)
    for (std::size_t gamma = 0; gamma < b; ++gamma) {
      if (beta == gamma) continue;
      const Matrix m = commutator(ops[beta], ops[gamma]);
      const Matrix closed = commutator_closed_form(space, bc.classes[beta], bc.classes[gamma]);
      report.add("[N" + std::to_string(beta + 1) + ",N" + std::to_string(gamma + 1) +
                     "] closed form",
                 closed.str(), m.str());
      all_commute = all_commute && m.is_zero();
      mu_offdiag_zero = mu_offdiag_zero && space.pair(bc.classes[beta], bc.classes[gamma]).is_zero();
    }
  report.add("block operators commute iff off-diagonal mu vanish",
             mu_offdiag_zero ? "commuting" : "noncommuting",
             all_commute ? "commuting" : "noncommuting");
  return report;
}

std::size_t surviving_dimension(const BlockDecomposition& part) { return part.block_count(); }

Subspace relation_lattice_from_blocks(const BlockDecomposition& part) {
  const std::size_t r = part.node_count();
  std::vector<Vector> gens;
  for (const auto& block : part.blocks())
    for (std::size_t m = 1; m < block.size(); ++m) {
      Vector v(r);
      v[block.front()] = 1;
      v[block[m]] = -1;
      gens.push_back(std::move(v));
    }
  return Subspace::span(r, gens);
}

BlockInference infer_blocks_from_incidence(const IncidenceDatum& inc) {
  const std::size_t r = inc.node_count();
  const Subspace v_geom = column_space(inc.matrix());
  std::vector<bool> covered(r, false);
  std::vector<std::vector<std::size_t>> blocks;
  for (const auto& v : v_geom.basis()) {
    std::vector<std::size_t> support;
    for (std::size_t k = 0; k < r; ++k) {
      if (v[k].is_zero()) continue;
      if (v[k] != Rational(1))
        return NotBlockAdapted{"basis vector " + vector_str(v) + " is not a 0/1 indicator", v};
      if (covered[k])
        return NotBlockAdapted{"basis vector " + vector_str(v) + " overlaps another block", v};
      covered[k] = true;
      support.push_back(k);
    }
    blocks.push_back(std::move(support));
  }
  for (std::size_t k = 0; k < r; ++k)
    if (!covered[k])
      return NotBlockAdapted{"node " + std::to_string(k + 1) + " lies in no block", std::nullopt};
  return BlockDecomposition(r, std::move(blocks));
}

}  // namespace lightsector
