#pragma once

// The assembled finite-node light-sector package: the corrected-extension,
// transport and atom realizations computed independently from the same
// input, plus the two-layer classification (relation collapse, residual
// interaction among surviving block sectors).

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lightsector/atoms.hpp"
#include "lightsector/blocks.hpp"
#include "lightsector/gluing.hpp"
#include "lightsector/pairing.hpp"
#include "lightsector/transport.hpp"
#include "lightsector/verification.hpp"

namespace lightsector {

struct CorrectedClassVerdict {
  Vector coeffs;
  bool member = false;
};

/// Pairwise matrix commutators [N_i, N_j] for i < j, compared against the
/// closed form. Skipped when the estimated cost exceeds the survey budget.
struct CommutatorSurvey {
  bool computed = false;
  std::vector<std::pair<std::size_t, std::size_t>> nonzero_pairs;  // 0-based, i < j
  std::vector<std::pair<std::size_t, std::size_t>> closed_form_mismatches;
};

struct LightSectorPackage {
  LightSectorPackage(CycleConfiguration cfg, std::vector<TransportOperator> ops,
                     InteractionMatrix lambda, CommutatorSurvey survey)
      : cycles(std::move(cfg)),
        transport(std::move(ops)),
        interaction(std::move(lambda)),
        commutators(std::move(survey)) {}

  CycleConfiguration cycles;
  std::vector<TransportOperator> transport;
  InteractionMatrix interaction;
  CommutatorSurvey commutators;

  std::optional<IncidenceDatum> incidence;
  RealizedSpace realized;  // ambient default when incidence is absent
  std::optional<BlockInference> blocks_incidence;

  std::optional<BlockDecomposition> partition;
  std::optional<SeparationResult> separation;
  std::optional<ReducedInteractionMatrix> reduced;

  AtomSplittingReport atom;
  std::optional<AtomSplittingReport> block_atom;
  std::optional<CorrectedClassVerdict> corrected_class;

  std::vector<std::size_t> trivial_nodes;       // δ_i = 0
  std::vector<std::size_t> rank_zero_nodes;     // N_i = 0
  bool partition_discrepancy = false;           // user partition ≠ incidence blocks

  std::size_t node_count() const { return cycles.node_count(); }
  const PairingSpace& space() const { return cycles.space(); }
  const BlockClasses* block_classes() const {
    return separation ? std::get_if<BlockClasses>(&*separation) : nullptr;
  }
};

/// Throws DimensionMismatch, InvalidPartition, or pairing errors on
/// inconsistent input. Block separation is attempted iff a partition is given.
LightSectorPackage assemble(PairingSpace space, std::vector<Vector> cycles,
                            std::optional<IncidenceDatum> incidence = std::nullopt,
                            std::optional<BlockDecomposition> partition = std::nullopt,
                            std::optional<Vector> corrected_class = std::nullopt);

enum class ExtensionSide { Split, Interacting, AmbientDefault };
enum class TransportSide { Commuting, Noncommuting };
enum class AtomSide { Split, NonSplit };

struct RelationCollapse {
  bool collapsed = false;
  std::size_t from = 0;
  std::size_t to = 0;
};

struct ResidualInteraction {
  ReducedInteractionMatrix reduced;
  AtomSplittingReport verdict;
};

struct Classification {
  ExtensionSide extension_side = ExtensionSide::AmbientDefault;
  TransportSide transport_side = TransportSide::Commuting;
  AtomSide atom_side = AtomSide::Split;
  RelationCollapse relation_collapse;
  std::optional<ResidualInteraction> residual_interaction;
};

/// Throws InternalError if the independently computed realizations disagree.
Classification classify(const LightSectorPackage& pkg);

/// Machine-checks the four items of the block-reduced structure theorem.
/// Throws BlockSeparationRequired without a partition or when the
/// partition fails block separation.
VerificationReport verify_block_reduced_structure(const LightSectorPackage& pkg);

const char* to_string(ExtensionSide v);
const char* to_string(TransportSide v);
const char* to_string(AtomSide v);

}  // namespace lightsector
