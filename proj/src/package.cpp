#include "lightsector/package.hpp"

#include "lightsector/errors.hpp"

namespace lightsector {

namespace {

// Upper bound on (pair count)·dim³ for the pairwise commutator survey.
constexpr double kSurveyBudget = 2.0e8;

CommutatorSurvey survey_commutators(const CycleConfiguration& cfg,
                                    const std::vector<TransportOperator>& ops) {
  CommutatorSurvey survey;
  const double r = static_cast<double>(cfg.node_count());
  const double n = static_cast<double>(cfg.space().dim());
  if (r * (r - 1) / 2 * n * n * n > kSurveyBudget) return survey;
  survey.computed = true;
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      const Matrix m = commutator(ops[i], ops[j]);
      if (!m.is_zero()) survey.nonzero_pairs.emplace_back(i, j);
      if (m != commutator_closed_form(cfg.space(), cfg.cycle(i), cfg.cycle(j)))
        survey.closed_form_mismatches.emplace_back(i, j);
    }
  return survey;
}

}  // namespace

LightSectorPackage assemble(PairingSpace space, std::vector<Vector> cycles,
                            std::optional<IncidenceDatum> incidence,
                            std::optional<BlockDecomposition> partition,
                            std::optional<Vector> corrected_class) {
  CycleConfiguration cfg(std::move(space), std::move(cycles));
  const std::size_t r = cfg.node_count();
  if (incidence && incidence->node_count() != r)
    throw DimensionMismatch("incidence has " + std::to_string(incidence->node_count()) +
                            " rows for " + std::to_string(r) + " nodes");
  if (partition && partition->node_count() != r)
    throw InvalidPartition("partition covers " + std::to_string(partition->node_count()) +
                           " nodes for " + std::to_string(r) + " nodes");
  if (corrected_class && corrected_class->size() != r)
    throw DimensionMismatch("corrected class has " + std::to_string(corrected_class->size()) +
                            " coefficients for " + std::to_string(r) + " nodes");

  auto ops = all_operators(cfg);
  auto lambda = interaction_matrix(cfg);
  auto survey = survey_commutators(cfg, ops);
  LightSectorPackage pkg(std::move(cfg), std::move(ops), std::move(lambda), std::move(survey));

  pkg.trivial_nodes = pkg.cycles.trivial_nodes();
  for (const auto& op : pkg.transport)
    if (op.n_matrix.is_zero()) pkg.rank_zero_nodes.push_back(op.node_index);

  // Corrected-extension realization.
  if (incidence) {
    pkg.realized = realized_space(*incidence);
    pkg.blocks_incidence = infer_blocks_from_incidence(*incidence);
    pkg.incidence = std::move(incidence);
  } else {
    pkg.realized = ambient_realized_space(r);
  }
  if (corrected_class) {
    const bool member = check_membership(pkg.realized, *corrected_class);
    pkg.corrected_class = CorrectedClassVerdict{std::move(*corrected_class), member};
  }

  // Atom realization.
  pkg.atom = atom_splitting(pkg.interaction);

  // Transport-side block analysis.
  if (partition) {
    pkg.separation = check_block_separation(pkg.cycles, *partition);
    if (const auto* bc = std::get_if<BlockClasses>(&*pkg.separation)) {
      pkg.reduced = reduced_matrix(pkg.space(), *bc);
      pkg.block_atom = blockwise_atom_splitting(*pkg.reduced);
    }
    if (pkg.blocks_incidence) {
      const auto* inferred = std::get_if<BlockDecomposition>(&*pkg.blocks_incidence);
      pkg.partition_discrepancy = inferred == nullptr || !(*inferred == *partition);
    }
    pkg.partition = std::move(partition);
  }
  return pkg;
}

Classification classify(const LightSectorPackage& pkg) {
  Classification c;
  const std::size_t r = pkg.node_count();
  if (!pkg.incidence)
    c.extension_side = ExtensionSide::AmbientDefault;
  else
    c.extension_side = classify_extension_side(pkg.realized) == ExtensionVerdict::Split
                           ? ExtensionSide::Split
                           : ExtensionSide::Interacting;
  c.relation_collapse = {!pkg.realized.is_full, r, pkg.realized.v_geom.dim()};

  if (!pkg.commutators.closed_form_mismatches.empty())
    throw InternalError("matrix commutator differs from its closed form");
  const bool commuting = commutes_all(pkg.interaction);
  if (pkg.commutators.computed && commuting != pkg.commutators.nonzero_pairs.empty())
    throw InternalError("matrix commutators disagree with the interaction matrix");
  c.transport_side = commuting ? TransportSide::Commuting : TransportSide::Noncommuting;
  c.atom_side = pkg.atom.is_split ? AtomSide::Split : AtomSide::NonSplit;
  if ((c.transport_side == TransportSide::Commuting) != (c.atom_side == AtomSide::Split))
    throw InternalError("transport and atom realizations disagree");

  if (pkg.reduced && pkg.block_atom)
    c.residual_interaction = ResidualInteraction{*pkg.reduced, *pkg.block_atom};
  return c;
}

VerificationReport verify_block_reduced_structure(const LightSectorPackage& pkg) {
  if (!pkg.partition)
    throw BlockSeparationRequired("no relation-block partition supplied");
  const BlockClasses* bc = pkg.block_classes();
  if (bc == nullptr)
    throw BlockSeparationRequired(
        "block separation fails: " + std::get<SeparationViolation>(*pkg.separation).describe());

  const auto& part = *pkg.partition;
  const std::size_t r = pkg.node_count();
  const std::string b = std::to_string(surviving_dimension(part));
  VerificationReport report;

  // (1) relation collapse
  report.add("(1) quotient dim of relation lattice equals block count", b,
             std::to_string(quotient_dim(r, relation_lattice_from_blocks(part))));
  if (pkg.incidence)
    report.add("(1) realized dimension equals block count", b,
               std::to_string(pkg.realized.v_geom.dim()));

  // (2) descent of the interaction matrix
  const auto reduced = reduced_matrix(pkg.space(), *bc);
  const auto descent = verify_block_consistency(pkg.interaction, *bc, reduced);
  for (const auto& check : descent.checks())
    report.add("(2) " + check.name, check.expected, check.actual, check.pass);

  // (3) block transport
  const auto block_transport = block_commutator_check(pkg.space(), *bc);
  for (const auto& check : block_transport.checks())
    report.add("(3) " + check.name, check.expected, check.actual, check.pass);

  // (4) atom verdict agreement
  const auto full = atom_splitting(pkg.interaction);
  const auto blockwise = blockwise_atom_splitting(reduced);
  report.add("(4) atom verdict of full matrix matches reduced block matrix",
             full.is_split ? "split" : "non-split", blockwise.is_split ? "split" : "non-split");
  return report;
}

const char* to_string(ExtensionSide v) {
  switch (v) {
    case ExtensionSide::Split: return "Split";
    case ExtensionSide::Interacting: return "Interacting";
    case ExtensionSide::AmbientDefault: return "Ambient";
  }
  return "?";
}

const char* to_string(TransportSide v) {
  return v == TransportSide::Commuting ? "Commuting" : "Noncommuting";
}

const char* to_string(AtomSide v) { return v == AtomSide::Split ? "Split" : "NonSplit"; }

}  // namespace lightsector
