#include <gtest/gtest.h>

#include "lightsector/errors.hpp"
#include "lightsector/package.hpp"
#include "lightsector/scenario.hpp"

using namespace lightsector;

using Clusters = std::vector<std::vector<std::size_t>>;

namespace {

LightSectorPackage four_node_package() {
  return assemble(PairingSpace::standard_symplectic(1), {{1, 0}, {1, 0}, {0, 1}, {0, 1}},
                  IncidenceDatum(Matrix{{1, 0}, {1, 0}, {0, 1}, {0, 1}}),
                  BlockDecomposition(4, {{0, 1}, {2, 3}}));
}

}  // namespace

TEST(Package, A1xA1) {
  const auto pkg = assemble_scenario(builtin_a1xa1());
  EXPECT_EQ(pkg.node_count(), 2u);
  EXPECT_TRUE(pkg.interaction.entries().is_zero());
  EXPECT_TRUE(pkg.realized.is_full);
  EXPECT_TRUE(pkg.atom.is_split);
  EXPECT_TRUE(pkg.commutators.computed);
  EXPECT_TRUE(pkg.commutators.nonzero_pairs.empty());

  const auto c = classify(pkg);
  EXPECT_EQ(c.extension_side, ExtensionSide::Split);
  EXPECT_EQ(c.transport_side, TransportSide::Commuting);
  EXPECT_EQ(c.atom_side, AtomSide::Split);
  EXPECT_FALSE(c.relation_collapse.collapsed);
}

TEST(Package, A2) {
  const auto pkg = assemble_scenario(builtin_a2());
  EXPECT_EQ(pkg.realized.v_geom.dim(), 1u);
  EXPECT_FALSE(pkg.atom.is_split);
  EXPECT_EQ(pkg.commutators.nonzero_pairs.size(), 1u);

  const auto c = classify(pkg);
  EXPECT_EQ(c.extension_side, ExtensionSide::Interacting);
  EXPECT_EQ(c.transport_side, TransportSide::Noncommuting);
  EXPECT_EQ(c.atom_side, AtomSide::NonSplit);
  EXPECT_TRUE(c.relation_collapse.collapsed);
  EXPECT_EQ(c.relation_collapse.from, 2u);
  EXPECT_EQ(c.relation_collapse.to, 1u);
  EXPECT_FALSE(c.residual_interaction.has_value());
  EXPECT_THROW(verify_block_reduced_structure(pkg), BlockSeparationRequired);
}

TEST(Package, ThreeNode) {
  const auto pkg = assemble_scenario(builtin_three_node());
  ASSERT_TRUE(pkg.blocks_incidence.has_value());
  EXPECT_EQ(std::get<BlockDecomposition>(*pkg.blocks_incidence).str(), "{1,2},{3}");
  ASSERT_TRUE(pkg.separation.has_value());
  EXPECT_TRUE(std::holds_alternative<SeparationViolation>(*pkg.separation));
  EXPECT_EQ(pkg.block_classes(), nullptr);
  EXPECT_FALSE(pkg.partition_discrepancy);

  const auto c = classify(pkg);
  EXPECT_EQ(c.relation_collapse.from, 3u);
  EXPECT_EQ(c.relation_collapse.to, 2u);
  EXPECT_EQ(c.transport_side, TransportSide::Noncommuting);
  EXPECT_EQ(pkg.atom.clusters, (Clusters{{0, 1}, {2}}));
  EXPECT_THROW(verify_block_reduced_structure(pkg), BlockSeparationRequired);
}

TEST(Package, FourNodeBlockSeparated) {
  const auto pkg = four_node_package();
  ASSERT_NE(pkg.block_classes(), nullptr);
  ASSERT_TRUE(pkg.reduced.has_value());
  EXPECT_EQ(pkg.reduced->entries(), (Matrix{{0, 1}, {-1, 0}}));
  EXPECT_EQ(pkg.partition->block_count(), 2u);

  const auto c = classify(pkg);
  ASSERT_TRUE(c.residual_interaction.has_value());
  EXPECT_FALSE(c.residual_interaction->verdict.is_split);
  EXPECT_EQ(c.relation_collapse.to, 2u);

  const auto report = verify_block_reduced_structure(pkg);
  EXPECT_TRUE(report.overall());
  for (const char* item : {"(1) ", "(2) ", "(3) ", "(4) "}) {
    bool seen = false;
    for (const auto& check : report.checks()) seen = seen || check.name.rfind(item, 0) == 0;
    EXPECT_TRUE(seen) << item;
  }
}

TEST(Package, VerificationDetectsInjectedFault) {
  auto pkg = four_node_package();
  Matrix bad = pkg.interaction.entries();
  bad(0, 2) = Rational(5);
  bad(2, 0) = Rational(-5);
  pkg.interaction = InteractionMatrix(bad);
  const auto report = verify_block_reduced_structure(pkg);
  EXPECT_FALSE(report.overall());
  EXPECT_EQ(report.failures(), 2u);
  for (const auto& check : report.checks())
    if (!check.pass) EXPECT_EQ(check.name.rfind("(2) ", 0), 0u) << check.name;
}

TEST(Package, CrossCheckFailureIsInternalError) {
  auto pkg = assemble_scenario(builtin_a2());
  pkg.interaction = InteractionMatrix(Matrix::zero(2, 2));
  EXPECT_THROW(classify(pkg), InternalError);
}

TEST(Package, AmbientDefaultWithoutIncidence) {
  const auto pkg = assemble(PairingSpace::standard_symplectic(1), {{1, 0}, {0, 1}});
  EXPECT_FALSE(pkg.incidence.has_value());
  EXPECT_TRUE(pkg.realized.is_full);
  const auto c = classify(pkg);
  EXPECT_EQ(c.extension_side, ExtensionSide::AmbientDefault);
  EXPECT_STREQ(to_string(c.extension_side), "Ambient");
  EXPECT_FALSE(c.relation_collapse.collapsed);
}

TEST(Package, PartitionDiscrepancyFlag) {
  auto s = builtin_a2();
  s.partition = std::vector<std::vector<std::size_t>>{{0}, {1}};
  const auto pkg = assemble_scenario(s);
  EXPECT_TRUE(pkg.partition_discrepancy);
  ASSERT_NE(pkg.block_classes(), nullptr);
  // Singletons separate, but the incidence realizes one direction, not two.
  const auto report = verify_block_reduced_structure(pkg);
  EXPECT_EQ(report.failures(), 1u);
  for (const auto& check : report.checks())
    if (!check.pass) EXPECT_EQ(check.name, "(1) realized dimension equals block count");
}

TEST(Package, CorrectedClassAndFlags) {
  const auto pkg = assemble(PairingSpace::standard_symplectic(1), {{1, 0}, {0, 0}, {1, 0}},
                            IncidenceDatum(Matrix{{1}, {1}, {1}}), std::nullopt,
                            Vector{2, 2, 2});
  ASSERT_TRUE(pkg.corrected_class.has_value());
  EXPECT_TRUE(pkg.corrected_class->member);
  EXPECT_EQ(pkg.trivial_nodes, (std::vector<std::size_t>{1}));
  EXPECT_EQ(pkg.rank_zero_nodes, (std::vector<std::size_t>{1}));

  const auto off = assemble(PairingSpace::standard_symplectic(1), {{1, 0}, {0, 1}},
                            IncidenceDatum(Matrix{{1}, {1}}), std::nullopt, Vector{1, 0});
  EXPECT_FALSE(off.corrected_class->member);
}

TEST(Package, RankZeroWithoutTrivialCycle) {
  // δ in the radical of a degenerate pairing: nonzero cycle, N = 0.
  const auto space = PairingSpace::make(Matrix{{0, 0, 0}, {0, 0, 1}, {0, -1, 0}});
  const auto pkg = assemble(space, {{1, 0, 0}, {0, 1, 0}});
  EXPECT_TRUE(pkg.trivial_nodes.empty());
  EXPECT_EQ(pkg.rank_zero_nodes, (std::vector<std::size_t>{0}));
}

TEST(Package, InconsistentInputRejected) {
  const auto space = PairingSpace::standard_symplectic(1);
  EXPECT_THROW(assemble(space, {{1, 0}, {0, 1}}, IncidenceDatum(Matrix{{1}, {1}, {1}})),
               DimensionMismatch);
  EXPECT_THROW(assemble(space, {{1, 0}, {0, 1}}, std::nullopt, BlockDecomposition::singletons(3)),
               InvalidPartition);
  EXPECT_THROW(assemble(space, {{1, 0}}, std::nullopt, std::nullopt, Vector{1, 2}),
               DimensionMismatch);
  EXPECT_THROW(assemble(space, {{1, 0, 0}}), DimensionMismatch);
}

TEST(Package, TransportAndAtomVerdictsAgree) {
  for (const auto& name : builtin_names()) {
    const auto pkg = assemble_scenario(builtin_scenario(name));
    const auto c = classify(pkg);
    EXPECT_EQ(c.transport_side == TransportSide::Commuting, c.atom_side == AtomSide::Split) << name;
    EXPECT_EQ(pkg.transport.size(), pkg.node_count());
    EXPECT_EQ(pkg.interaction.size(), pkg.node_count());
  }
}
