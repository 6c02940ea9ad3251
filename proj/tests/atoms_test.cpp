#include <gtest/gtest.h>

#include "lightsector/atoms.hpp"
#include "lightsector/generators.hpp"
#include "oracles.hpp"

using namespace lightsector;

using Clusters = std::vector<std::vector<std::size_t>>;
using Edges = std::vector<std::pair<std::size_t, std::size_t>>;

TEST(Atoms, SplitZeroMatrix) {
  const auto rep = atom_splitting(InteractionMatrix(Matrix::zero(2, 2)));
  EXPECT_TRUE(rep.is_split);
  EXPECT_TRUE(rep.mixing_edges.empty());
  EXPECT_EQ(rep.clusters, (Clusters{{0}, {1}}));
}

TEST(Atoms, A2SingleCluster) {
  const auto rep = atom_splitting(InteractionMatrix(Matrix{{0, 1}, {-1, 0}}));
  EXPECT_FALSE(rep.is_split);
  EXPECT_EQ(rep.mixing_edges, (Edges{{0, 1}}));
  EXPECT_EQ(rep.clusters, (Clusters{{0, 1}}));
}

TEST(Atoms, ThreeNodeClusters) {
  const auto rep = atom_splitting(InteractionMatrix(Matrix{{0, 2, 0}, {-2, 0, 0}, {0, 0, 0}}));
  EXPECT_FALSE(rep.is_split);
  EXPECT_EQ(rep.clusters, (Clusters{{0, 1}, {2}}));
}

TEST(Atoms, ClustersOrderedByLeastMember) {
  Matrix m(5, 5);
  m(1, 4) = 1;
  m(4, 1) = -1;
  m(0, 3) = Rational(1, 2);
  m(3, 0) = Rational(-1, 2);
  const auto rep = atom_splitting(InteractionMatrix(m));
  EXPECT_EQ(rep.clusters, (Clusters{{0, 3}, {1, 4}, {2}}));
  EXPECT_EQ(rep.mixing_edges, (Edges{{0, 3}, {1, 4}}));
}

TEST(Atoms, BlockLevel) {
  EXPECT_FALSE(blockwise_atom_splitting(ReducedInteractionMatrix(Matrix{{0, 1}, {-1, 0}})).is_split);
  EXPECT_TRUE(blockwise_atom_splitting(ReducedInteractionMatrix(Matrix::zero(3, 3))).is_split);
  const auto one = blockwise_atom_splitting(ReducedInteractionMatrix(Matrix::zero(1, 1)));
  EXPECT_TRUE(one.is_split);
  EXPECT_EQ(one.clusters, (Clusters{{0}}));
  EXPECT_TRUE(atom_splitting(InteractionMatrix(Matrix(0, 0))).clusters.empty());
}

TEST(AtomsProperty, ClustersMatchTransitiveClosure) {
  gen::Rng rng(61);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = rng() % 9;
    Matrix m(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j)
        if (rng() % 5 == 0) {
          m(i, j) = gen::rational(rng);
          m(j, i) = -m(i, j);
        }
    const auto rep = atom_splitting(InteractionMatrix(m));
    ASSERT_EQ(rep.clusters, oracle::closure_components(m));
    bool singletons = true;
    for (const auto& c : rep.clusters) singletons = singletons && c.size() == 1;
    ASSERT_EQ(rep.is_split, rep.mixing_edges.empty());
    ASSERT_EQ(rep.is_split, singletons);
    for (const auto& [i, j] : rep.mixing_edges) {
      ASSERT_LT(i, j);
      ASSERT_FALSE(m(i, j).is_zero());
    }
  }
}
