#pragma once

// Seeded random model configurations for property checks and the selftest.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "lightsector/blocks.hpp"
#include "lightsector/gluing.hpp"
#include "lightsector/pairing.hpp"

namespace lightsector::gen {

using Rng = std::mt19937_64;

/// Numerator in [-bound, bound], denominator in [1, max_den].
Rational rational(Rng& rng, long bound = 3, long max_den = 2);
Vector vector(Rng& rng, std::size_t n, long bound = 3, long max_den = 2);
/// Vector whose entries are zero with probability `zero_prob`.
Vector sparse_vector(Rng& rng, std::size_t n, double zero_prob, long bound = 3);
/// Random skew-symmetric Gram matrix (not necessarily nondegenerate).
PairingSpace skew_space(Rng& rng, std::size_t n);
/// Random invertible n×n matrix (unit triangular factors with a permutation).
Matrix invertible(Rng& rng, std::size_t n);
/// Uniformly shuffled partition of r nodes into 1..r blocks.
BlockDecomposition partition(Rng& rng, std::size_t r);
/// r×|B| 0/1 matrix whose column β is the indicator of block β.
Matrix indicator_incidence(const BlockDecomposition& part);

struct BlockSeparatedInstance {
  PairingSpace space;
  std::vector<Vector> classes;  // one per block
  std::vector<Vector> cycles;   // δ_k = classes[block_of(k)]
  BlockDecomposition partition;
  IncidenceDatum incidence;
};

/// r in [1, max_r], space = standard_symplectic(g) with g in [1, max_g],
/// random block classes duplicated within blocks, indicator incidence.
BlockSeparatedInstance block_separated(Rng& rng, std::size_t max_r = 12, std::size_t max_g = 6);

}  // namespace lightsector::gen
