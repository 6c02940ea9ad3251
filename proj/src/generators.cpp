#include "lightsector/generators.hpp"

#include <algorithm>
#include <numeric>

namespace lightsector::gen {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

Rational rational(Rng& rng, long bound, long max_den) {
  const long num = std::uniform_int_distribution<long>(-bound, bound)(rng);
  const long den = std::uniform_int_distribution<long>(1, max_den)(rng);
  return Rational(num, den);
}

Vector vector(Rng& rng, std::size_t n, long bound, long max_den) {
  Vector v;
  v.reserve(n);
  for (std::size_t k = 0; k < n; ++k) v.push_back(rational(rng, bound, max_den));
  return v;
}

Vector sparse_vector(Rng& rng, std::size_t n, double zero_prob, long bound) {
  std::bernoulli_distribution zero(zero_prob);
  Vector v(n);
  for (auto& x : v)
    if (!zero(rng)) x = rational(rng, bound, 1);
  return v;
}

PairingSpace skew_space(Rng& rng, std::size_t n) {
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      g(i, j) = rational(rng, 2, 2);
      g(j, i) = -g(i, j);
    }
  return PairingSpace::make(std::move(g));
}

Matrix invertible(Rng& rng, std::size_t n) {
  Matrix lower = Matrix::identity(n);
  Matrix upper = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = rational(rng, 2, 1);
      upper(j, i) = rational(rng, 2, 2);
    }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = 1;
  return p * lower * upper;
}

BlockDecomposition partition(Rng& rng, std::size_t r) {
  if (r == 0) return BlockDecomposition(0, {});
  const std::size_t b = uniform(rng, 1, r);
  std::vector<std::size_t> nodes(r);
  std::iota(nodes.begin(), nodes.end(), 0);
  std::shuffle(nodes.begin(), nodes.end(), rng);
  std::vector<std::vector<std::size_t>> blocks(b);
  // The first b shuffled nodes seed the blocks so none is empty.
  for (std::size_t k = 0; k < r; ++k) blocks[k < b ? k : uniform(rng, 0, b - 1)].push_back(nodes[k]);
  return BlockDecomposition(r, std::move(blocks));
}

Matrix indicator_incidence(const BlockDecomposition& part) {
  Matrix c(part.node_count(), part.block_count());
  for (std::size_t beta = 0; beta < part.block_count(); ++beta)
    for (std::size_t k : part.blocks()[beta]) c(k, beta) = 1;
  return c;
}

BlockSeparatedInstance block_separated(Rng& rng, std::size_t max_r, std::size_t max_g) {
  const std::size_t r = uniform(rng, 1, max_r);
  const std::size_t g = uniform(rng, 1, max_g);
  auto space = PairingSpace::standard_symplectic(g);
  auto part = partition(rng, r);
  std::vector<Vector> classes;
  for (std::size_t beta = 0; beta < part.block_count(); ++beta)
    classes.push_back(sparse_vector(rng, space.dim(), 0.4));
  std::vector<Vector> cycles;
  for (std::size_t k = 0; k < r; ++k) cycles.push_back(classes[part.block_of(k)]);
  IncidenceDatum inc(indicator_incidence(part));
  return {std::move(space), std::move(classes), std::move(cycles), std::move(part), std::move(inc)};
}

}  // namespace lightsector::gen
