#include "lightsector/pairing.hpp"

#include <string>

#include "lightsector/errors.hpp"

namespace lightsector {

PairingSpace PairingSpace::make(Matrix gram) {
  if (!gram.is_square())
    throw NotSquare("gram matrix is " + std::to_string(gram.rows()) + "x" +
                    std::to_string(gram.cols()) + ", expected square");
  const std::size_t n = gram.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (gram(j, i) != -gram(i, j))
        throw NotSkewSymmetric(i, j,
                               "gram matrix not skew-symmetric at (" + std::to_string(i + 1) +
                                   "," + std::to_string(j + 1) + "): entry " + gram(i, j).str() +
                                   " vs transposed entry " + gram(j, i).str());
  return PairingSpace(std::move(gram));
}

PairingSpace PairingSpace::standard_symplectic(std::size_t g) {
  Matrix gram(2 * g, 2 * g);
  for (std::size_t b = 0; b < g; ++b) {
    gram(2 * b, 2 * b + 1) = 1;
    gram(2 * b + 1, 2 * b) = -1;
  }
  return PairingSpace(std::move(gram));
}

Vector PairingSpace::pairing_functional(std::span<const Rational> v) const {
  if (v.size() != dim())
    throw DimensionMismatch("vector of length " + std::to_string(v.size()) +
                            " in pairing space of dimension " + std::to_string(dim()));
  return gram_.apply(v);
}

Rational PairingSpace::pair(std::span<const Rational> a, std::span<const Rational> b) const {
  if (a.size() != dim())
    throw DimensionMismatch("vector of length " + std::to_string(a.size()) +
                            " in pairing space of dimension " + std::to_string(dim()));
  return dot(a, pairing_functional(b));
}

CycleConfiguration::CycleConfiguration(PairingSpace space, std::vector<Vector> cycles)
    : space_(std::move(space)), cycles_(std::move(cycles)) {
  for (std::size_t i = 0; i < cycles_.size(); ++i)
    if (cycles_[i].size() != space_.dim())
      throw DimensionMismatch("cycle " + std::to_string(i + 1) + " has length " +
                              std::to_string(cycles_[i].size()) + ", expected " +
                              std::to_string(space_.dim()));
}

const Vector& CycleConfiguration::cycle(std::size_t i) const {
  if (i >= cycles_.size())
    throw IndexOutOfRange("node index " + std::to_string(i + 1) + " outside 1.." +
                          std::to_string(cycles_.size()));
  return cycles_[i];
}

std::vector<std::size_t> CycleConfiguration::trivial_nodes() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cycles_.size(); ++i)
    if (is_zero(cycles_[i])) out.push_back(i);
  return out;
}

}  // namespace lightsector
