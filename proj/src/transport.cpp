#include "lightsector/transport.hpp"

#include <string>

#include "lightsector/errors.hpp"

namespace lightsector {

TransportOperator transport_of_class(const PairingSpace& space, std::span<const Rational> v) {
  // Column k of N is N(e_k) = ⟨e_k, v⟩ v, and ⟨e_k, v⟩ is the k-th entry of G·v.
  TransportOperator op;
  op.n_matrix = outer(v, space.pairing_functional(v));
  op.t_matrix = Matrix::identity(space.dim()) + op.n_matrix;
  return op;
}

TransportOperator pl_operator(const CycleConfiguration& cfg, std::size_t i) {
  auto op = transport_of_class(cfg.space(), cfg.cycle(i));
  op.node_index = i;
  return op;
}

std::vector<TransportOperator> all_operators(const CycleConfiguration& cfg) {
  std::vector<TransportOperator> ops;
  ops.reserve(cfg.node_count());
  for (std::size_t i = 0; i < cfg.node_count(); ++i) ops.push_back(pl_operator(cfg, i));
  return ops;
}

InteractionMatrix::InteractionMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (!entries_.is_square()) throw NotSquare("interaction matrix must be square");
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i; j < size(); ++j)
      if (entries_(j, i) != -entries_(i, j))
        throw NotSkewSymmetric(i, j, "interaction matrix not skew at (" + std::to_string(i + 1) +
                                         "," + std::to_string(j + 1) + ")");
}

InteractionMatrix interaction_matrix(const CycleConfiguration& cfg) {
  const std::size_t r = cfg.node_count();
  std::vector<Vector> functionals;
  functionals.reserve(r);
  for (const auto& d : cfg.cycles()) functionals.push_back(cfg.space().pairing_functional(d));
  Matrix m(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m(i, j) = dot(cfg.cycle(i), functionals[j]);
  return InteractionMatrix(std::move(m));
}

Matrix commutator(const TransportOperator& a, const TransportOperator& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("commutator of operators on spaces of dimension " +
                            std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
  return a.n_matrix * b.n_matrix - b.n_matrix * a.n_matrix;
}

Matrix commutator_closed_form(const PairingSpace& space, std::span<const Rational> delta_a,
                              std::span<const Rational> delta_b) {
  const std::size_t n = space.dim();
  const Rational lambda_ab = space.pair(delta_a, delta_b);
  const Rational lambda_ba = space.pair(delta_b, delta_a);
  Matrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const Vector alpha = unit_vector(n, k);
    const Rational ca = space.pair(alpha, delta_b) * lambda_ba;
    const Rational cb = space.pair(alpha, delta_a) * lambda_ab;
    for (std::size_t i = 0; i < n; ++i) out(i, k) = ca * delta_a[i] - cb * delta_b[i];
  }
  return out;
}

bool commutes_all(const InteractionMatrix& lambda) {
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (std::size_t j = 0; j < lambda.size(); ++j)
      if (i != j && !lambda(i, j).is_zero()) return false;
  return true;
}

std::vector<WordLetter> parse_signed_word(std::span<const long> letters, std::size_t r) {
  std::vector<WordLetter> word;
  word.reserve(letters.size());
  for (long k : letters) {
    const unsigned long mag = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    if (mag == 0 || mag > r)
      throw IndexOutOfRange("word letter " + std::to_string(k) + " outside ±1..±" +
                            std::to_string(r));
    word.push_back({mag - 1, k < 0});
  }
  return word;
}

Matrix transport_word(const CycleConfiguration& cfg, std::span<const WordLetter> word) {
  Matrix acc = Matrix::identity(cfg.space().dim());
  for (const auto& letter : word) {
    const auto op = pl_operator(cfg, letter.node);
    acc = acc * (letter.inverse ? op.inverse() : op.t_matrix);
  }
  return acc;
}

}  // namespace lightsector
