#pragma once

// Picard–Lefschetz transport: T_i(α) = α + ⟨α, δ_i⟩ δ_i and its nilpotent
// part N_i = T_i − Id, materialized as dense matrices acting on column
// vectors (column k is the image of the k-th basis vector).

#include <cstddef>
#include <span>
#include <vector>

#include "lightsector/linalg.hpp"
#include "lightsector/pairing.hpp"

namespace lightsector {

struct TransportOperator {
  std::size_t node_index = 0;  // 0-based
  Matrix t_matrix;
  Matrix n_matrix;

  std::size_t dim() const { return t_matrix.rows(); }
  /// Identity − N, valid because N² = 0.
  Matrix inverse() const { return Matrix::identity(dim()) - n_matrix; }
  std::size_t nilpotent_rank() const { return rank(n_matrix); }
};

/// Transport operator of a single class v in `space` (node_index left 0).
TransportOperator transport_of_class(const PairingSpace& space, std::span<const Rational> v);

/// Throws IndexOutOfRange unless i < cfg.node_count().
TransportOperator pl_operator(const CycleConfiguration& cfg, std::size_t i);
std::vector<TransportOperator> all_operators(const CycleConfiguration& cfg);

/// The r×r matrix λ_ij = ⟨δ_i, δ_j⟩; skew with zero diagonal.
class InteractionMatrix {
 public:
  explicit InteractionMatrix(Matrix entries);

  std::size_t size() const { return entries_.rows(); }
  const Matrix& entries() const { return entries_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

  friend bool operator==(const InteractionMatrix&, const InteractionMatrix&) = default;

 private:
  Matrix entries_;
};

InteractionMatrix interaction_matrix(const CycleConfiguration& cfg);

/// N_a·N_b − N_b·N_a. Throws DimensionMismatch on differing ambient dims.
Matrix commutator(const TransportOperator& a, const TransportOperator& b);

/// Closed form α ↦ ⟨α,δ_b⟩⟨δ_b,δ_a⟩δ_a − ⟨α,δ_a⟩⟨δ_a,δ_b⟩δ_b, evaluated on
/// each standard basis vector to give the matrix of [N_a, N_b].
Matrix commutator_closed_form(const PairingSpace& space, std::span<const Rational> delta_a,
                              std::span<const Rational> delta_b);

/// True iff every off-diagonal entry vanishes.
bool commutes_all(const InteractionMatrix& lambda);

/// One letter of a monodromy word: T_node, or its inverse.
struct WordLetter {
  std::size_t node = 0;  // 0-based
  bool inverse = false;
};

/// Converts signed 1-based indices (k → T_k, −k → T_k⁻¹). Throws
/// IndexOutOfRange on 0 or |k| > r.
std::vector<WordLetter> parse_signed_word(std::span<const long> letters, std::size_t r);

/// Matrix product of the letters in word order: [a, b] ↦ T_a·T_b. Acting on
/// a column vector the rightmost letter is applied first, so
/// transport_word(u ++ v) = transport_word(u)·transport_word(v).
Matrix transport_word(const CycleConfiguration& cfg, std::span<const WordLetter> word);

}  // namespace lightsector
