#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "lightsector/linalg.hpp"

namespace lightsector {

/// A rational coefficient space carrying a skew-symmetric bilinear pairing
/// ⟨a, b⟩ = aᵀ·G·b. Nondegeneracy is not required.
class PairingSpace {
 public:
  /// Throws NotSquare, or NotSkewSymmetric naming the first (i, j) in
  /// row-major order with G(j, i) ≠ −G(i, j).
  static PairingSpace make(Matrix gram);
  /// Block-diagonal sum of g copies of [[0,1],[-1,0]].
  static PairingSpace standard_symplectic(std::size_t g);

  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }

  Rational pair(std::span<const Rational> a, std::span<const Rational> b) const;
  /// The functional α ↦ ⟨α, v⟩ as a coefficient row, i.e. G·v.
  Vector pairing_functional(std::span<const Rational> v) const;

  friend bool operator==(const PairingSpace&, const PairingSpace&) = default;

 private:
  explicit PairingSpace(Matrix gram) : gram_(std::move(gram)) {}
  Matrix gram_;
};

/// Ordered vanishing-cycle vectors δ_1..δ_r in a pairing space.
class CycleConfiguration {
 public:
  /// Throws DimensionMismatch if any cycle length differs from space.dim().
  CycleConfiguration(PairingSpace space, std::vector<Vector> cycles);

  const PairingSpace& space() const { return space_; }
  std::size_t node_count() const { return cycles_.size(); }
  const std::vector<Vector>& cycles() const { return cycles_; }
  const Vector& cycle(std::size_t i) const;

  /// 0-based indices of nodes with δ_i = 0 (homologically trivial nodes).
  std::vector<std::size_t> trivial_nodes() const;

 private:
  PairingSpace space_;
  std::vector<Vector> cycles_;
};

}  // namespace lightsector
