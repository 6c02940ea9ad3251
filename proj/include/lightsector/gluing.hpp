#pragma once

// Corrected-extension side: the nodewise ambient space ℚ^r, the subspace
// realized by the cycle-node incidence map, and membership of corrected
// class coefficient vectors.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lightsector/linalg.hpp"

namespace lightsector {

/// Incidence map ℚ^A → ℚ^r; column a is the image of the labeled generator a.
class IncidenceDatum {
 public:
  /// Labels default to "a1".."aN" when empty; otherwise one per column.
  IncidenceDatum(Matrix matrix_c, std::vector<std::string> labels = {});

  std::size_t node_count() const { return matrix_.rows(); }
  std::size_t label_count() const { return matrix_.cols(); }
  const Matrix& matrix() const { return matrix_; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  Matrix matrix_;
  std::vector<std::string> labels_;
};

struct RealizedSpace {
  std::size_t ambient_r = 0;
  Subspace v_geom{0};
  bool is_full = false;
};

enum class ExtensionVerdict { Split, Interacting };

constexpr std::size_t ambient_dim(std::size_t r) { return r; }

RealizedSpace realized_space(const IncidenceDatum& inc);
/// The naive free case V_geom = ℚ^r, used when no incidence is supplied.
RealizedSpace ambient_realized_space(std::size_t r);

ExtensionVerdict classify_extension_side(const RealizedSpace& rs);

/// Throws DimensionMismatch when the coefficient count differs from r.
bool check_membership(const RealizedSpace& rs, std::span<const Rational> coeffs);

const char* to_string(ExtensionVerdict v);

}  // namespace lightsector
