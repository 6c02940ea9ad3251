#include "lightsector/gluing.hpp"

#include "lightsector/errors.hpp"

namespace lightsector {

IncidenceDatum::IncidenceDatum(Matrix matrix_c, std::vector<std::string> labels)
    : matrix_(std::move(matrix_c)), labels_(std::move(labels)) {
  if (labels_.empty()) {
    for (std::size_t a = 0; a < matrix_.cols(); ++a) labels_.push_back("a" + std::to_string(a + 1));
  } else if (labels_.size() != matrix_.cols()) {
    throw DimensionMismatch("incidence has " + std::to_string(matrix_.cols()) + " columns but " +
                            std::to_string(labels_.size()) + " labels");
  }
}

RealizedSpace realized_space(const IncidenceDatum& inc) {
  RealizedSpace rs;
  rs.ambient_r = inc.node_count();
  rs.v_geom = column_space(inc.matrix());
  rs.is_full = rs.v_geom.dim() == rs.ambient_r;
  return rs;
}

RealizedSpace ambient_realized_space(std::size_t r) {
  return RealizedSpace{r, Subspace::full(r), true};
}

ExtensionVerdict classify_extension_side(const RealizedSpace& rs) {
  return rs.is_full ? ExtensionVerdict::Split : ExtensionVerdict::Interacting;
}

bool check_membership(const RealizedSpace& rs, std::span<const Rational> coeffs) {
  if (coeffs.size() != rs.ambient_r)
    throw DimensionMismatch("corrected class has " + std::to_string(coeffs.size()) +
                            " coefficients for " + std::to_string(rs.ambient_r) + " nodes");
  return subspace_contains(rs.v_geom, coeffs);
}

const char* to_string(ExtensionVerdict v) {
  return v == ExtensionVerdict::Split ? "Split" : "Interacting";
}

}  // namespace lightsector
