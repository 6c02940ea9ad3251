#pragma once

// Scenario files: the line-oriented text format that carries a pairing,
// vanishing cycles and optional gluing data into the package.
//
//   format_version 1
//   name a2
//   notes free text to end of line
//   dim 2
//   gram
//     0 1
//     -1 0
//   cycles 2
//     1 0
//     0 1
//   incidence 2 1
//     1
//     1
//   incidence_labels A
//   partition 1
//     1 2
//   corrected_class 3 3
//
// Lines whose first non-blank character is '#' are comments. Node indices in
// `partition` are 1-based. A block with zero columns has no row lines.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lightsector/linalg.hpp"
#include "lightsector/package.hpp"

namespace lightsector {

inline constexpr int kScenarioFormatVersion = 1;

struct ScenarioFile {
  int format_version = kScenarioFormatVersion;
  std::string name;
  std::size_t dim = 0;
  Matrix gram;
  std::vector<Vector> cycles;
  std::optional<Matrix> incidence;
  std::vector<std::string> incidence_labels;  // empty: default labels
  std::optional<std::vector<std::vector<std::size_t>>> partition;  // 0-based
  std::optional<Vector> corrected_class;
  std::optional<std::string> notes;

  friend bool operator==(const ScenarioFile&, const ScenarioFile&) = default;
};

struct ParseOptions {
  /// Skip unknown fields instead of rejecting them.
  bool lax = false;
};

/// Throws ParseError naming the line and field of the first problem.
ScenarioFile parse_scenario(std::string_view text, const ParseOptions& options = {});

/// Canonical text form; parse_scenario(serialize_scenario(s)) == s.
std::string serialize_scenario(const ScenarioFile& s);

LightSectorPackage assemble_scenario(const ScenarioFile& s);

// Built-in model configurations.

/// Split two-node model: orthogonal cycles, identity incidence.
ScenarioFile builtin_a1xa1();
/// Interacting two-node model with λ₁₂ = lambda (must be nonzero):
/// cycles e₁ and lambda·e₂ in the rank-2 symplectic space, incidence (1,1)ᵀ.
ScenarioFile builtin_a2(const Rational& lambda = Rational(1));
/// Three-node block-incidence model: blocks {1,2},{3} on the incidence side,
/// λ₁₂ = lambda, λ₁₃ = λ₂₃ = 0.
ScenarioFile builtin_three_node(const Rational& lambda = Rational(1));
/// Symmetry-orbit model with 125 nodes: orbit β is a contiguous run of nodes
/// sharing the class (1, β), β = 0..B−1, in the rank-2 symplectic space, so μ_βγ = γ − β.
/// Sizes must be positive and sum to 125.
ScenarioFile builtin_quintic_orbits(const std::vector<std::size_t>& orbit_sizes = {25, 25, 25,
                                                                                   25, 25});

inline constexpr std::size_t kQuinticNodeCount = 125;

/// Looks up a builtin by name ("a1xa1", "a2", "three_node", "quintic_orbits")
/// with defaults; throws InvalidParams for unknown names.
ScenarioFile builtin_scenario(std::string_view name);
std::vector<std::string> builtin_names();

}  // namespace lightsector
