#include "lightsector/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "lightsector/errors.hpp"

namespace lightsector {

namespace {

// Matrices larger than this are summarized in the text report.
constexpr std::size_t kTextMatrixLimit = 16;

std::string index_list(const std::vector<std::size_t>& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(v[k] + 1);
  }
  return out + "]";
}

std::string pair_list(const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::string out = "[";
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (k) out += ',';
    out += "[" + std::to_string(pairs[k].first + 1) + "," + std::to_string(pairs[k].second + 1) + "]";
  }
  return out + "]";
}

std::string cluster_list(const std::vector<std::vector<std::size_t>>& clusters) {
  std::string out;
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    if (c) out += ',';
    out += '{';
    for (std::size_t m = 0; m < clusters[c].size(); ++m) {
      if (m) out += ',';
      out += std::to_string(clusters[c][m] + 1);
    }
    out += '}';
  }
  return out.empty() ? "{}" : out;
}

std::string basis_str(const Subspace& s) {
  std::string out = "[";
  for (std::size_t k = 0; k < s.dim(); ++k) {
    if (k) out += ',';
    out += vector_str(s.basis()[k]);
  }
  return out + "]";
}

std::string collapse_str(const RelationCollapse& c) {
  return c.collapsed ? std::to_string(c.from) + "->" + std::to_string(c.to) : "none";
}

std::string extension_line(const Classification& c) {
  std::string out = to_string(c.extension_side);
  switch (c.extension_side) {
    case ExtensionSide::AmbientDefault:
      return out + " (no gluing data supplied)";
    case ExtensionSide::Split:
      return out + " (no collapse)";
    case ExtensionSide::Interacting:
      return out + " (collapsed " + std::to_string(c.relation_collapse.from) + "→" +
             std::to_string(c.relation_collapse.to) + ")";
  }
  return out;
}

std::string incidence_blocks_str(const LightSectorPackage& pkg) {
  if (!pkg.blocks_incidence) return "absent";
  if (const auto* part = std::get_if<BlockDecomposition>(&*pkg.blocks_incidence)) return part->str();
  return "not-block-adapted";
}

std::string separation_str(const LightSectorPackage& pkg) {
  if (!pkg.separation) return "absent";
  return pkg.block_classes() ? "holds" : "violated";
}

std::string verification_status(const ReportDocument& doc) {
  if (!doc.verification) return "not-applicable";
  return doc.verification->overall() ? "pass" : "fail";
}

void text_matrix(std::ostringstream& out, const Matrix& m, const std::string& indent) {
  if (m.rows() > kTextMatrixLimit) {
    out << indent << m.rows() << "x" << m.cols()
        << " matrix (omitted; see the machine report)\n";
    return;
  }
  if (m.rows() == 0) {
    out << indent << "(empty)\n";
    return;
  }
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) width = std::max(width, m(i, j).str().size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << indent << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string e = m(i, j).str();
      out << (j ? " " : "") << std::string(width - e.size(), ' ') << e;
    }
    out << "]\n";
  }
}

std::string render_machine(const ReportDocument& doc) {
  const auto& pkg = doc.package;
  const auto& cls = doc.classification;
  std::ostringstream out;
  auto field = [&out](const std::string& key, const std::string& value) {
    out << key << ": " << value << '\n';
  };
  std::vector<std::size_t> ranks;
  for (const auto& op : pkg.transport) ranks.push_back(op.nilpotent_rank());
  std::string rank_str = "[";
  for (std::size_t k = 0; k < ranks.size(); ++k) rank_str += (k ? "," : "") + std::to_string(ranks[k]);
  rank_str += "]";

  field("format", "lightsector-report/1");
  field("scenario", doc.scenario);
  field("nodes", std::to_string(pkg.node_count()));
  field("pairing_dim", std::to_string(pkg.space().dim()));
  field("word_convention", "[a,b] = T_a*T_b, rightmost letter acts first");
  field("flags.trivial_nodes", index_list(pkg.trivial_nodes));
  field("flags.rank_zero_nodes", index_list(pkg.rank_zero_nodes));

  field("extension.source", pkg.incidence ? "incidence" : "ambient-default");
  field("extension.ambient_dim", std::to_string(ambient_dim(pkg.node_count())));
  field("extension.realized_dim", std::to_string(pkg.realized.v_geom.dim()));
  field("extension.realized_basis", basis_str(pkg.realized.v_geom));
  field("extension.verdict", to_string(cls.extension_side));
  field("extension.corrected_class",
        pkg.corrected_class ? vector_str(pkg.corrected_class->coeffs) : "absent");
  field("extension.corrected_class_member",
        pkg.corrected_class ? (pkg.corrected_class->member ? "true" : "false") : "absent");

  field("transport.interaction", pkg.interaction.entries().str());
  field("transport.nilpotent_ranks", rank_str);
  field("transport.commutator_survey", pkg.commutators.computed ? "computed" : "skipped");
  field("transport.nonzero_commutators",
        pkg.commutators.computed ? pair_list(pkg.commutators.nonzero_pairs) : "absent");
  field("transport.closed_form_mismatches",
        pkg.commutators.computed ? pair_list(pkg.commutators.closed_form_mismatches) : "absent");
  field("transport.verdict", to_string(cls.transport_side));

  field("atom.verdict", to_string(cls.atom_side));
  field("atom.mixing_edges", pair_list(pkg.atom.mixing_edges));
  field("atom.mixing_clusters", cluster_list(pkg.atom.clusters));

  field("blocks.incidence", incidence_blocks_str(pkg));
  field("blocks.partition", pkg.partition ? pkg.partition->str() : "absent");
  field("blocks.discrepancy", pkg.partition_discrepancy ? "true" : "false");
  field("blocks.separation", separation_str(pkg));
  if (pkg.separation && !pkg.block_classes())
    field("blocks.separation_violation", std::get<SeparationViolation>(*pkg.separation).describe());
  field("blocks.count", pkg.partition ? std::to_string(pkg.partition->block_count()) : "absent");
  field("blocks.reduced", pkg.reduced ? pkg.reduced->entries().str() : "absent");
  field("blocks.atom_verdict",
        pkg.block_atom ? (pkg.block_atom->is_split ? "Split" : "NonSplit") : "absent");
  field("blocks.atom_clusters", pkg.block_atom ? cluster_list(pkg.block_atom->clusters) : "absent");

  field("classification.extension", to_string(cls.extension_side));
  field("classification.transport", to_string(cls.transport_side));
  field("classification.atom", to_string(cls.atom_side));
  field("classification.relation_collapse", collapse_str(cls.relation_collapse));
  field("classification.residual_interaction",
        cls.residual_interaction
            ? (cls.residual_interaction->verdict.is_split ? "Split" : "NonSplit")
            : "absent");

  field("verification", verification_status(doc));
  field("verification.checks",
        doc.verification ? std::to_string(doc.verification->checks().size()) : "0");
  field("verification.failures",
        doc.verification ? std::to_string(doc.verification->failures()) : "0");
  return out.str();
}

std::string render_text(const ReportDocument& doc) {
  const auto& pkg = doc.package;
  const auto& cls = doc.classification;
  const std::size_t r = pkg.node_count();
  std::ostringstream out;

  out << "Light-sector package: " << doc.scenario << "\n";
  out << "  nodes: " << r << ", pairing dimension: " << pkg.space().dim() << "\n";
  out << "  monodromy words: [a,b] = T_a*T_b (rightmost letter acts first)\n";

  out << "\n== Corrected-extension realization ==\n";
  out << "  ambient nodewise space: Q^" << ambient_dim(r) << "\n";
  if (pkg.incidence)
    out << "  realized space: dim " << pkg.realized.v_geom.dim() << ", basis "
        << basis_str(pkg.realized.v_geom) << "\n";
  else
    out << "  realized space: ambient (no gluing data supplied)\n";
  if (pkg.corrected_class)
    out << "  corrected class " << vector_str(pkg.corrected_class->coeffs) << ": "
        << (pkg.corrected_class->member ? "admissible" : "REJECTED (violates gluing)") << "\n";
  out << "  extension: " << extension_line(cls) << "\n";

  out << "\n== Transport realization ==\n";
  out << "  interaction matrix:\n";
  text_matrix(out, pkg.interaction.entries(), "    ");
  if (pkg.commutators.computed) {
    out << "  nonzero commutators [N_i,N_j]: ";
    if (pkg.commutators.nonzero_pairs.empty()) out << "none";
    for (std::size_t k = 0; k < pkg.commutators.nonzero_pairs.size(); ++k) {
      const auto& [i, j] = pkg.commutators.nonzero_pairs[k];
      out << (k ? ", " : "") << "(" << i + 1 << "," << j + 1 << ")";
    }
    out << "\n  closed-form commutator agreement: "
        << (pkg.commutators.closed_form_mismatches.empty() ? "all pairs" : "MISMATCH") << "\n";
  } else {
    out << "  pairwise commutator survey: skipped (size)\n";
  }
  out << "  transport: " << to_string(cls.transport_side) << "\n";

  out << "\n== Atom realization ==\n";
  out << "  atom sequence: " << to_string(cls.atom_side) << "\n";
  out << "  mixing clusters (artifact-derived): " << cluster_list(pkg.atom.clusters) << "\n";

  out << "\n== Block structure ==\n";
  out << "  relation blocks (incidence side): ";
  if (pkg.blocks_incidence && std::holds_alternative<NotBlockAdapted>(*pkg.blocks_incidence))
    out << "not block-adapted (" << std::get<NotBlockAdapted>(*pkg.blocks_incidence).reason << ")";
  else
    out << incidence_blocks_str(pkg);
  out << "\n  partition: " << (pkg.partition ? pkg.partition->str() : "absent") << "\n";
  if (pkg.partition_discrepancy)
    out << "  NOTE: partition differs from incidence blocks; partition used for transport side\n";
  out << "  block separation (transport side): ";
  if (!pkg.separation)
    out << "not attempted (no partition)\n";
  else if (pkg.block_classes())
    out << "holds\n";
  else
    out << "violated, " << std::get<SeparationViolation>(*pkg.separation).describe() << "\n";
  if (pkg.reduced) {
    out << "  reduced block matrix:\n";
    text_matrix(out, pkg.reduced->entries(), "    ");
  }

  out << "\n== Classification ==\n";
  out << "  extension: " << extension_line(cls) << "\n";
  out << "  transport: " << to_string(cls.transport_side) << "\n";
  out << "  atom: " << to_string(cls.atom_side) << "\n";
  out << "  relation collapse: " << collapse_str(cls.relation_collapse) << "\n";
  out << "  residual interaction: ";
  if (cls.residual_interaction)
    out << (cls.residual_interaction->verdict.is_split ? "Split" : "NonSplit") << ", block clusters "
        << cluster_list(cls.residual_interaction->verdict.clusters) << "\n";
  else
    out << "not determined (requires block separation)\n";

  out << "\n== Block-reduced structure checks ==\n";
  if (doc.verification)
    out << render_verification(*doc.verification);
  else
    out << "  not applicable: " << doc.verification_skipped << "\n";

  out << "\n== Flags ==\n";
  out << "  homologically trivial nodes: "
      << (pkg.trivial_nodes.empty() ? "none" : index_list(pkg.trivial_nodes)) << "\n";
  out << "  rank-zero transport nodes: "
      << (pkg.rank_zero_nodes.empty() ? "none" : index_list(pkg.rank_zero_nodes)) << "\n";
  return out.str();
}

}  // namespace

ReportDocument build_report(const ScenarioFile& scenario) {
  auto pkg = assemble_scenario(scenario);
  auto cls = classify(pkg);
  ReportDocument doc{scenario.name, std::move(pkg), std::move(cls), std::nullopt, {}};
  try {
    doc.verification = verify_block_reduced_structure(doc.package);
  } catch (const BlockSeparationRequired& e) {
    doc.verification_skipped = e.what();
  }
  return doc;
}

std::string render_verification(const VerificationReport& report) {
  std::map<std::string, std::pair<std::size_t, std::size_t>> items;  // item -> (total, failed)
  std::ostringstream out;
  for (const auto& c : report.checks()) {
    const std::string item = c.name.rfind("(", 0) == 0 ? c.name.substr(0, c.name.find(')') + 1) : "";
    auto& [total, failed] = items[item];
    ++total;
    if (!c.pass) {
      ++failed;
      out << "  FAIL " << c.name << ": expected " << c.expected << ", got " << c.actual << "\n";
    }
  }
  for (const auto& [item, counts] : items)
    out << "  item " << (item.empty() ? "-" : item) << ": " << counts.first - counts.second << "/"
        << counts.first << " checks pass\n";
  out << "  overall: " << (report.overall() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string render_report(const ReportDocument& doc, ReportFormat format) {
  return format == ReportFormat::Machine ? render_machine(doc) : render_text(doc);
}

}  // namespace lightsector
