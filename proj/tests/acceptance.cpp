// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lightsector/errors.hpp"
#include "lightsector/generators.hpp"
#include "lightsector/package.hpp"
#include "lightsector/report.hpp"
#include "lightsector/scenario.hpp"
#include "oracles.hpp"

using namespace lightsector;
namespace fs = std::filesystem;

namespace {

struct Failure {
  std::string what;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure{what};
}

std::vector<std::vector<std::size_t>> clusters(std::initializer_list<std::vector<std::size_t>> c) {
  return c;
}

// Closed-form commutator on a basis vector, computed from the pairing alone.
Vector closed_form_on(const Matrix& gram, const Vector& da, const Vector& db, const Vector& alpha) {
  const Rational ab = oracle::bilinear(gram, da, db);
  const Rational ba = oracle::bilinear(gram, db, da);
  const Vector left = scale(oracle::bilinear(gram, alpha, db) * ba, da);
  const Vector right = scale(oracle::bilinear(gram, alpha, da) * ab, db);
  return sub(left, right);
}

void a1xa1_regression() {
  const auto pkg = assemble_scenario(builtin_a1xa1());
  require(pkg.interaction.entries() == Matrix::zero(2, 2), "Lambda is not the 2x2 zero matrix");
  require(pkg.realized.is_full && pkg.realized.v_geom.dim() == 2, "E_geom != E_node");
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      require(commutator(pkg.transport[i], pkg.transport[j]).is_zero(), "nonzero commutator");
  require(pkg.atom.is_split && pkg.atom.clusters == clusters({{0}, {1}}), "atom not split");
  const auto c = classify(pkg);
  require(c.extension_side == ExtensionSide::Split, "extension side not Split");
  require(c.transport_side == TransportSide::Commuting, "transport side not Commuting");
  require(c.atom_side == AtomSide::Split, "atom side not Split");
  require(!c.relation_collapse.collapsed, "unexpected collapse");
}

void a2_regression() {
  const auto pkg = assemble_scenario(builtin_a2(Rational(1)));
  require(pkg.interaction.entries() == (Matrix{{0, 1}, {-1, 0}}), "Lambda mismatch");
  const Matrix comm = commutator(pkg.transport[0], pkg.transport[1]);
  require(!comm.is_zero(), "[N1,N2] vanishes");
  const auto& gram = pkg.space().gram();
  for (std::size_t k = 0; k < 2; ++k)
    require(comm.column(k) ==
                closed_form_on(gram, pkg.cycles.cycle(0), pkg.cycles.cycle(1), unit_vector(2, k)),
            "commutator differs from closed form on e" + std::to_string(k + 1));
  require(pkg.realized.v_geom.dim() == 1, "dim E_geom != 1");
  require(pkg.realized.v_geom.basis() == std::vector<Vector>{{1, 1}}, "basis is not (1,1)");
  for (long c = -3; c <= 3; ++c)
    require(check_membership(pkg.realized, Vector{Rational(c, 2), Rational(c, 2)}),
            "(c,c) rejected");
  require(!check_membership(pkg.realized, Vector{1, 0}), "(1,0) accepted");
  require(!pkg.atom.is_split && pkg.atom.clusters == clusters({{0, 1}}), "atom verdict");
  const auto c = classify(pkg);
  require(c.extension_side == ExtensionSide::Interacting &&
              c.transport_side == TransportSide::Noncommuting && c.atom_side == AtomSide::NonSplit,
          "classification is not interacting on all three sides");
}

void three_node_regression() {
  const auto pkg = assemble_scenario(builtin_three_node(Rational(1)));
  require(pkg.interaction.entries() == (Matrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}),
          "Lambda mismatch");
  require(pkg.blocks_incidence &&
              std::holds_alternative<BlockDecomposition>(*pkg.blocks_incidence) &&
              std::get<BlockDecomposition>(*pkg.blocks_incidence) ==
                  BlockDecomposition(3, {{0, 1}, {2}}),
          "incidence blocks are not {1,2},{3}");
  const auto c = classify(pkg);
  require(c.relation_collapse.collapsed && c.relation_collapse.from == 3 &&
              c.relation_collapse.to == 2,
          "collapse is not 3->2");
  require(pkg.atom.clusters == clusters({{0, 1}, {2}}), "clusters are not {1,2},{3}");
  const auto sep = check_block_separation(pkg.cycles, BlockDecomposition(3, {{0, 1}, {2}}));
  require(std::holds_alternative<SeparationViolation>(sep), "block separation did not fail");
}

void block_structure_suite() {
  gen::Rng rng(606);
  for (int trial = 0; trial < 500; ++trial) {
    const auto inst = gen::block_separated(rng, 12, 6);
    const auto pkg = assemble(inst.space, inst.cycles, inst.incidence, inst.partition);
    const auto report = verify_block_reduced_structure(pkg);
    bool seen[4] = {false, false, false, false};
    for (const auto& check : report.checks()) {
      require(check.pass, "instance " + std::to_string(trial) + ": " + check.name);
      if (check.name.size() > 3 && check.name[0] == '(' && check.name[2] == ')')
        seen[check.name[1] - '1'] = true;
    }
    for (int k = 0; k < 4; ++k)
      require(seen[k], "instance " + std::to_string(trial) + ": item missing");
  }
}

void transport_fuzz() {
  gen::Rng rng(505);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const auto space = gen::skew_space(rng, n);
    const Vector delta = gen::sparse_vector(rng, n, 0.25);
    const auto op = transport_of_class(space, delta);
    const Matrix id = Matrix::identity(n);
    require((op.n_matrix * op.n_matrix).is_zero(), "N^2 != 0");
    require(op.nilpotent_rank() <= 1, "rank N > 1");
    require((id + op.n_matrix) * (id - op.n_matrix) == id, "(I+N)(I-N) != I");
    require(op.t_matrix * op.inverse() == id, "T * inverse != I");
    for (int k = 0; k < 3; ++k) {
      const Vector alpha = gen::vector(rng, n);
      require(op.n_matrix.apply(alpha) == scale(oracle::bilinear(space.gram(), alpha, delta), delta),
              "N(alpha) != <alpha,delta> delta");
    }
  }
}

void criterion_equivalences() {
  const auto space = PairingSpace::standard_symplectic(2);
  const std::vector<Vector> pool = {{0, 0, 0, 0},  {1, 0, 0, 0}, {0, 1, 0, 0},  {0, 0, 1, 0},
                                    {0, 0, 0, 1},  {1, 0, 1, 0}, {0, 1, 0, -1}, {1, 1, 0, 0},
                                    {2, 0, 0, 0}};
  std::size_t configs = 0;
  for (std::size_t r = 0; r <= 4; ++r) {
    std::vector<std::size_t> idx(r, 0);
    while (true) {
      std::vector<Vector> cycles;
      for (auto k : idx) cycles.push_back(pool[k]);
      const CycleConfiguration cfg(space, cycles);
      const auto lambda = interaction_matrix(cfg);
      const auto ops = all_operators(cfg);
      bool pairwise = true;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
          pairwise = pairwise && commutator(ops[i], ops[j]).is_zero();
      const auto atom = atom_splitting(lambda);
      bool singletons = true;
      for (const auto& c : atom.clusters) singletons = singletons && c.size() == 1;
      const bool crit = commutes_all(lambda);
      require(crit == pairwise && crit == atom.is_split && crit == singletons,
              "equivalence broken at configuration " + std::to_string(configs));
      ++configs;
      std::size_t pos = 0;
      while (pos < r && ++idx[pos] == pool.size()) idx[pos++] = 0;
      if (pos == r) break;
    }
  }
}

void quintic_scale() {
  const auto s = builtin_quintic_orbits({25, 25, 25, 25, 25});
  const auto pkg = assemble_scenario(s);
  require(pkg.node_count() == 125, "r != 125");
  const BlockClasses* bc = pkg.block_classes();
  require(bc != nullptr, "block separation failed");
  require(pkg.partition->block_count() == 5, "|B| != 5");
  require(quotient_dim(125, relation_lattice_from_blocks(*pkg.partition)) == 5,
          "quotient dim != 5");
  for (std::size_t i = 0; i < 125; ++i)
    for (std::size_t j = 0; j < 125; ++j) {
      const std::size_t b = pkg.partition->block_of(i), c = pkg.partition->block_of(j);
      require(pkg.interaction(i, j) == (*pkg.reduced)(b, c),
              "lambda(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") != mu");
    }
  require(verify_block_reduced_structure(pkg).overall(), "verification failed");
}

void determinism_round_trip() {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(LIGHTSECTOR_SCENARIO_DIR))
    if (e.path().extension() == ".scenario") files.push_back(e.path());
  require(!files.empty(), "no shipped scenarios found");
  for (const auto& f : files) {
    std::ifstream in(f, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    const auto s = parse_scenario(buf.str());
    require(parse_scenario(serialize_scenario(s)) == s, f.filename().string() + ": round trip");
    const auto first = render_report(build_report(s), ReportFormat::Machine);
    const auto second = render_report(build_report(parse_scenario(buf.str())), ReportFormat::Machine);
    require(first == second, f.filename().string() + ": machine report differs between runs");
  }
}

struct Criterion {
  const char* name;
  std::function<void()> run;
  double limit_seconds;  // 0: untimed
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"A1xA1 regression", a1xa1_regression, 1},
      {"A2 regression", a2_regression, 1},
      {"three-node regression", three_node_regression, 1},
      {"block-reduced structure on 500 block-separated configurations", block_structure_suite,
       30},
      {"transport invariants on 1000 random instances", transport_fuzz, 10},
      {"criterion equivalences on all r<=4 pool configurations", criterion_equivalences, 0},
      {"quintic orbit model, r=125, |B|=5", quintic_scale, 10},
      {"round trip and deterministic machine reports", determinism_round_trip, 0},
  };

  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto& c = criteria[k];
    std::string detail;
    bool pass = true;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run();
    } catch (const Failure& f) {
      pass = false;
      detail = f.what;
    } catch (const std::exception& e) {
      pass = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (pass && c.limit_seconds > 0 && secs >= c.limit_seconds) {
      pass = false;
      detail = "exceeded time limit";
    }
    all = all && pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << "criterion " << k + 1 << ": " << (pass ? "PASS" : "FAIL") << "  " << c.name << "  ("
         << secs << " s";
    if (c.limit_seconds > 0) line << ", limit " << c.limit_seconds << " s";
    line << ")";
    if (!detail.empty()) line << "  " << detail;
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
