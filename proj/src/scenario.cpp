#include "lightsector/scenario.hpp"

#include <charconv>
#include <set>
#include <sstream>

#include "lightsector/errors.hpp"

namespace lightsector {

namespace {

struct Line {
  std::size_t number = 0;  // 1-based
  std::vector<std::string> tokens;
  std::string rest;  // text after the keyword, trimmed
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) {
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      ++number;
      const std::string body = trim(text.substr(pos, end - pos));
      if (!body.empty() && body.front() != '#') {
        Line line;
        line.number = number;
        line.tokens = split_ws(body);
        const auto sep = body.find_first_of(" \t");
        line.rest = sep == std::string::npos ? std::string() : trim(body.substr(sep));
        lines_.push_back(std::move(line));
      }
      pos = end + 1;
    }
  }

  bool done() const { return next_ >= lines_.size(); }
  const Line& next() { return lines_[next_++]; }

 private:
  std::vector<Line> lines_;
  std::size_t next_ = 0;
};

std::size_t parse_count(const std::string& tok, std::size_t line, const std::string& field) {
  std::size_t value = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError(line, field, "expected a non-negative integer, got '" + tok + "'");
  return value;
}

Rational parse_entry(const std::string& tok, std::size_t line, const std::string& field) {
  try {
    return Rational::parse(tok);
  } catch (const ParseError& e) {
    throw ParseError(line, field, e.what());
  }
}

Vector parse_row(const std::vector<std::string>& tokens, std::size_t from, std::size_t expected,
                 std::size_t line, const std::string& field) {
  if (tokens.size() - from != expected)
    throw ParseError(line, field,
                     "expected " + std::to_string(expected) + " entries, got " +
                         std::to_string(tokens.size() - from));
  Vector row;
  row.reserve(expected);
  for (std::size_t k = from; k < tokens.size(); ++k) row.push_back(parse_entry(tokens[k], line, field));
  return row;
}

/// Reads `rows` row lines of `cols` rationals; zero-column blocks have no lines.
std::vector<Vector> read_rows(LineReader& in, std::size_t rows, std::size_t cols,
                              std::size_t header_line, const std::string& field,
                              std::vector<std::size_t>* line_numbers = nullptr) {
  std::vector<Vector> out(rows, Vector{});
  if (cols == 0) return out;
  for (std::size_t i = 0; i < rows; ++i) {
    if (in.done())
      throw ParseError(header_line, field,
                       "expected " + std::to_string(rows) + " rows, found " + std::to_string(i));
    const Line& l = in.next();
    out[i] = parse_row(l.tokens, 0, cols, l.number, field);
    if (line_numbers) line_numbers->push_back(l.number);
  }
  return out;
}

void expect_args(const Line& l, std::size_t n, const std::string& field) {
  if (l.tokens.size() != n + 1)
    throw ParseError(l.number, field,
                     "expected " + std::to_string(n) + " argument(s), got " +
                         std::to_string(l.tokens.size() - 1));
}

std::string join_row(std::span<const Rational> row) {
  std::string out;
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (k) out += ' ';
    out += row[k].str();
  }
  return out;
}

}  // namespace

ScenarioFile parse_scenario(std::string_view text, const ParseOptions& options) {
  LineReader in(text);
  ScenarioFile s;
  std::set<std::string> seen;
  std::optional<std::size_t> dim;
  std::vector<std::size_t> gram_rows;
  std::size_t incidence_line = 0, labels_line = 0, partition_line = 0,
              class_line = 0;
  std::optional<std::vector<std::vector<std::size_t>>> partition_1based;

  while (!in.done()) {
    const Line& l = in.next();
    const std::string& key = l.tokens.front();
    static const std::set<std::string> known = {
        "format_version", "name",      "notes",           "dim",  "gram", "cycles",
        "incidence",      "incidence_labels", "partition", "corrected_class"};
    if (!known.contains(key)) {
      if (options.lax) continue;
      throw ParseError(l.number, key, "unknown field");
    }
    if (!seen.insert(key).second) throw ParseError(l.number, key, "duplicate field");

    if (key == "format_version") {
      expect_args(l, 1, key);
      if (l.tokens[1] != std::to_string(kScenarioFormatVersion))
        throw ParseError(l.number, key, "unsupported format version '" + l.tokens[1] + "'");
    } else if (key == "name") {
      if (l.rest.empty()) throw ParseError(l.number, key, "empty name");
      s.name = l.rest;
    } else if (key == "notes") {
      s.notes = l.rest;
    } else if (key == "dim") {
      expect_args(l, 1, key);
      dim = parse_count(l.tokens[1], l.number, key);
      s.dim = *dim;
    } else if (key == "gram") {
      expect_args(l, 0, key);
      if (!dim) throw ParseError(l.number, key, "'dim' must precede 'gram'");
      s.gram = Matrix::from_rows(*dim, read_rows(in, *dim, *dim, l.number, key, &gram_rows));
    } else if (key == "cycles") {
      expect_args(l, 1, key);
      if (!dim) throw ParseError(l.number, key, "'dim' must precede 'cycles'");
      const std::size_t r = parse_count(l.tokens[1], l.number, key);
      s.cycles = read_rows(in, r, *dim, l.number, key);
    } else if (key == "incidence") {
      expect_args(l, 2, key);
      incidence_line = l.number;
      const std::size_t rows = parse_count(l.tokens[1], l.number, key);
      const std::size_t cols = parse_count(l.tokens[2], l.number, key);
      auto grid = read_rows(in, rows, cols, l.number, key);
      s.incidence = cols == 0 ? Matrix(rows, 0) : Matrix::from_rows(cols, grid);
    } else if (key == "incidence_labels") {
      labels_line = l.number;
      s.incidence_labels.assign(l.tokens.begin() + 1, l.tokens.end());
    } else if (key == "partition") {
      expect_args(l, 1, key);
      partition_line = l.number;
      const std::size_t blocks = parse_count(l.tokens[1], l.number, key);
      std::vector<std::vector<std::size_t>> parts;
      for (std::size_t b = 0; b < blocks; ++b) {
        if (in.done())
          throw ParseError(l.number, key,
                           "expected " + std::to_string(blocks) + " blocks, found " +
                               std::to_string(b));
        const Line& row = in.next();
        std::vector<std::size_t> members;
        for (const auto& tok : row.tokens) {
          const std::size_t k = parse_count(tok, row.number, key);
          if (k == 0) throw ParseError(row.number, key, "node indices are 1-based");
          members.push_back(k);
        }
        parts.push_back(std::move(members));
      }
      partition_1based = std::move(parts);
    } else if (key == "corrected_class") {
      class_line = l.number;
      s.corrected_class = parse_row(l.tokens, 1, l.tokens.size() - 1, l.number, key);
    }
  }

  for (const char* required : {"format_version", "name", "dim", "gram", "cycles"})
    if (!seen.contains(required)) throw ParseError(0, required, "missing required field");

  try {
    (void)PairingSpace::make(s.gram);
  } catch (const NotSkewSymmetric& e) {
    throw ParseError(gram_rows.at(e.row()), "gram", e.what());
  }

  const std::size_t r = s.cycles.size();
  if (s.incidence && s.incidence->rows() != r)
    throw ParseError(incidence_line, "incidence",
                     "has " + std::to_string(s.incidence->rows()) + " rows but there are " +
                         std::to_string(r) + " cycles");
  if (!s.incidence_labels.empty()) {
    if (!s.incidence)
      throw ParseError(labels_line, "incidence_labels", "labels given without incidence");
    if (s.incidence_labels.size() != s.incidence->cols())
      throw ParseError(labels_line, "incidence_labels",
                       "expected " + std::to_string(s.incidence->cols()) + " labels");
  }
  if (partition_1based) {
    std::vector<std::vector<std::size_t>> zero_based;
    for (const auto& block : *partition_1based) {
      std::vector<std::size_t> members;
      for (std::size_t k : block) members.push_back(k - 1);
      zero_based.push_back(std::move(members));
    }
    try {
      (void)BlockDecomposition(r, zero_based);
    } catch (const InvalidPartition& e) {
      throw ParseError(partition_line, "partition", e.what());
    }
    s.partition = std::move(zero_based);
  }
  if (s.corrected_class && s.corrected_class->size() != r)
    throw ParseError(class_line, "corrected_class",
                     "expected " + std::to_string(r) + " coefficients, got " +
                         std::to_string(s.corrected_class->size()));
  return s;
}

std::string serialize_scenario(const ScenarioFile& s) {
  std::ostringstream out;
  out << "format_version " << s.format_version << '\n';
  out << "name " << s.name << '\n';
  if (s.notes) out << "notes " << *s.notes << '\n';
  out << "dim " << s.dim << '\n';
  out << "gram\n";
  if (s.dim > 0)
    for (std::size_t i = 0; i < s.gram.rows(); ++i) out << "  " << join_row(s.gram.row(i)) << '\n';
  out << "cycles " << s.cycles.size() << '\n';
  if (s.dim > 0)
    for (const auto& c : s.cycles) out << "  " << join_row(c) << '\n';
  if (s.incidence) {
    out << "incidence " << s.incidence->rows() << ' ' << s.incidence->cols() << '\n';
    if (s.incidence->cols() > 0)
      for (std::size_t i = 0; i < s.incidence->rows(); ++i)
        out << "  " << join_row(s.incidence->row(i)) << '\n';
    if (!s.incidence_labels.empty()) {
      out << "incidence_labels";
      for (const auto& label : s.incidence_labels) out << ' ' << label;
      out << '\n';
    }
  }
  if (s.partition) {
    out << "partition " << s.partition->size() << '\n';
    for (const auto& block : *s.partition) {
      out << " ";
      for (std::size_t k : block) out << ' ' << (k + 1);
      out << '\n';
    }
  }
  if (s.corrected_class) {
    out << "corrected_class";
    if (!s.corrected_class->empty()) out << ' ' << join_row(*s.corrected_class);
    out << '\n';
  }
  return out.str();
}

LightSectorPackage assemble_scenario(const ScenarioFile& s) {
  std::optional<IncidenceDatum> incidence;
  if (s.incidence) incidence.emplace(*s.incidence, s.incidence_labels);
  std::optional<BlockDecomposition> partition;
  if (s.partition) partition.emplace(s.cycles.size(), *s.partition);
  return assemble(PairingSpace::make(s.gram), s.cycles, std::move(incidence),
                  std::move(partition), s.corrected_class);
}

// ---------------------------------------------------------------------------

namespace {

ScenarioFile symplectic_scenario(std::string name, std::size_t g) {
  ScenarioFile s;
  s.name = std::move(name);
  s.dim = 2 * g;
  s.gram = PairingSpace::standard_symplectic(g).gram();
  return s;
}

}  // namespace

ScenarioFile builtin_a1xa1() {
  auto s = symplectic_scenario("a1xa1", 2);
  s.notes = "split two-node model: orthogonal cycles, trivial incidence";
  s.cycles = {unit_vector(4, 0), unit_vector(4, 2)};
  s.incidence = Matrix::identity(2);
  s.partition = {{{0}, {1}}};
  return s;
}

ScenarioFile builtin_a2(const Rational& lambda) {
  if (lambda.is_zero()) throw InvalidParams("a2 requires a nonzero lambda12");
  auto s = symplectic_scenario("a2", 1);
  s.notes = "interacting two-node model, lambda12 = " + lambda.str();
  s.cycles = {unit_vector(2, 0), scale(lambda, unit_vector(2, 1))};
  s.incidence = Matrix{{1}, {1}};
  return s;
}

ScenarioFile builtin_three_node(const Rational& lambda) {
  if (lambda.is_zero()) throw InvalidParams("three_node requires a nonzero lambda12");
  auto s = symplectic_scenario("three_node", 2);
  s.notes = "three-node block-incidence model, lambda12 = " + lambda.str();
  s.cycles = {unit_vector(4, 0), scale(lambda, unit_vector(4, 1)), unit_vector(4, 2)};
  s.incidence = Matrix{{1, 0}, {1, 0}, {0, 1}};
  s.partition = {{{0, 1}, {2}}};
  return s;
}

ScenarioFile builtin_quintic_orbits(const std::vector<std::size_t>& orbit_sizes) {
  std::size_t total = 0;
  for (std::size_t n : orbit_sizes) {
    if (n == 0) throw InvalidParams("orbit sizes must be positive");
    total += n;
  }
  if (total != kQuinticNodeCount)
    throw InvalidParams("orbit sizes sum to " + std::to_string(total) + ", expected " +
                        std::to_string(kQuinticNodeCount));

  auto s = symplectic_scenario("quintic_orbits", 1);
  s.notes = "symmetry-orbit model configuration with 125 nodes; block classes are model data";
  const std::size_t b = orbit_sizes.size();
  s.incidence = Matrix(total, b);
  s.partition.emplace();
  std::size_t node = 0;
  for (std::size_t beta = 0; beta < b; ++beta) {
    const Vector v{Rational(1), Rational(static_cast<long>(beta))};
    std::vector<std::size_t> members;
    for (std::size_t m = 0; m < orbit_sizes[beta]; ++m, ++node) {
      s.cycles.push_back(v);
      (*s.incidence)(node, beta) = 1;
      members.push_back(node);
    }
    s.partition->push_back(std::move(members));
    s.incidence_labels.push_back("orbit" + std::to_string(beta + 1));
  }
  return s;
}

ScenarioFile builtin_scenario(std::string_view name) {
  if (name == "a1xa1") return builtin_a1xa1();
  if (name == "a2") return builtin_a2();
  if (name == "three_node") return builtin_three_node();
  if (name == "quintic_orbits") return builtin_quintic_orbits();
  throw InvalidParams("unknown builtin scenario '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() { return {"a1xa1", "a2", "three_node", "quintic_orbits"}; }

}  // namespace lightsector
