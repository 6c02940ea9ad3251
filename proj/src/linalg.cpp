#include "lightsector/linalg.hpp"

#include <sstream>
#include <utility>

#include "lightsector/errors.hpp"

namespace lightsector {

namespace {

void require_same_length(std::span<const Rational> a, std::span<const Rational> b,
                         const char* what) {
  if (a.size() != b.size())
    throw DimensionMismatch(std::string(what) + ": vector lengths " +
                            std::to_string(a.size()) + " and " + std::to_string(b.size()));
}

}  // namespace

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t k) {
  if (k >= n) throw IndexOutOfRange("unit vector index out of range");
  Vector v(n);
  v[k] = 1;
  return v;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  require_same_length(a, b, "dot");
  Rational acc;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  return acc;
}

Vector add(std::span<const Rational> a, std::span<const Rational> b) {
  require_same_length(a, b, "add");
  Vector out(a.begin(), a.end());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vector sub(std::span<const Rational> a, std::span<const Rational> b) {
  require_same_length(a, b, "sub");
  Vector out(a.begin(), a.end());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Vector scale(const Rational& s, std::span<const Rational> v) {
  Vector out(v.begin(), v.end());
  for (auto& x : out) x *= s;
  return out;
}

std::string vector_str(std::span<const Rational> v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i].str();
  }
  return out + "]";
}

// ---------------------------------------------------------------------------

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw DimensionMismatch("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

bool Matrix::is_zero() const { return lightsector::is_zero(data_); }

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vector Matrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = dot(row(i), v);
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatch("matrix difference shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  return out;
}

Matrix operator*(const Rational& s, Matrix m) {
  for (auto& x : m.data_) x *= s;
  return m;
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& x : out.data_) x = -x;
  return out;
}

std::string Matrix::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out += ',';
    out += vector_str(row(i));
  }
  return out + "]";
}

Matrix outer(std::span<const Rational> a, std::span<const Rational> b) {
  Matrix m(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * b[j];
  }
  return m;
}

// ---------------------------------------------------------------------------

RrefResult rref(const Matrix& m) {
  RrefResult res{m, 0, {}};
  Matrix& a = res.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t p = pivot_row;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != pivot_row)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(pivot_row, j));

    const Rational inv = Rational(1) / a(pivot_row, c);
    for (std::size_t j = c; j < cols; ++j)
      if (!a(pivot_row, j).is_zero()) a(pivot_row, j) *= inv;

    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pivot_row || a(i, c).is_zero()) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!a(pivot_row, j).is_zero()) a(i, j) -= f * a(pivot_row, j);
    }
    res.pivot_cols.push_back(c);
    ++pivot_row;
  }
  res.rank = pivot_row;
  return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

// ---------------------------------------------------------------------------

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  auto r = rref(Matrix::from_rows(ambient_dim, vectors));
  for (std::size_t i = 0; i < r.rank; ++i) {
    auto row = r.reduced.row(i);
    s.basis_.emplace_back(row.begin(), row.end());
  }
  s.pivots_ = std::move(r.pivot_cols);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<Vector> units;
  for (std::size_t k = 0; k < ambient_dim; ++k) units.push_back(unit_vector(ambient_dim, k));
  return span(ambient_dim, units);
}

Subspace column_space(const Matrix& m) {
  std::vector<Vector> cols;
  cols.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return Subspace::span(m.rows(), cols);
}

Subspace kernel(const Matrix& m) {
  const auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> gens;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivot_cols[i]] = -r.reduced(i, free);
    gens.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), gens);
}

bool subspace_equal(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch("subspaces live in different ambient spaces");
  return a == b;
}

bool subspace_contains(const Subspace& a, std::span<const Rational> v) {
  if (v.size() != a.ambient_dim())
    throw DimensionMismatch("vector length " + std::to_string(v.size()) +
                            " does not match ambient dimension " +
                            std::to_string(a.ambient_dim()));
  // Canonical basis has identity pivots, so the only candidate combination
  // uses v's own pivot coordinates as coefficients.
  Vector rest(v.begin(), v.end());
  for (std::size_t k = 0; k < a.dim(); ++k) {
    const Rational coeff = v[a.pivots()[k]];
    if (coeff.is_zero()) continue;
    const auto& b = a.basis()[k];
    for (std::size_t i = 0; i < rest.size(); ++i)
      if (!b[i].is_zero()) rest[i] -= coeff * b[i];
  }
  return is_zero(rest);
}

bool subspace_includes(const Subspace& outer, const Subspace& inner) {
  if (outer.ambient_dim() != inner.ambient_dim())
    throw DimensionMismatch("subspaces live in different ambient spaces");
  for (const auto& b : inner.basis())
    if (!subspace_contains(outer, b)) return false;
  return true;
}

std::size_t quotient_dim(std::size_t ambient, const Subspace& r) {
  if (r.ambient_dim() != ambient)
    throw DimensionMismatch("quotient of ambient dimension " + std::to_string(ambient) +
                            " by a subspace of ambient dimension " +
                            std::to_string(r.ambient_dim()));
  return ambient - r.dim();
}

}  // namespace lightsector
