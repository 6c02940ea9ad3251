#pragma once

// Dense exact linear algebra over the rationals.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "lightsector/rational.hpp"

namespace lightsector {

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t k);
bool is_zero(std::span<const Rational> v);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Vector add(std::span<const Rational> a, std::span<const Rational> b);
Vector sub(std::span<const Rational> a, std::span<const Rational> b);
Vector scale(const Rational& s, std::span<const Rational> v);

/// Row-major dense matrix of rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  /// Columns given as vectors of length `rows`.
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols);
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  Vector column(std::size_t j) const;

  bool is_zero() const;
  Matrix transpose() const;
  Vector apply(std::span<const Rational> v) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, Matrix m);
  Matrix operator-() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  /// "[[0,1],[-1,0]]"
  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::string vector_str(std::span<const Rational> v);

/// Outer product a·bᵀ.
Matrix outer(std::span<const Rational> a, std::span<const Rational> b);

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row-echelon form by Gauss-Jordan elimination, pivoting on the
/// first nonzero entry at or below the current row.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// A linear subspace of ℚ^n stored by its canonical basis: the nonzero rows
/// of the reduced row-echelon form of any spanning set. Two subspaces are
/// equal iff their stored bases are identical.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  /// Pivot coordinate of each basis vector, strictly ascending.
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_dim_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace column_space(const Matrix& m);
Subspace kernel(const Matrix& m);

/// Throw DimensionMismatch when ambient dimensions differ.
bool subspace_equal(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& a, std::span<const Rational> v);
bool subspace_includes(const Subspace& outer, const Subspace& inner);
std::size_t quotient_dim(std::size_t ambient, const Subspace& r);

}  // namespace lightsector
