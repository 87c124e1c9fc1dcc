#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "hsect/rational.hpp"

namespace hsect {

/// Dense row-major matrix over the rationals.
///
/// Shapes with zero rows or zero columns are legal and used throughout: a map
/// into or out of a zero-dimensional multiplicity space is an empty matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  bool operator==(const Matrix& other) const = default;

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(const Rational& factor) const;
  Matrix transposed() const;

  /// Stacks `lower` below this matrix; column counts must agree.
  Matrix vstack(const Matrix& lower) const;
  /// Places `right` to the right of this matrix; row counts must agree.
  Matrix hstack(const Matrix& right) const;
  /// Columns [first, first + count).
  Matrix column_block(std::size_t first, std::size_t count) const;

  /// Rank by fraction-free (Bareiss) elimination on an integer rescaling.
  std::size_t rank() const;

  /// Reduced row echelon form over Q; `pivots` receives the pivot columns.
  Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;

  /// Basis of the right kernel, one vector per column (cols() x nullity).
  Matrix kernel() const;

  /// Basis of the column space in reduced column echelon form (rows() x rank).
  Matrix column_basis() const;

  /// Solves this * X = rhs exactly. Throws std::domain_error when the system
  /// is inconsistent. Free variables are set to zero.
  Matrix solve(const Matrix& rhs) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Block diagonal sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// Dimension of the intersection of the column spans of `a` and `b` (both
/// subspaces of the same ambient space).
std::size_t intersection_dimension(const Matrix& a, const Matrix& b);

}  // namespace hsect
