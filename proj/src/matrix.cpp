#include "hsect/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace hsect {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw std::invalid_argument("ragged matrix literal");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw std::invalid_argument("matrix product shape mismatch");
  }
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out(i, j) += a * rhs(k, j);
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw std::invalid_argument("matrix sum shape mismatch");
  }
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw std::invalid_argument("matrix difference shape mismatch");
  }
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

Matrix Matrix::scaled(const Rational& factor) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= factor;
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Matrix Matrix::vstack(const Matrix& lower) const {
  if (cols_ != lower.cols_) {
    throw std::invalid_argument("vstack column mismatch");
  }
  Matrix out(rows_ + lower.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(lower.data_.begin(), lower.data_.end(), out.data_.begin() + data_.size());
  return out;
}

Matrix Matrix::hstack(const Matrix& right) const {
  if (rows_ != right.rows_) {
    throw std::invalid_argument("hstack row mismatch");
  }
  Matrix out(rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) out(i, cols_ + j) = right(i, j);
  }
  return out;
}

Matrix Matrix::column_block(std::size_t first, std::size_t count) const {
  if (first + count > cols_) {
    throw std::out_of_range("column block out of range");
  }
  Matrix out(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
  return out;
}

std::size_t Matrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;

  // Clear denominators row by row so elimination runs over Z.
  std::vector<std::vector<Integer>> a(rows_, std::vector<Integer>(cols_));
  for (std::size_t i = 0; i < rows_; ++i) {
    Integer lcm = 1;
    for (std::size_t j = 0; j < cols_; ++j) {
      lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator((*this)(i, j)));
    }
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& x = (*this)(i, j);
      a[i][j] = boost::multiprecision::numerator(x) * (lcm / boost::multiprecision::denominator(x));
    }
  }

  // Bareiss: every division below is exact.
  Integer previous = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && a[pivot][col] == 0) ++pivot;
    if (pivot == rows_) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < rows_; ++i) {
      for (std::size_t j = col + 1; j < cols_; ++j) {
        a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / previous;
      }
      a[i][col] = 0;
    }
    previous = a[rank][col];
    ++rank;
  }
  return rank;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const {
  Matrix m = *this;
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t p = row;
    while (p < rows_ && m(p, col) == 0) ++p;
    if (p == rows_) continue;
    if (p != row) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(row, j));
    }
    const Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < cols_; ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational factor = m(i, col);
      for (std::size_t j = col; j < cols_; ++j) m(i, j) -= factor * m(row, j);
    }
    piv.push_back(col);
    ++row;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

Matrix Matrix::kernel() const {
  std::vector<std::size_t> pivots;
  const Matrix r = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;

  Matrix basis(cols_, cols_ - pivots.size());
  std::size_t k = 0;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      basis(pivots[i], k) = -r(i, free);
    }
    ++k;
  }
  return basis;
}

Matrix Matrix::column_basis() const {
  std::vector<std::size_t> pivots;
  const Matrix r = transposed().rref(&pivots);
  Matrix basis(rows_, pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t i = 0; i < rows_; ++i) basis(i, k) = r(k, i);
  return basis;
}

Matrix Matrix::solve(const Matrix& rhs) const {
  if (rhs.rows_ != rows_) {
    throw std::invalid_argument("solve: right-hand side has wrong row count");
  }
  std::vector<std::size_t> pivots;
  const Matrix r = hstack(rhs).rref(&pivots);
  Matrix x(cols_, rhs.cols_);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= cols_) {
      throw std::domain_error("solve: inconsistent linear system");
    }
    for (std::size_t j = 0; j < rhs.cols_; ++j) x(pivots[i], j) = r(i, cols_ + j);
  }
  return x;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

std::size_t intersection_dimension(const Matrix& a, const Matrix& b) {
  return a.rank() + b.rank() - a.hstack(b).rank();
}

}  // namespace hsect
