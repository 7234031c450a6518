#pragma once

#include <cstddef>
#include <vector>

#include "ust/scalar.hpp"

namespace ust {

/// Dense row-major matrix.
template <Scalar T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Submatrix on the given rows and columns, in the given order.
  Matrix select(const std::vector<std::size_t>& row_ids,
                const std::vector<std::size_t>& col_ids) const {
    Matrix out(row_ids.size(), col_ids.size());
    for (std::size_t i = 0; i < row_ids.size(); ++i) {
      for (std::size_t j = 0; j < col_ids.size(); ++j) out(i, j) = (*this)(row_ids[i], col_ids[j]);
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Exact backend: rows are scaled to integers and reduced with fraction-free
/// (Bareiss) elimination. Float backend: LU with partial pivoting.
template <Scalar T>
T determinant(const Matrix<T>& a);

/// Solves a * x = b for square nonsingular a; b may hold several right-hand
/// sides as columns. Throws Error(numeric) when a is singular.
template <Scalar T>
Matrix<T> solve(const Matrix<T>& a, const Matrix<T>& b);

extern template Rational determinant<Rational>(const Matrix<Rational>&);
extern template double determinant<double>(const Matrix<double>&);
extern template Matrix<Rational> solve<Rational>(const Matrix<Rational>&, const Matrix<Rational>&);
extern template Matrix<double> solve<double>(const Matrix<double>&, const Matrix<double>&);

}  // namespace ust
