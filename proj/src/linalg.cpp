#include "ust/linalg.hpp"

#include <cmath>
#include <utility>

#include "ust/error.hpp"

namespace ust {

namespace {

// Integer matrix [a | b] together with the per-row factors used to clear
// denominators, so that row i of the integer system equals scale[i] times
// row i of the rational one.
struct IntegerSystem {
  std::size_t n = 0;
  std::size_t width = 0;
  std::vector<Integer> cells;
  std::vector<Integer> scale;

  Integer& at(std::size_t r, std::size_t c) { return cells[r * width + c]; }
};

IntegerSystem to_integer_rows(const Matrix<Rational>& a, const Matrix<Rational>* b) {
  IntegerSystem sys;
  sys.n = a.rows();
  sys.width = a.cols() + (b ? b->cols() : 0);
  sys.cells.resize(sys.n * sys.width);
  sys.scale.resize(sys.n);
  for (std::size_t r = 0; r < sys.n; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den_mpz_t());
    if (b) {
      for (std::size_t c = 0; c < b->cols(); ++c) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*b)(r, c).get_den_mpz_t());
      }
    }
    sys.scale[r] = l;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      sys.at(r, c) = a(r, c).get_num() * (l / a(r, c).get_den());
    }
    if (b) {
      for (std::size_t c = 0; c < b->cols(); ++c) {
        sys.at(r, a.cols() + c) = (*b)(r, c).get_num() * (l / (*b)(r, c).get_den());
      }
    }
  }
  return sys;
}

// Bareiss elimination over the first n columns, carrying the remaining
// columns along. Returns false if singular; `sign` tracks row swaps.
bool bareiss(IntegerSystem& sys, int& sign) {
  sign = 1;
  Integer prev = 1;
  const std::size_t n = sys.n;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && sys.at(pivot, k) == 0) ++pivot;
    if (pivot == n) return false;
    if (pivot != k) {
      for (std::size_t c = 0; c < sys.width; ++c) std::swap(sys.at(pivot, c), sys.at(k, c));
      std::swap(sys.scale[pivot], sys.scale[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < sys.width; ++j) {
        Integer& cell = sys.at(i, j);
        cell = sys.at(i, j) * sys.at(k, k) - sys.at(i, k) * sys.at(k, j);
        mpz_divexact(cell.get_mpz_t(), cell.get_mpz_t(), prev.get_mpz_t());
      }
      sys.at(i, k) = 0;
    }
    prev = sys.at(k, k);
  }
  return true;
}

Rational determinant_exact(const Matrix<Rational>& a) {
  if (a.rows() == 0) return Rational(1);
  IntegerSystem sys = to_integer_rows(a, nullptr);
  int sign = 1;
  if (!bareiss(sys, sign)) return Rational(0);
  Integer denom = 1;
  for (const Integer& s : sys.scale) denom *= s;
  Rational det(sign * sys.at(sys.n - 1, sys.n - 1), denom);
  det.canonicalize();
  return det;
}

Matrix<Rational> solve_exact(const Matrix<Rational>& a, const Matrix<Rational>& b) {
  IntegerSystem sys = to_integer_rows(a, &b);
  int sign = 1;
  if (!bareiss(sys, sign)) throw Error(ErrorCode::numeric, "singular system");
  const std::size_t n = sys.n;
  const std::size_t m = b.cols();
  Matrix<Rational> x(n, m);
  for (std::size_t col = 0; col < m; ++col) {
    for (std::size_t i = n; i-- > 0;) {
      Rational acc(sys.at(i, n + col));
      for (std::size_t j = i + 1; j < n; ++j) {
        if (sys.at(i, j) != 0) acc -= Rational(sys.at(i, j)) * x(j, col);
      }
      acc /= Rational(sys.at(i, i));
      x(i, col) = acc;
    }
  }
  return x;
}

// LU with partial pivoting, in place. Returns false if a pivot is exactly 0.
bool lu_decompose(Matrix<double>& a, std::vector<std::size_t>& perm, int& sign) {
  const std::size_t n = a.rows();
  perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::abs(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(a(i, k)) > best) {
        best = std::abs(a(i, k));
        pivot = i;
      }
    }
    if (best == 0.0) return false;
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(k, c));
      std::swap(perm[pivot], perm[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a(i, k) / a(k, k);
      a(i, k) = f;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return true;
}

double determinant_float(const Matrix<double>& a) {
  Matrix<double> lu = a;
  std::vector<std::size_t> perm;
  int sign = 1;
  if (!lu_decompose(lu, perm, sign)) return 0.0;
  double det = sign;
  for (std::size_t i = 0; i < lu.rows(); ++i) det *= lu(i, i);
  return det;
}

Matrix<double> solve_float(const Matrix<double>& a, const Matrix<double>& b) {
  Matrix<double> lu = a;
  std::vector<std::size_t> perm;
  int sign = 1;
  if (!lu_decompose(lu, perm, sign)) throw Error(ErrorCode::numeric, "singular system");
  const std::size_t n = a.rows();
  Matrix<double> x(n, b.cols());
  std::vector<double> y(n);
  for (std::size_t col = 0; col < b.cols(); ++col) {
    for (std::size_t i = 0; i < n; ++i) {
      double acc = b(perm[i], col);
      for (std::size_t j = 0; j < i; ++j) acc -= lu(i, j) * y[j];
      y[i] = acc;
    }
    for (std::size_t i = n; i-- > 0;) {
      double acc = y[i];
      for (std::size_t j = i + 1; j < n; ++j) acc -= lu(i, j) * x(j, col);
      x(i, col) = acc / lu(i, i);
    }
  }
  return x;
}

void require_square(std::size_t rows, std::size_t cols) {
  if (rows != cols) throw Error(ErrorCode::invalid_argument, "matrix must be square");
}

}  // namespace

template <Scalar T>
T determinant(const Matrix<T>& a) {
  require_square(a.rows(), a.cols());
  if constexpr (ScalarTraits<T>::exact) {
    return determinant_exact(a);
  } else {
    return determinant_float(a);
  }
}

template <Scalar T>
Matrix<T> solve(const Matrix<T>& a, const Matrix<T>& b) {
  require_square(a.rows(), a.cols());
  if (b.rows() != a.rows()) throw Error(ErrorCode::invalid_argument, "right-hand side has wrong height");
  if constexpr (ScalarTraits<T>::exact) {
    return solve_exact(a, b);
  } else {
    return solve_float(a, b);
  }
}

template Rational determinant<Rational>(const Matrix<Rational>&);
template double determinant<double>(const Matrix<double>&);
template Matrix<Rational> solve<Rational>(const Matrix<Rational>&, const Matrix<Rational>&);
template Matrix<double> solve<double>(const Matrix<double>&, const Matrix<double>&);

}  // namespace ust
