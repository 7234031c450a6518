#include <gtest/gtest.h>

#include <random>

#include "ust/error.hpp"
#include "ust/linalg.hpp"

using namespace ust;

TEST(Rationals, ParseAndFormat) {
  EXPECT_EQ(parse_rational("3/2"), ratio(3, 2));
  EXPECT_EQ(parse_rational("-6/4"), ratio(-3, 2));
  EXPECT_EQ(parse_rational("7"), 7);
  EXPECT_EQ(parse_rational("0.125"), ratio(1, 8));
  EXPECT_EQ(parse_rational("1.5e-2"), ratio(3, 200));
  EXPECT_EQ(parse_rational("0.1"), ratio(1, 10));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
  EXPECT_THROW(parse_rational(""), Error);
  EXPECT_EQ(format_rational(ratio(8, 18)), "4/9");
  EXPECT_EQ(format_rational(Rational(11664)), "11664");
  EXPECT_EQ(format_rational(ratio(-3, 6)), "-1/2");
  EXPECT_EQ(format_rational(Rational(0)), "0");
}

TEST(Linalg, ExactDeterminant) {
  Matrix<Rational> m(3, 3);
  const int v[3][3] = {{8, 3, 4}, {3, 8, 3}, {4, 3, 8}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m(i, j) = ratio(v[i][j], 18);
  }
  EXPECT_EQ(determinant(m), ratio(312, 5832));
  EXPECT_EQ(determinant(Matrix<Rational>(0, 0)), 1);

  Matrix<Rational> swap(2, 2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  EXPECT_EQ(determinant(swap), -1);

  Matrix<Rational> singular(2, 2);
  singular(0, 0) = 1;
  singular(0, 1) = 2;
  singular(1, 0) = ratio(1, 2);
  singular(1, 1) = 1;
  EXPECT_EQ(determinant(singular), 0);
  EXPECT_THROW(solve(singular, Matrix<Rational>::identity(2)), Error);
}

TEST(Linalg, SolveAgreesAcrossBackends) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 6;
    Matrix<Rational> a(n, n);
    Matrix<Rational> b(n, 2);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = ratio(num(rng), den(rng));
      a(i, i) += 20;  // keep it well conditioned
      for (std::size_t j = 0; j < 2; ++j) b(i, j) = ratio(num(rng), den(rng));
    }
    const Matrix<Rational> x = solve(a, b);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < 2; ++c) {
        Rational lhs = 0;
        for (std::size_t k = 0; k < n; ++k) lhs += a(i, k) * x(k, c);
        EXPECT_EQ(lhs, b(i, c));
      }
    }

    Matrix<double> af(n, n);
    Matrix<double> bf(n, 2);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) af(i, j) = a(i, j).get_d();
      for (std::size_t j = 0; j < 2; ++j) bf(i, j) = b(i, j).get_d();
    }
    const Matrix<double> xf = solve(af, bf);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < 2; ++c) EXPECT_NEAR(xf(i, c), x(i, c).get_d(), 1e-12);
    }
    EXPECT_NEAR(determinant(af), determinant(a).get_d(), 1e-9 * std::abs(determinant(a).get_d()));
  }
}
