#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>
#include <type_traits>

namespace ust {

using Integer = mpz_class;
using Rational = mpq_class;

/// Numeric backend selector. Exact is arbitrary-precision rational
/// arithmetic; Float is IEEE double with partial pivoting.
enum class NumericMode { exact, floating };

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static Rational from_rational(const Rational& q) { return q; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static double to_double(const Rational& x) { return x.get_d(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double from_rational(const Rational& q) { return q.get_d(); }
  static bool is_zero(double x) { return x == 0.0; }
  static double to_double(double x) { return x; }
};

/// num/den in lowest terms. mpq_class(num, den) alone does not reduce.
inline Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

template <class T>
concept Scalar = requires { ScalarTraits<T>::exact; };

template <Scalar T>
T scalar_from(const Rational& q) {
  return ScalarTraits<T>::from_rational(q);
}

template <Scalar T>
double to_double(const T& x) {
  return ScalarTraits<T>::to_double(x);
}

/// Parses "3", "-2", "3/2" or a decimal such as "0.25" / "1e-3" into an exact
/// rational. Decimals are converted digit-exactly, not through double.
Rational parse_rational(std::string_view text);

/// Lowest-terms "p/q" rendering; integers render without "/1".
std::string format_rational(const Rational& q);

}  // namespace ust
