#include "ust/scalar.hpp"

#include <cctype>
#include <charconv>

#include "ust/error.hpp"

namespace ust {

namespace {

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorCode::parse_error,
              "malformed number '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) bad_number(text);
  Integer value(std::string(digits), 10);
  return negative ? Integer(-value) : value;
}

Rational parse_decimal(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }

  long exponent = 0;
  if (auto pos = rest.find_first_of("eE"); pos != std::string_view::npos) {
    std::string_view exp_text = rest.substr(pos + 1);
    if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(exp_text.data(),
                                     exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc() || ptr != exp_text.data() + exp_text.size()) {
      bad_number(text);
    }
    rest = rest.substr(0, pos);
  }

  std::string digits;
  std::string_view int_part = rest;
  std::string_view frac_part;
  if (auto dot = rest.find('.'); dot != std::string_view::npos) {
    int_part = rest.substr(0, dot);
    frac_part = rest.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) bad_number(text);
  if (!int_part.empty() && !all_digits(int_part)) bad_number(text);
  if (!frac_part.empty() && !all_digits(frac_part)) bad_number(text);
  digits.append(int_part);
  digits.append(frac_part);
  exponent -= static_cast<long>(frac_part.size());

  if (exponent > 4096 || exponent < -4096) {
    throw Error(ErrorCode::out_of_range, "exponent out of range in '" + std::string(text) + "'");
  }
  Rational value{Integer(digits, 10)};
  Integer ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) {
    value *= ten_pow;
  } else {
    value /= ten_pow;
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text.empty()) bad_number(text);

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) {
      throw Error(ErrorCode::parse_error, "zero denominator in '" + std::string(text) + "'");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (text.find_first_of(".eE") != std::string_view::npos) return parse_decimal(text);
  return Rational(parse_integer(text));
}

std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_str();
}

}  // namespace ust
