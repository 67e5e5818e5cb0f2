#include "kingman/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace kingman {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw std::invalid_argument("not an integer literal: '" + std::string(s) + "'");
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return BigInt(digits, 10);
}

BigInt pow10(unsigned long exponent) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

// Exact value of a decimal literal: [sign] digits [. digits] [e|E [sign] digits].
Rational parse_decimal(std::string_view s) {
  std::string_view mantissa = s;
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = s.substr(0, e);
    std::string_view exp_text = s.substr(e + 1);
    if (!is_integer_literal(exp_text)) {
      throw std::invalid_argument("malformed exponent in '" + std::string(s) + "'");
    }
    exponent = std::stol(std::string(exp_text));
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
    negative = mantissa[0] == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long fraction_digits = 0;
  bool seen_point = false;
  for (char c : mantissa) {
    if (c == '.') {
      if (seen_point) throw std::invalid_argument("malformed number '" + std::string(s) + "'");
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++fraction_digits;
    } else {
      throw std::invalid_argument("malformed number '" + std::string(s) + "'");
    }
  }
  if (digits.empty()) throw std::invalid_argument("malformed number '" + std::string(s) + "'");
  Rational value(BigInt(digits, 10));
  const long scale = exponent - fraction_digits;
  if (scale > 0) {
    value *= Rational(pow10(static_cast<unsigned long>(scale)));
  } else if (scale < 0) {
    value /= Rational(pow10(static_cast<unsigned long>(-scale)));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational limit_denominator(const Rational& value, unsigned long max_denominator) {
  if (max_denominator == 0) throw std::invalid_argument("max_denominator must be positive");
  if (value.get_den() <= max_denominator) return value;
  // Convergents p_k/q_k of the continued fraction, then the best semiconvergent.
  BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  BigInt n = value.get_num(), d = value.get_den();
  const BigInt bound = max_denominator;
  while (true) {
    BigInt a;
    mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    BigInt q2 = q0 + a * q1;
    if (q2 > bound) break;
    BigInt p2 = p0 + a * p1;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    BigInt r = n - a * d;
    n = d;
    d = r;
    if (d == 0) break;
  }
  BigInt k = (bound - q0) / q1;
  Rational lower(BigInt(p0 + k * p1), BigInt(q0 + k * q1));
  Rational upper(p1, q1);
  lower.canonicalize();
  upper.canonicalize();
  Rational dl = abs(lower - value);
  Rational du = abs(upper - value);
  return du <= dl ? upper : lower;
}

Rational parse_rational(std::string_view text, unsigned long max_denominator) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (is_integer_literal(text)) return Rational(parse_integer(text));
  return limit_denominator(parse_decimal(text), max_denominator);
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const BigInt& value) { return value.get_str(); }

}  // namespace kingman
