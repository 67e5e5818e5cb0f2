#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace kingman {

/// Arbitrary-precision integer. Path counts and dimensions grow factorially.
using BigInt = mpz_class;

/// Exact rational, always kept in canonical (reduced) form.
using Rational = mpq_class;

/// Parses "p/q", "p", or a decimal literal such as "0.25" or "-1e-3".
///
/// Decimal literals are converted exactly and then, when the reduced
/// denominator exceeds `max_denominator`, replaced by the best rational
/// approximation with denominator at most `max_denominator`.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text, unsigned long max_denominator = 1000000UL);

/// "p/q", or "p" for integers; the form every exact result is serialized in.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

/// Best rational approximation with bounded denominator (continued fractions).
Rational limit_denominator(const Rational& value, unsigned long max_denominator);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline double to_double(const Rational& value) { return value.get_d(); }

}  // namespace kingman
