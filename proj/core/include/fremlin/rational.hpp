#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fremlin {

/// Exact rational scalar used for every coordinate in the library.
using Rational = mpq_class;

/// Parses "p/q" or "p" (optional sign). Throws ParseError on malformed text
/// or a zero denominator. The result is canonicalized.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, or "p" for integers.
std::string to_string(const Rational& value);

/// num / den in canonical form (the two-argument mpq_class constructor does
/// not reduce).
inline Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational abs_value(const Rational& value) { return value < 0 ? Rational(-value) : value; }
inline const Rational& max_value(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline const Rational& min_value(const Rational& a, const Rational& b) { return b < a ? b : a; }

}  // namespace fremlin
