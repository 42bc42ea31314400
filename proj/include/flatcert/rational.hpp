#pragma once

#include <gmpxx.h>

#include <string>

namespace flatcert {

using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "p/q" and finite decimals such as "-0.21" (read exactly).
// A leading U+2212 minus sign is accepted as well.
Rational parse_rational(const std::string& text);

// Lowest-terms "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

Integer floor_q(const Rational& q);
Integer ceil_q(const Rational& q);

// num/den in lowest terms; den must be nonzero.
inline Rational ratio_q(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace flatcert
