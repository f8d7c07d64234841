#pragma once

#include <gmpxx.h>

#include <string>

namespace pencil::algebra {

// mpq_class keeps numerator/denominator reduced with a positive denominator
// as long as canonicalize() runs after construction from raw parts.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Parses "n" or "n/d"; throws InputError on malformed text or zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace pencil::algebra
