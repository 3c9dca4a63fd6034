#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace oscrep {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator), which every equality check in this project relies on.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p", "-p" or "p/q" (base 10). Rejects everything else, notably
/// floating-point notation.
Rational parse_rational(std::string_view text);

/// "p" or "p/q", the exact inverse of parse_rational on canonical values.
std::string to_string(const Rational& q);

}  // namespace oscrep
