#pragma once

#include <gmpxx.h>

#include <string>

#include "ot/error.hpp"

namespace ot {

// Exact arbitrary-precision rational. mpq_class keeps values canonical
// (lowest terms, positive denominator) as long as every entry point
// canonicalizes, which the helpers below do.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  require(den != 0, ErrorCode::InvalidInput, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p/q" or an integer literal. Throws ParseError on malformed input.
Rational parse_rational(const std::string& text);

// Canonical text form: "p" for integers, "p/q" otherwise. Round-trips
// losslessly through parse_rational.
std::string to_string(const Rational& r);

inline int sign_of(const Rational& r) { return sgn(r); }

}  // namespace ot
