#pragma once

#include <gmpxx.h>

#include <string>

#include "ringunits/errors.hpp"

namespace ringunits {

// Exact rationals. mpq_class keeps values canonical (reduced, positive
// denominator), which is exactly the invariant the rest of the code relies on.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer numerator(const Rational& q) { return q.get_num(); }
inline Integer denominator(const Rational& q) { return q.get_den(); }

// "p/q" with q > 0 and gcd(p,q) = 1; integers print without the slash.
inline std::string rat_to_string(const Rational& q) {
  return q.get_str();
}

inline Rational rat_from_string(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational: " + s);
  q.canonicalize();
  return q;
}

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace ringunits
