#pragma once

#include <vector>

#include "ringunits/rational.hpp"

namespace ringunits {

/// Quaternion algebra (a,b / Q): i^2 = a, j^2 = b, ij = -ji.
struct QuaternionAlgebraQ {
  Rational a, b;
};

/// Places where a quaternion algebra over Q does not split.  Always has an
/// even number of elements in total.
struct RamificationSet {
  std::vector<long> finite_places;  // sorted primes
  bool infinite = false;

  int cardinality() const {
    return static_cast<int>(finite_places.size()) + (infinite ? 1 : 0);
  }
  friend bool operator==(const RamificationSet& x, const RamificationSet& y) {
    return x.finite_places == y.finite_places && x.infinite == y.infinite;
  }
};

constexpr long PLACE_INFINITY = -1;

/// Hilbert symbol (a,b)_p over Q; p = PLACE_INFINITY for the real place.
/// Returns +1 (split) or -1 (ramified).
int hilbert_symbol(const Rational& a, const Rational& b, long p);

RamificationSet ramification_set(const QuaternionAlgebraQ& alg);

/// q = d * s^2 with d a squarefree integer (sign carried by d) and s rational.
/// Requires the numerator and denominator to factor by trial division.
struct SquarefreeSplit {
  long d;
  Rational s;
};
SquarefreeSplit squarefree_split(const Rational& q);

/// Exact sign of a1 + a2*sqrt(d) under the embedding sqrt(d) -> +sqrt(d)
/// (plus = true) or -sqrt(d); d > 0.
int sign_at_embedding(const Rational& a1, const Rational& a2, long d, bool plus);

}  // namespace ringunits
