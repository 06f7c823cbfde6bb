#include <random>

#include "doctest.h"
#include "ringunits/quat.hpp"

using namespace ringunits;

namespace {

// Brute-force local solvability oracle: (a,b)_p = +1 iff ax^2 + by^2 = z^2
// has a solution mod p^k with x,y,z not all divisible by p.
int oracle(long a, long b, long p, int k) {
  long mod = 1;
  for (int i = 0; i < k; ++i) mod *= p;
  auto red = [&](long v) { return ((v % mod) + mod) % mod; };
  for (long x = 0; x < mod; ++x)
    for (long y = 0; y < mod; ++y)
      for (long z = 0; z < mod; ++z) {
        if (x % p == 0 && y % p == 0 && z % p == 0) continue;
        if (red(a * x * x + b * y * y - z * z) == 0) return 1;
      }
  return -1;
}

RamificationSet ram(long a, long b) {
  return ramification_set({Rational(a), Rational(b)});
}

}  // namespace

TEST_CASE("hilbert symbol with 1 always splits") {
  for (long b : {-7, -3, -1, 2, 5, 6, 15})
    for (long p : {PLACE_INFINITY, 2L, 3L, 5L, 7L})
      CHECK(hilbert_symbol(1, Rational(b), p) == 1);
}

TEST_CASE("hilbert symbol matches brute-force local oracle") {
  for (long a = -8; a <= 8; ++a) {
    if (a == 0) continue;
    for (long b = a; b <= 8; ++b) {
      if (b == 0) continue;
      CHECK(hilbert_symbol(Rational(a), Rational(b), 2) == oracle(a, b, 2, 6));
      CHECK(hilbert_symbol(Rational(a), Rational(b), 3) == oracle(a, b, 3, 3));
      CHECK(hilbert_symbol(Rational(a), Rational(b), 5) == oracle(a, b, 5, 3));
    }
  }
  // a few spot checks at 7
  CHECK(hilbert_symbol(7, 7, 7) == oracle(7, 7, 7, 3));
  CHECK(hilbert_symbol(-1, 7, 7) == oracle(-1, 7, 7, 3));
  CHECK(hilbert_symbol(3, 7, 7) == oracle(3, 7, 7, 3));
  CHECK(hilbert_symbol(-7, -7, 7) == oracle(-7, -7, 7, 3));
}

TEST_CASE("hilbert symbol at infinity") {
  CHECK(hilbert_symbol(-1, -1, PLACE_INFINITY) == -1);
  CHECK(hilbert_symbol(-1, 1, PLACE_INFINITY) == 1);
  CHECK(hilbert_symbol(Rational(-2), Rational(-1, 3), PLACE_INFINITY) == -1);
  CHECK(hilbert_symbol(2, -5, PLACE_INFINITY) == 1);
}

TEST_CASE("symmetry and bimultiplicativity") {
  std::mt19937_64 rng(11);
  auto rnd = [&]() {
    long v = (long)(rng() % 39) - 19;
    return v == 0 ? 1 : v;
  };
  for (long p : {PLACE_INFINITY, 2L, 3L, 5L, 7L, 11L}) {
    for (int t = 0; t < 1000; ++t) {
      Rational a(rnd()), b1(rnd()), b2(rnd());
      CHECK(hilbert_symbol(a, b1, p) == hilbert_symbol(b1, a, p));
      CHECK(hilbert_symbol(a, b1 * b2, p) ==
            hilbert_symbol(a, b1, p) * hilbert_symbol(a, b2, p));
    }
  }
}

TEST_CASE("product formula: ramification sets are even") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 1000; ++t) {
    long a = (long)(rng() % 199) - 99;
    long b = (long)(rng() % 199) - 99;
    if (a == 0) a = 1;
    if (b == 0) b = 1;
    CHECK(ram(a, b).cardinality() % 2 == 0);
  }
}

TEST_CASE("pinned ramification sets") {
  RamificationSet r = ram(-1, -1);
  CHECK(r.infinite);
  CHECK(r.finite_places == std::vector<long>{2});

  r = ram(-1, -3);
  CHECK(r.infinite);
  CHECK(r.finite_places == std::vector<long>{3});

  r = ram(-2, -5);
  CHECK(r.infinite);
  CHECK(r.finite_places == std::vector<long>{5});

  r = ram(-3, -10);
  CHECK(r.infinite);
  CHECK(r.finite_places == std::vector<long>{2, 3, 5});

  CHECK(ram(1, 1).cardinality() == 0);
  CHECK(ram(-1, 2).cardinality() == 0);  // norm form of Q(i) represents 2
  r = ram(-1, 3);
  CHECK(!r.infinite);
  CHECK(r.finite_places == std::vector<long>{2, 3});
}

TEST_CASE("squarefree split") {
  auto s = squarefree_split(12);
  CHECK(s.d == 3);
  CHECK(s.s == 2);
  s = squarefree_split(18);
  CHECK(s.d == 2);
  CHECK(s.s == 3);
  s = squarefree_split(Rational(-75, 4));
  CHECK(s.d == -3);
  CHECK(s.s == Rational(5, 2));
  s = squarefree_split(Rational(1, 2));
  CHECK(s.d == 2);
  CHECK(s.s == Rational(1, 2));
  s = squarefree_split(1);
  CHECK(s.d == 1);
  CHECK(s.s == 1);
  for (long q : {-99, -12, 7, 45, 98, 100}) {
    auto sq = squarefree_split(q);
    CHECK(Rational(sq.d) * sq.s * sq.s == Rational(q));
  }
}

TEST_CASE("exact signs under both real embeddings") {
  // 1 - sqrt(2)
  CHECK(sign_at_embedding(1, -1, 2, true) == -1);
  CHECK(sign_at_embedding(1, -1, 2, false) == 1);
  // -3 + 2 sqrt(5)
  CHECK(sign_at_embedding(-3, 2, 5, true) == 1);
  CHECK(sign_at_embedding(-3, 2, 5, false) == -1);
  // 2 - sqrt(4) = 0
  CHECK(sign_at_embedding(2, -1, 4, true) == 0);
  // rational only
  CHECK(sign_at_embedding(Rational(-1, 7), 0, 5, true) == -1);
  CHECK(sign_at_embedding(0, 0, 5, false) == 0);
}
