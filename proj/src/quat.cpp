#include "ringunits/quat.hpp"

#include <algorithm>

#include "ringunits/errors.hpp"

namespace ringunits {

namespace {

// p-adic valuation and unit part of a nonzero rational.
long padic_valuation(const Rational& q, long p, Rational* unit) {
  Integer num = numerator(q), den = denominator(q);
  long v = 0;
  while (num % p == 0) {
    num /= p;
    ++v;
  }
  while (den % p == 0) {
    den /= p;
    --v;
  }
  if (unit) {
    *unit = Rational(num) / Rational(den);
    unit->canonicalize();
  }
  return v;
}

// Legendre symbol (u/p) for odd prime p, u a p-adic unit (rational).
int legendre(const Rational& u, long p) {
  Integer num = numerator(u) % p, den = denominator(u) % p;
  if (num < 0) num += p;
  if (den < 0) den += p;
  Integer deninv;
  mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), Integer(p).get_mpz_t());
  Integer a = num * deninv % p;
  Integer mod(p);
  int r = mpz_legendre(a.get_mpz_t(), mod.get_mpz_t());
  return r;
}

// (u-1)/2 mod 2 for an odd rational unit u at p=2 (numerator*denominator odd).
int eps2(const Rational& u) {
  // u ≡ num * den^{-1} (mod 8); den^{-1} ≡ den (mod 8) for odd den
  long num = mpz_fdiv_ui(numerator(u).get_mpz_t(), 8);
  long den = mpz_fdiv_ui(denominator(u).get_mpz_t(), 8);
  long m = num * den % 8;
  return ((m - 1) / 2) % 2 ? 1 : 0;
}

// (u^2-1)/8 mod 2 for an odd rational unit u.
int omega2(const Rational& u) {
  long num = mpz_fdiv_ui(numerator(u).get_mpz_t(), 8);
  long den = mpz_fdiv_ui(denominator(u).get_mpz_t(), 8);
  long m = num * den % 8;
  return (m == 3 || m == 5) ? 1 : 0;
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, long p) {
  if (a == 0 || b == 0) throw Error("hilbert_symbol: zero argument");
  if (p == PLACE_INFINITY) return (a < 0 && b < 0) ? -1 : 1;
  Rational u, v;
  long alpha = padic_valuation(a, p, &u);
  long beta = padic_valuation(b, p, &v);
  if (p == 2) {
    int exp = eps2(u) * eps2(v) + (alpha % 2 ? omega2(v) : 0) +
              (beta % 2 ? omega2(u) : 0);
    return exp % 2 ? -1 : 1;
  }
  int sym = 1;
  if ((alpha % 2) && (beta % 2) && (p % 4 == 3)) sym = -sym;
  if (beta % 2) sym *= legendre(u, p);
  if (alpha % 2) sym *= legendre(v, p);
  return sym;
}

RamificationSet ramification_set(const QuaternionAlgebraQ& alg) {
  RamificationSet out;
  out.infinite = hilbert_symbol(alg.a, alg.b, PLACE_INFINITY) == -1;
  // only places dividing 2ab can ramify
  Integer m = 2 * numerator(alg.a) * denominator(alg.a) * numerator(alg.b) *
              denominator(alg.b);
  m = abs(m);
  std::vector<long> primes;
  for (long p = 2; Integer(p) * p <= m; p == 2 ? p = 3 : p += 2) {
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) {
    if (!m.fits_slong_p()) throw Error("ramification_set: prime too large");
    primes.push_back(m.get_si());
  }
  std::sort(primes.begin(), primes.end());
  for (long p : primes)
    if (hilbert_symbol(alg.a, alg.b, p) == -1) out.finite_places.push_back(p);
  if (out.cardinality() % 2 != 0)
    throw Error("ramification_set: odd cardinality (arithmetic bug)");
  return out;
}

SquarefreeSplit squarefree_split(const Rational& q) {
  if (q == 0) throw Error("squarefree_split: zero");
  // factor numerator * denominator; q = d s^2 with s = s_num/den-part
  Integer n = numerator(q) * denominator(q);
  int sign = n < 0 ? -1 : 1;
  n = abs(n);
  long d = 1;
  Integer s = 1;
  for (Integer p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    long v = 0;
    while (n % p == 0) {
      n /= p;
      ++v;
    }
    if (!p.fits_slong_p()) throw Error("squarefree_split: factor too large");
    for (long i = 0; i < v / 2; ++i) s *= p;
    if (v % 2) d *= p.get_si();
    if (p > 1000000) throw Error("squarefree_split: trial division exhausted");
  }
  if (n > 1) {
    if (!n.fits_slong_p()) throw Error("squarefree_split: factor too large");
    d *= n.get_si();
  }
  // q = sign * d * (s/den)^2 with den = denominator(q)
  Rational srat = Rational(s) / Rational(denominator(q));
  srat.canonicalize();
  return {sign * d, srat};
}

int sign_at_embedding(const Rational& a1, const Rational& a2, long d,
                      bool plus) {
  Rational b2 = plus ? a2 : -a2;
  // sign of a1 + b2*sqrt(d), d > 0
  if (b2 == 0) return a1 > 0 ? 1 : (a1 < 0 ? -1 : 0);
  if (a1 == 0) return b2 > 0 ? 1 : -1;
  if (a1 > 0 && b2 > 0) return 1;
  if (a1 < 0 && b2 < 0) return -1;
  // opposite signs: compare a1^2 with b2^2 * d
  Rational lhs = a1 * a1, rhs = b2 * b2 * Rational(d);
  if (lhs == rhs) return 0;
  bool a1_dominates = lhs > rhs;
  if (a1 > 0) return a1_dominates ? 1 : -1;
  return a1_dominates ? -1 : 1;
}

}  // namespace ringunits
