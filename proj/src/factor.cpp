#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "ringunits/poly.hpp"

namespace ringunits {

namespace {

// ---------------------------------------------------------------------------
// Arithmetic mod a small prime p (fits in int64 products).

using ZpPoly = std::vector<long>;  // low-to-high, no trailing zeros

void zp_trim(ZpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long zp_inv(long a, long p) {
  long t = 0, newt = 1, r = p, newr = a % p;
  if (newr < 0) newr += p;
  while (newr != 0) {
    long q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  return t < 0 ? t + p : t;
}

ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, long p) {
  if (a.empty() || b.empty()) return {};
  ZpPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + (__int128)a[i] * b[j]) % p;
  }
  zp_trim(c);
  return c;
}

// remainder of a by monic-or-invertible b
ZpPoly zp_mod(ZpPoly a, const ZpPoly& b, long p) {
  long inv = zp_inv(b.back(), p);
  while (a.size() >= b.size()) {
    long f = (__int128)a.back() * inv % p;
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      a[i + shift] = (a[i + shift] - (__int128)f * b[i]) % p;
      if (a[i + shift] < 0) a[i + shift] += p;
    }
    zp_trim(a);
  }
  return a;
}

ZpPoly zp_divexact(ZpPoly a, const ZpPoly& b, long p) {
  ZpPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  long inv = zp_inv(b.back(), p);
  while (a.size() >= b.size()) {
    long f = (__int128)a.back() * inv % p;
    size_t shift = a.size() - b.size();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) {
      a[i + shift] = (a[i + shift] - (__int128)f * b[i]) % p;
      if (a[i + shift] < 0) a[i + shift] += p;
    }
    zp_trim(a);
  }
  zp_trim(q);
  return q;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, long p) {
  while (!b.empty()) {
    ZpPoly r = zp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    long inv = zp_inv(a.back(), p);
    for (auto& c : a) c = (__int128)c * inv % p;
  }
  return a;
}

ZpPoly zp_deriv(const ZpPoly& a, long p) {
  if (a.size() < 2) return {};
  ZpPoly d(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) d[i - 1] = (long)(i % p) * a[i] % p;
  zp_trim(d);
  return d;
}

ZpPoly zp_powmod(const ZpPoly& base, const Integer& e, const ZpPoly& mod,
                 long p) {
  ZpPoly result = {1};
  ZpPoly b = zp_mod(base, mod, p);
  for (long bit = mpz_sizeinbase(e.get_mpz_t(), 2); bit-- > 0;) {
    result = zp_mod(zp_mul(result, result, p), mod, p);
    if (mpz_tstbit(e.get_mpz_t(), bit))
      result = zp_mod(zp_mul(result, b, p), mod, p);
  }
  return result;
}

// Equal-degree splitting (Cantor-Zassenhaus), deterministic seed.
void zp_edf(const ZpPoly& f, int d, long p, std::mt19937_64& rng,
            std::vector<ZpPoly>& out) {
  int n = (int)f.size() - 1;
  if (n == d) {
    out.push_back(f);
    return;
  }
  Integer pd = 1;
  for (int i = 0; i < d; ++i) pd *= p;
  Integer half = (pd - 1) / 2;
  while (true) {
    ZpPoly a(n, 0);
    for (int i = 0; i < n; ++i) a[i] = (long)(rng() % (unsigned long)p);
    zp_trim(a);
    if (a.size() <= (size_t)1) continue;
    ZpPoly b = zp_powmod(a, half, f, p);
    if (b.empty()) continue;
    b[0] = (b[0] - 1 + p) % p;
    zp_trim(b);
    ZpPoly g = zp_gcd(b, f, p);
    if (!g.empty() && g.size() > 1 && g.size() < f.size()) {
      zp_edf(g, d, p, rng, out);
      zp_edf(zp_divexact(f, g, p), d, p, rng, out);
      return;
    }
  }
}

// Factor a squarefree monic polynomial mod p into monic irreducibles.
std::vector<ZpPoly> zp_factor_squarefree(ZpPoly f, long p) {
  std::vector<ZpPoly> out;
  std::mt19937_64 rng(0x5eed);
  ZpPoly x = {0, 1};
  ZpPoly h = x;  // x^(p^d) mod f, maintained incrementally
  int d = 0;
  while ((int)f.size() - 1 > 0) {
    ++d;
    if (2 * d > (int)f.size() - 1) {
      out.push_back(f);
      break;
    }
    h = zp_powmod(h, Integer(p), f, p);
    ZpPoly hx = h;
    // h - x
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = (hx[1] - 1 + p) % p;
    zp_trim(hx);
    ZpPoly g = zp_gcd(hx, f, p);
    if (g.size() > 1) {
      zp_edf(g, d, p, rng, out);
      f = zp_divexact(f, g, p);
      h = zp_mod(h, f, p);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Polynomials with Integer coefficients mod m (m = p^k, arbitrary precision).

using ZmPoly = std::vector<Integer>;

Integer sym_mod(Integer a, const Integer& m) {
  a %= m;
  if (a < 0) a += m;
  if (2 * a > m) a -= m;
  return a;
}

void zm_trim(ZmPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZmPoly zm_reduce(const ZmPoly& a, const Integer& m) {
  ZmPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] % m;
    if (r[i] < 0) r[i] += m;
  }
  zm_trim(r);
  return r;
}

ZmPoly zm_mul(const ZmPoly& a, const ZmPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZmPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return zm_reduce(c, m);
}

ZmPoly zm_add(const ZmPoly& a, const ZmPoly& b, const Integer& m) {
  ZmPoly c(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  return zm_reduce(c, m);
}

ZmPoly zm_sub(const ZmPoly& a, const ZmPoly& b, const Integer& m) {
  ZmPoly c(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  return zm_reduce(c, m);
}

// divmod by a monic divisor
std::pair<ZmPoly, ZmPoly> zm_divmod(ZmPoly a, const ZmPoly& b,
                                    const Integer& m) {
  ZmPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (a.size() >= b.size()) {
    Integer f = a.back();
    size_t shift = a.size() - b.size();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) {
      a[i + shift] -= f * b[i];
      a[i + shift] %= m;
      if (a[i + shift] < 0) a[i + shift] += m;
    }
    zm_trim(a);
  }
  zm_trim(q);
  return {q, a};
}

struct LiftPair {
  ZmPoly g, h, s, t;  // f = g*h, s*g + t*h = 1 (mod m)
};

// One quadratic Hensel step (von zur Gathen & Gerhard, Alg. 15.10).
// Requires h monic; keeps h monic.
LiftPair hensel_step(const ZmPoly& f, const LiftPair& in, const Integer& m) {
  Integer m2 = m * m;
  ZmPoly e = zm_sub(zm_reduce(f, m2), zm_mul(in.g, in.h, m2), m2);
  auto [q, r] = zm_divmod(zm_mul(in.s, e, m2), in.h, m2);
  ZmPoly g = zm_add(in.g, zm_add(zm_mul(in.t, e, m2), zm_mul(q, in.g, m2), m2), m2);
  ZmPoly h = zm_add(in.h, r, m2);
  ZmPoly b = zm_sub(zm_add(zm_mul(in.s, g, m2), zm_mul(in.t, h, m2), m2),
                    ZmPoly{1}, m2);
  auto [c, d] = zm_divmod(zm_mul(in.s, b, m2), h, m2);
  ZmPoly s = zm_sub(in.s, d, m2);
  ZmPoly t = zm_sub(in.t, zm_add(zm_mul(in.t, b, m2), zm_mul(c, g, m2), m2), m2);
  return {g, h, s, t};
}

// Lift a pairwise-coprime monic factorization of monic f from mod p to
// mod p^(2^j) >= target, recursively by binary splitting.
void hensel_tree(const ZmPoly& f, const std::vector<ZmPoly>& factors_p, long p,
                 const Integer& target, std::vector<ZmPoly>& out) {
  if (factors_p.size() == 1) {
    out.push_back(zm_reduce(f, target));
    return;
  }
  size_t half = factors_p.size() / 2;
  Integer pp(p);
  ZmPoly a = {1}, b = {1};
  for (size_t i = 0; i < half; ++i) a = zm_mul(a, factors_p[i], pp);
  for (size_t i = half; i < factors_p.size(); ++i)
    b = zm_mul(b, factors_p[i], pp);
  // Bezout for a, b mod p via the small-prime layer
  ZpPoly ap(a.size()), bp(b.size());
  for (size_t i = 0; i < a.size(); ++i) ap[i] = a[i].get_si();
  for (size_t i = 0; i < b.size(); ++i) bp[i] = b[i].get_si();
  // extended gcd mod p
  ZpPoly r0 = ap, r1 = bp, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  auto zp_sub = [&](const ZpPoly& x, const ZpPoly& y) {
    ZpPoly c(std::max(x.size(), y.size()), 0);
    for (size_t i = 0; i < x.size(); ++i) c[i] = x[i];
    for (size_t i = 0; i < y.size(); ++i) {
      c[i] = (c[i] - y[i]) % p;
      if (c[i] < 0) c[i] += p;
    }
    zp_trim(c);
    return c;
  };
  while (!r1.empty()) {
    ZpPoly q = zp_divexact(r0, r1, p);
    ZpPoly r = zp_mod(r0, r1, p);
    ZpPoly s = zp_sub(s0, zp_mul(q, s1, p));
    ZpPoly t = zp_sub(t0, zp_mul(q, t1, p));
    r0 = std::move(r1); r1 = std::move(r);
    s0 = std::move(s1); s1 = std::move(s);
    t0 = std::move(t1); t1 = std::move(t);
  }
  long inv = zp_inv(r0.back(), p);  // r0 is a nonzero constant (coprime)
  ZmPoly s(s0.size()), t(t0.size());
  for (size_t i = 0; i < s0.size(); ++i) s[i] = (long)((__int128)s0[i] * inv % p);
  for (size_t i = 0; i < t0.size(); ++i) t[i] = (long)((__int128)t0[i] * inv % p);

  LiftPair pair{a, b, s, t};
  Integer m = pp;
  while (m < target) {
    pair = hensel_step(f, pair, m);
    m = m * m;
  }
  hensel_tree(zm_reduce(pair.g, target), {factors_p.begin(), factors_p.begin() + half},
              p, target, out);
  hensel_tree(zm_reduce(pair.h, target), {factors_p.begin() + half, factors_p.end()},
              p, target, out);
}

// ---------------------------------------------------------------------------

std::vector<long> small_primes() {
  static std::vector<long> primes = [] {
    std::vector<long> out;
    std::vector<char> sieve(100000, 1);
    for (long i = 2; i < (long)sieve.size(); ++i) {
      if (!sieve[i]) continue;
      if (i > 2) out.push_back(i);
      for (long j = 2 * i; j < (long)sieve.size(); j += i) sieve[j] = 0;
    }
    return out;
  }();
  return primes;
}

// integer polynomial with positive leading coefficient and content 1
struct ZPoly {
  std::vector<Integer> c;
  int degree() const { return (int)c.size() - 1; }
};

ZPoly primitive_from_rational(const Poly& p) {
  Integer den = 1;
  for (const auto& q : p.coeffs) den = den / gcd(den, denominator(q)) * denominator(q);
  std::vector<Integer> c(p.coeffs.size());
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = numerator(p.coeffs[i]) * (den / denominator(p.coeffs[i]));
  Integer content = 0;
  for (const auto& x : c) content = gcd(content, x);
  if (content == 0) content = 1;
  if (c.back() < 0) content = -content;
  for (auto& x : c) x /= content;
  return {c};
}

Poly to_monic_rational(const ZPoly& f) {
  std::vector<Rational> c(f.c.size());
  Rational lead(f.c.back());
  for (size_t i = 0; i < c.size(); ++i) {
    c[i] = Rational(f.c[i]) / lead;
    c[i].canonicalize();
  }
  return Poly(std::move(c));
}

bool divides_exactly(const Poly& divisor, const Poly& f) {
  return poly_divmod(f, divisor).second.is_zero();
}

// Factor a primitive squarefree integer polynomial into monic rational
// irreducibles.
std::vector<Poly> factor_squarefree_integer(const ZPoly& f0) {
  std::vector<Poly> out;
  if (f0.degree() <= 1) {
    out.push_back(to_monic_rational(f0));
    return out;
  }
  ZPoly f = f0;

  // pick a prime keeping f squarefree with invertible leading coefficient
  long p = 0;
  ZpPoly fp;
  for (long cand : small_primes()) {
    if (f.c.back() % cand == 0) continue;
    ZpPoly g(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) {
      g[i] = mpz_fdiv_ui(f.c[i].get_mpz_t(), cand);
    }
    zp_trim(g);
    ZpPoly d = zp_deriv(g, cand);
    if (d.empty()) continue;
    if (zp_gcd(g, d, cand).size() == 1) {
      p = cand;
      fp = g;
      break;
    }
  }
  if (p == 0) throw Error("factor: no good prime found");

  // monic factorization mod p
  long lcinv = zp_inv(fp.back(), p);
  ZpPoly fmonic = fp;
  for (auto& c : fmonic) c = (__int128)c * lcinv % p;
  std::vector<ZpPoly> modular = zp_factor_squarefree(fmonic, p);
  if (modular.size() == 1) {
    out.push_back(to_monic_rational(f));
    return out;
  }
  std::sort(modular.begin(), modular.end());

  // coefficient bound: any factor of f (deg n) has sup-norm <= 2^n * ||f||_2;
  // candidates carry an extra leading-coefficient multiplier.
  int n = f.degree();
  Integer norm2 = 0;
  for (const auto& c : f.c) norm2 += c * c;
  Integer bound = sqrt(norm2) + 1;
  bound <<= n;
  bound *= abs(f.c.back());
  Integer target = p;
  while (target <= 2 * bound) target *= p;

  // lift: f/lc is monic mod target
  Integer lc(f.c.back());
  Integer lcinv_m;
  mpz_invert(lcinv_m.get_mpz_t(), lc.get_mpz_t(), target.get_mpz_t());
  ZmPoly fm(f.c.size());
  for (size_t i = 0; i < f.c.size(); ++i) {
    fm[i] = f.c[i] * lcinv_m % target;
    if (fm[i] < 0) fm[i] += target;
  }
  std::vector<ZmPoly> modular_z(modular.size());
  for (size_t i = 0; i < modular.size(); ++i)
    modular_z[i] = ZmPoly(modular[i].begin(), modular[i].end());
  std::vector<ZmPoly> lifted;
  hensel_tree(fm, modular_z, p, target, lifted);

  // subset recombination
  std::vector<int> remaining(lifted.size());
  for (size_t i = 0; i < remaining.size(); ++i) remaining[i] = (int)i;
  Poly fq = to_monic_rational(f);  // running cofactor, monic over Q
  Integer run_lc = lc;

  auto candidate_poly = [&](const std::vector<int>& subset) {
    ZmPoly prod = {run_lc % target};
    for (int idx : subset) prod = zm_mul(prod, lifted[idx], target);
    std::vector<Integer> sym(prod.size());
    for (size_t i = 0; i < prod.size(); ++i) sym[i] = sym_mod(prod[i], target);
    Integer content = 0;
    for (const auto& x : sym) content = gcd(content, x);
    if (content == 0) content = 1;
    if (!sym.empty() && sym.back() < 0) content = -content;
    for (auto& x : sym) x /= content;
    std::vector<Rational> c(sym.begin(), sym.end());
    return Poly(std::move(c));
  };

  for (int d = 1; d <= (int)remaining.size() / 2; ++d) {
    // iterate over d-subsets of remaining, lexicographic
    std::vector<int> sel(d);
    for (int i = 0; i < d; ++i) sel[i] = i;
    bool done = false;
    while (!done) {
      std::vector<int> subset(d);
      for (int i = 0; i < d; ++i) subset[i] = remaining[sel[i]];
      Poly cand = candidate_poly(subset);
      if (cand.degree() >= 1 && divides_exactly(cand, fq)) {
        Poly mono = monic(cand);
        out.push_back(mono);
        fq = poly_divmod(fq, mono).first;
        // remove used modular factors and restart this subset size
        std::vector<int> keep;
        for (size_t i = 0, si = 0; i < remaining.size(); ++i) {
          if (si < (size_t)d && (int)i == sel[si]) {
            ++si;
            continue;
          }
          keep.push_back(remaining[i]);
        }
        remaining = std::move(keep);
        if ((int)remaining.size() < 2 * d) {
          done = true;
          break;
        }
        for (int i = 0; i < d; ++i) sel[i] = i;
        continue;
      }
      // next combination
      int i = d - 1;
      while (i >= 0 && sel[i] == (int)remaining.size() - d + i) --i;
      if (i < 0) {
        done = true;
      } else {
        ++sel[i];
        for (int j = i + 1; j < d; ++j) sel[j] = sel[j - 1] + 1;
      }
    }
  }
  if (fq.degree() >= 1) out.push_back(fq);
  return out;
}

}  // namespace

std::vector<std::pair<Poly, int>> factor_rational_poly(const Poly& p) {
  if (p.degree() < 1) return {};
  Poly a = monic(p);

  // squarefree decomposition by repeated gcd
  std::vector<std::pair<Poly, int>> squarefree_parts;
  Poly c = poly_gcd(a, derivative(a));
  Poly w = poly_divmod(a, c).first;
  int i = 1;
  while (w.degree() > 0) {
    Poly y = poly_gcd(w, c);
    Poly z = poly_divmod(w, y).first;
    if (z.degree() > 0) squarefree_parts.emplace_back(z, i);
    w = std::move(y);
    c = poly_divmod(c, w).first;
    ++i;
  }

  std::vector<std::pair<Poly, int>> out;
  for (const auto& [part, mult] : squarefree_parts) {
    ZPoly zp = primitive_from_rational(part);
    for (const auto& irr : factor_squarefree_integer(zp))
      out.emplace_back(irr, mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first.degree() != y.first.degree())
      return x.first.degree() < y.first.degree();
    return x.first.coeffs < y.first.coeffs;
  });
  return out;
}

}  // namespace ringunits
