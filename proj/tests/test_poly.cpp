#include <random>

#include "doctest.h"
#include "ringunits/poly.hpp"

using namespace ringunits;

namespace {

Poly random_poly(std::mt19937_64& rng, int deg, int maxc = 9) {
  std::vector<Rational> c(deg + 1);
  for (int i = 0; i <= deg; ++i)
    c[i] = rat((long)(rng() % (2 * maxc + 1)) - maxc);
  if (c.back() == 0) c.back() = 1;
  return Poly(std::move(c));
}

Poly product_of_factors(const std::vector<std::pair<Poly, int>>& fs,
                        const Rational& lead) {
  Poly acc = poly_const(lead);
  for (const auto& [f, m] : fs)
    for (int i = 0; i < m; ++i) acc = acc * f;
  return acc;
}

}  // namespace

TEST_CASE("divmod and gcd basics") {
  Poly a = poly_from_longs({-1, 0, 0, 0, 1});        // X^4 - 1
  Poly b = poly_from_longs({-1, 1});                 // X - 1
  auto [q, r] = poly_divmod(a, b);
  CHECK(r.is_zero());
  CHECK(q == poly_from_longs({1, 1, 1, 1}));
  CHECK(poly_gcd(a, poly_from_longs({-1, 0, 1})) == poly_from_longs({-1, 0, 1}));
}

TEST_CASE("xgcd bezout identity") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    Poly a = random_poly(rng, 4), b = random_poly(rng, 3);
    auto r = poly_xgcd(a, b);
    CHECK(r.g == r.s * a + r.t * b);
  }
}

TEST_CASE("cyclotomic Phi5 is irreducible") {
  Poly p = poly_from_longs({1, 1, 1, 1, 1});
  auto fs = factor_rational_poly(p);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].first == monic(p));
  CHECK(fs[0].second == 1);
}

TEST_CASE("X^8 - 1 factors into cyclotomics") {
  std::vector<Rational> c(9, 0);
  c[0] = -1;
  c[8] = 1;
  auto fs = factor_rational_poly(Poly(c));
  REQUIRE(fs.size() == 4);
  // (X-1)(X+1)(X^2+1)(X^4+1)
  CHECK(fs[0].first == poly_from_longs({-1, 1}));
  CHECK(fs[1].first == poly_from_longs({1, 1}));
  CHECK(fs[2].first == poly_from_longs({1, 0, 1}));
  CHECK(fs[3].first == poly_from_longs({1, 0, 0, 0, 1}));
  for (const auto& [f, m] : fs) CHECK(m == 1);
}

TEST_CASE("expand-then-factor round trip recovers irreducible cubics") {
  // two fixed irreducible cubics (no rational roots)
  Poly f1 = poly_from_longs({1, 2, 0, 1});   // X^3 + 2X + 1
  Poly f2 = poly_from_longs({-3, 0, 1, 1});  // X^3 + X^2 - 3
  auto fs = factor_rational_poly(f1 * f2);
  REQUIRE(fs.size() == 2);
  CHECK(((fs[0].first == f1 && fs[1].first == f2) ||
         (fs[0].first == f2 && fs[1].first == f1)));
}

TEST_CASE("random polynomials: factors multiply back exactly") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 60; ++t) {
    int deg = 1 + (int)(rng() % 12);
    Poly p = random_poly(rng, deg);
    auto fs = factor_rational_poly(p);
    CHECK(product_of_factors(fs, p.leading()) == p);
    for (const auto& [f, m] : fs) {
      CHECK(f.is_monic());
      CHECK(m >= 1);
    }
  }
}

TEST_CASE("repeated factors get multiplicities") {
  Poly f = poly_from_longs({1, 1});  // X + 1
  Poly g = poly_from_longs({2, 1});  // X + 2
  auto fs = factor_rational_poly(f * f * f * g * g);
  REQUIRE(fs.size() == 2);
  int m3 = 0, m2 = 0;
  for (const auto& [fac, m] : fs) {
    if (m == 3) ++m3;
    if (m == 2) ++m2;
  }
  CHECK(m3 == 1);
  CHECK(m2 == 1);
}

TEST_CASE("rational coefficients are handled") {
  // (X - 1/2)(X + 1/3)
  Poly p = Poly({rat(-1, 2), rat(1)}) * Poly({rat(1, 3), rat(1)});
  auto fs = factor_rational_poly(p);
  REQUIRE(fs.size() == 2);
  CHECK(product_of_factors(fs, p.leading()) == p);
}

TEST_CASE("large-degree cyclotomic-ish product") {
  // X^12 - 1 has 6 irreducible factors
  std::vector<Rational> c(13, 0);
  c[0] = -1;
  c[12] = 1;
  auto fs = factor_rational_poly(Poly(c));
  CHECK(fs.size() == 6);
  CHECK(product_of_factors(fs, rat(1)) == Poly(c));
}
