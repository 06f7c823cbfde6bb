#include <numeric>

#include "doctest.h"
#include "ringunits/units.hpp"
#include "ringunits/wedderburn.hpp"
#include "test_helpers.hpp"

using namespace ringunits;
using namespace ringunits::testing;

TEST_CASE("bass unit on C5 with k=2, m=4") {
  auto g = c_n(5);
  UnitElement u = bass_unit(g, 1, 2, 4);
  GAElem expected(g);
  expected.set(0, -2);
  expected.set(1, 1);
  expected.set(2, 3);
  expected.set(3, 1);
  expected.set(4, -2);
  CHECK(u.value == expected);
  CHECK(is_integral(u.inverse));
  CHECK(ga_product(u.value, u.inverse) == ga_one(g));
}

TEST_CASE("bass unit trivial cases") {
  auto g = c_n(6);
  UnitElement u = bass_unit(g, 1, 1, 3);  // k = 1
  CHECK(u.value == ga_one(g));
  UnitElement v = bass_unit(g, 0, 1, 1);  // identity element
  CHECK(v.value == ga_one(g));
}

TEST_CASE("bass unit rejects bad exponents") {
  auto g = c_n(5);
  CHECK_THROWS_AS(bass_unit(g, 1, 2, 3), BadExponents);  // 2^3 = 8 != 1 mod 5
  CHECK_THROWS_AS(bass_unit(g, 1, 0, 4), BadExponents);
  CHECK_THROWS_AS(bass_unit(g, 1, 5, 4), BadExponents);
}

TEST_CASE("bass units verify for every valid (k, m) on cyclic groups") {
  for (int n : {4, 6, 8, 12}) {
    auto g = c_n(n);
    for (int e = 1; e < g->order; ++e) {
      long o = g->element_order[e];
      for (long k = 2; k < o; ++k) {
        if (std::gcd(k, o) != 1) continue;
        long m = 1, acc = k % o;
        while (acc != 1) {
          acc = acc * k % o;
          ++m;
        }
        UnitElement u = bass_unit(g, e, k, m);
        CHECK(is_integral(u.value));
        CHECK(is_integral(u.inverse));
        CHECK(ga_product(u.inverse, u.value) == ga_one(g));
      }
    }
  }
}

TEST_CASE("bicyclic units of abelian groups are trivial") {
  CHECK(bicyclic_units(c_n(8)).empty());
  CHECK(bicyclic_units(v4()).empty());
}

TEST_CASE("bicyclic units of S3") {
  auto g = s3();
  auto units = bicyclic_units(g);
  CHECK(!units.empty());
  GAElem one = ga_one(g);
  for (const auto& u : units) {
    GAElem pert = u.value - one;
    CHECK(ga_product(pert, pert).is_zero());
    CHECK(is_integral(u.value));
    CHECK(ga_product(u.value, u.inverse) == one);
    CHECK(ga_product(u.inverse, u.value) == one);
  }
  // beta with g a transposition, h a 3-cycle is nontrivial
  int s = g->generators[1], r = g->generators[0];
  GAElem tilde(g);
  int cur = 0;
  for (long i = 0; i < g->element_order[s]; ++i) {
    tilde.addto(cur, 1);
    cur = g->mul[cur][s];
  }
  GAElem beta = one + ga_product(ga_product(one - ga_element(g, s),
                                            ga_element(g, r)),
                                 tilde);
  CHECK(!(beta == one));
}

TEST_CASE("bicyclic units of SL(2,5) all verify") {
  auto units = bicyclic_units(sl25());
  CHECK(units.size() > 100);
  GAElem one = ga_one(units[0].value.group);
  for (const auto& u : units) CHECK(ga_product(u.value, u.inverse) == one);
}

TEST_CASE("generalized bicyclic units vanish for central idempotents") {
  auto g = g16_6();
  GAElem e(g);
  e.set(0, Rational(1, 2));
  e.set(g->power(g->generators[0], 4), Rational(-1, 2));
  for (int x = 0; x < g->order; ++x)
    CHECK(generalized_bicyclic(e, x).empty());
}

TEST_CASE("generalized bicyclic at b-hat e in SmallGroup(16,6)") {
  auto g = g16_6();
  GAElem e(g);
  e.set(0, Rational(1, 2));
  e.set(g->power(g->generators[0], 4), Rational(-1, 2));
  GAElem f = ga_product(hat_element(g, g->generators[1]), e);
  CHECK(idempotent_denominator(f) == 4);
  // z-minimality: (z/2) f is not integral
  CHECK(!is_integral(Rational(2) * f));
  CHECK(is_integral(Rational(4) * f));
  bool found = false;
  GAElem one = ga_one(g);
  for (int x = 0; x < g->order; ++x) {
    for (const auto& u : generalized_bicyclic(f, x)) {
      found = true;
      CHECK(is_integral(u.value));
      CHECK(ga_product(u.value, u.inverse) == one);
      GAElem pert = u.value - one;
      CHECK(ga_product(pert, pert).is_zero());
    }
  }
  CHECK(found);
}

TEST_CASE("ga_inverse rejects zero divisors") {
  auto g = c_n(2);
  GAElem e(g);
  e.set(0, Rational(1, 2));
  e.set(1, Rational(1, 2));
  CHECK_THROWS_AS(ga_inverse(e), NotInvertible);
}
