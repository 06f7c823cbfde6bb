#include <random>

#include "doctest.h"
#include "ringunits/orders.hpp"
#include "ringunits/sl2.hpp"
#include "ringunits/wedderburn.hpp"
#include "test_helpers.hpp"

using namespace ringunits;
using namespace ringunits::testing;

namespace {

const RingTag kAllTags[] = {RingTag::Q,  RingTag::Qi, RingTag::Qsqrtm2,
                            RingTag::Qsqrtm3, RingTag::H1, RingTag::H3,
                            RingTag::H5};

QVec random_element(std::mt19937_64& rng, const RingShape& r, int num_bound,
                    int den_bound) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound);
  std::uniform_int_distribution<int> den(1, den_bound);
  QVec x(r.qdim);
  for (auto& c : x) {
    c = Rational(num(rng), den(rng));
    c.canonicalize();
  }
  return x;
}

QVec random_order_element(std::mt19937_64& rng,
                          const MaximalOrderDescriptor& o, int bound) {
  std::uniform_int_distribution<int> coord(-bound, bound);
  QVec x = ring_zero(o.ring);
  for (const QVec& b : o.basis) {
    Rational c = coord(rng);
    QVec term = b;
    for (auto& v : term) v *= c;
    x = ring_add(x, term);
  }
  return x;
}

}  // namespace

TEST_CASE("ring arithmetic satisfies norm and trace identities") {
  std::mt19937_64 rng(7);
  for (RingTag t : kAllTags) {
    RingShape r = ring_shape(t);
    for (int it = 0; it < 200; ++it) {
      QVec x = random_element(rng, r, 9, 4);
      QVec y = random_element(rng, r, 9, 4);
      QVec z = random_element(rng, r, 9, 4);
      // associativity and distributivity
      CHECK(ring_mul(r, ring_mul(r, x, y), z) ==
            ring_mul(r, x, ring_mul(r, y, z)));
      CHECK(ring_mul(r, x, ring_add(y, z)) ==
            ring_add(ring_mul(r, x, y), ring_mul(r, x, z)));
      // norm is multiplicative, conj is an anti-automorphism
      CHECK(ring_norm(r, ring_mul(r, x, y)) ==
            ring_norm(r, x) * ring_norm(r, y));
      CHECK(ring_conj(r, ring_mul(r, x, y)) ==
            ring_mul(r, ring_conj(r, y), ring_conj(r, x)));
      // x * conj(x) = N(x), x + conj(x) = tr(x)
      QVec nx = ring_mul(r, x, ring_conj(r, x));
      QVec expect = ring_one(r);
      for (auto& v : expect) v *= ring_norm(r, x);
      CHECK(nx == expect);
      CHECK(ring_trace(r, x) == x[0] * 2 - (r.qdim == 1 ? x[0] : 0));
      if (ring_norm(r, x) != 0) {
        CHECK(ring_mul(r, x, ring_inv(r, x)) == ring_one(r));
        CHECK(ring_mul(r, ring_inv(r, x), x) == ring_one(r));
      }
    }
  }
}

TEST_CASE("maximal orders verify closure and discriminant") {
  for (RingTag t : kAllTags) {
    MaximalOrderDescriptor o = maximal_order(t);
    CHECK((int)o.basis.size() == o.ring.qdim);
    CHECK(o.basis[0] == ring_one(o.ring));
    for (const QVec& b : o.basis) {
      CHECK(in_order(o, b));
      CHECK(ring_norm(o.ring, b) != 0);
    }
  }
}

TEST_CASE("Hurwitz order contains the half-unit") {
  auto o = maximal_order(RingTag::H1);
  QVec h = {Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)};
  CHECK(in_order(o, h));
  CHECK(ring_norm(o.ring, h) == 1);
  QVec g = {Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(-1, 2)};
  CHECK(in_order(o, g));
  // but the Lipschitz-style half with a bad sign pattern relative to the
  // basis is still in the order (index-2 sublattice only misses mixed ones)
  QVec bad = {Rational(1, 2), 0, 0, 0};
  CHECK(!in_order(o, bad));
}

TEST_CASE("euclidean division: pinned Gaussian example") {
  auto o = maximal_order(RingTag::Qi);
  EuclideanResult e = euclidean_divide(o, {Rational(3, 2), Rational(1, 2)});
  CHECK(e.q == QVec{Rational(1), Rational(0)});
  CHECK(e.r == QVec{Rational(1, 2), Rational(1, 2)});
  CHECK(ring_norm(o.ring, e.r) == Rational(1, 2));

  EuclideanResult z = euclidean_divide(o, {Rational(0), Rational(0)});
  CHECK(z.q == ring_zero(o.ring));
  CHECK(z.r == ring_zero(o.ring));
}

TEST_CASE("euclidean division: exact quotients and determinism") {
  std::mt19937_64 rng(11);
  for (RingTag t : kAllTags) {
    auto o = maximal_order(t);
    for (int it = 0; it < 50; ++it) {
      QVec x = random_order_element(rng, o, 20);
      EuclideanResult e = euclidean_divide(o, x);
      CHECK(e.q == x);
      CHECK(e.r == ring_zero(o.ring));
    }
    // same input twice gives identical output
    QVec x = random_element(rng, o.ring, 30, 17);
    EuclideanResult a = euclidean_divide(o, x);
    EuclideanResult b = euclidean_divide(o, x);
    CHECK(a.q == b.q);
  }
}

TEST_CASE("euclidean division: random samples have remainder norm < 1") {
  std::mt19937_64 rng(13);
  for (RingTag t : kAllTags) {
    auto o = maximal_order(t);
    for (int it = 0; it < 2000; ++it) {
      QVec x = random_element(rng, o.ring, 40, 100);
      EuclideanResult e = euclidean_divide(o, x);
      CHECK(in_order(o, e.q));
      CHECK(abs(ring_norm(o.ring, e.r)) < 1);
      CHECK(ring_add(e.q, e.r) == x);
    }
  }
}

TEST_CASE("sl2 generators and elementary matrices") {
  for (RingTag t : kAllTags) {
    auto o = maximal_order(t);
    auto gens = sl2_generators(o);
    CHECK((int)gens.size() == 2 * o.ring.qdim);
    for (const Mat2& m : gens) {
      CHECK(mat2_reduced_norm(o.ring, m) == 1);
      // unipotent: (m - 1)^2 = 0 means m^2 = 2m - 1
      Mat2 sq = mat2_mul(o.ring, m, m);
      Mat2 lin = m;
      auto dbl = [](QVec v) { for (auto& c : v) c *= 2; return v; };
      lin.a = ring_sub(dbl(m.a), ring_one(o.ring));
      lin.b = dbl(m.b);
      lin.c = dbl(m.c);
      lin.d = ring_sub(dbl(m.d), ring_one(o.ring));
      CHECK(mat2_eq(sq, lin));
    }
  }
}

TEST_CASE("reduce_sl2 round trips on random elementary words") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> len(1, 6);
  std::uniform_int_distribution<int> flip(0, 1);
  for (RingTag t : kAllTags) {
    auto o = maximal_order(t);
    for (int it = 0; it < 60; ++it) {
      Mat2 m = mat2_identity(o.ring);
      int L = len(rng);
      for (int k = 0; k < L; ++k) {
        QVec x = random_order_element(rng, o, 3);
        m = mat2_mul(o.ring, m, elementary(o.ring, x, flip(rng) != 0));
      }
      Sl2Reduction red = reduce_sl2(o, m);
      for (const Rational& c : red.residual.c) CHECK(c == 0);
      CHECK(abs(ring_norm(o.ring, red.residual.a)) == 1);
      CHECK(abs(ring_norm(o.ring, red.residual.d)) == 1);
      for (const ElementaryOp& op : red.word) CHECK(in_order(o, op.x));
      CHECK(mat2_eq(sl2_reconstruct(o.ring, red), m));
    }
  }
}

TEST_CASE("reduce_sl2 rejects bad input") {
  auto o = maximal_order(RingTag::Qi);
  Mat2 m = mat2_identity(o.ring);
  m.a = {Rational(2), Rational(0)};  // det 2, not a unit
  CHECK_THROWS_AS(reduce_sl2(o, m), NotUnimodular);
  Mat2 f = mat2_identity(o.ring);
  f.b = {Rational(1, 2), Rational(0)};
  CHECK_THROWS_AS(reduce_sl2(o, f), Error);
}

TEST_CASE("embed canonical quaternion in the Q8 corner") {
  auto g = q8();
  auto dec = decompose(g);
  const WedderburnComponent* h1 = nullptr;
  for (const auto& c : dec)
    if (c.dim_q == 4 && c.degree_n == 1) h1 = &c;
  REQUIRE(h1 != nullptr);
  GAElem f = h1->rank_one;
  QuaternionWitness w =
      embed_canonical_quaternion(h1->corner_basis, f, -1, -1);
  GAElem minus_f = Rational(-1) * f;
  CHECK(ga_product(w.ihat, w.ihat) == minus_f);
  CHECK(ga_product(w.jhat, w.jhat) == minus_f);
  GAElem anti = ga_product(w.ihat, w.jhat) + ga_product(w.jhat, w.ihat);
  CHECK(anti.is_zero());
}

TEST_CASE("quadratic generator in the SmallGroup(16,6) matrix corner") {
  auto g = g16_6();
  auto dec = decompose(g);
  const WedderburnComponent* m2 = nullptr;
  for (const auto& c : dec)
    if (c.degree_n == 2) m2 = &c;
  REQUIRE(m2 != nullptr);
  REQUIRE(m2->center.d == -1);
  // the rank-one corner of M2(Q(i)) is the field Q(i) itself
  GAElem f = m2->rank_one;
  GAElem w = quadratic_generator(m2->corner_basis, f, -1);
  CHECK(ga_product(w, w) == Rational(-1) * f);
}
