#include "ringunits/sl2.hpp"

#include "ringunits/errors.hpp"

namespace ringunits {

Mat2 mat2_identity(const RingShape& r) {
  return {ring_one(r), ring_zero(r), ring_zero(r), ring_one(r)};
}

Mat2 mat2_mul(const RingShape& r, const Mat2& x, const Mat2& y) {
  Mat2 z;
  z.a = ring_add(ring_mul(r, x.a, y.a), ring_mul(r, x.b, y.c));
  z.b = ring_add(ring_mul(r, x.a, y.b), ring_mul(r, x.b, y.d));
  z.c = ring_add(ring_mul(r, x.c, y.a), ring_mul(r, x.d, y.c));
  z.d = ring_add(ring_mul(r, x.c, y.b), ring_mul(r, x.d, y.d));
  return z;
}

bool mat2_eq(const Mat2& x, const Mat2& y) {
  return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

Rational mat2_reduced_norm(const RingShape& r, const Mat2& m) {
  if (r.qdim <= 2) {
    // reduced norm of M2(K) is det in K; report its field norm so the
    // return type is rational for every ring
    QVec det = ring_sub(ring_mul(r, m.a, m.d), ring_mul(r, m.b, m.c));
    return r.qdim == 1 ? det[0] : ring_norm(r, det);
  }
  // quaternion case: nrd = N(a) N(d - c a^{-1} b); swap rows (nrd +1) if
  // the top-left entry is not invertible
  Mat2 w = m;
  if (ring_norm(r, w.a) == 0) {
    if (ring_norm(r, w.c) == 0) return 0;
    std::swap(w.a, w.c);
    std::swap(w.b, w.d);
  }
  QVec schur =
      ring_sub(w.d, ring_mul(r, ring_mul(r, w.c, ring_inv(r, w.a)), w.b));
  return ring_norm(r, w.a) * ring_norm(r, schur);
}

Mat2 elementary(const RingShape& r, const QVec& x, bool upper) {
  Mat2 m = mat2_identity(r);
  if (upper)
    m.b = x;
  else
    m.c = x;
  return m;
}

std::vector<Mat2> sl2_generators(const MaximalOrderDescriptor& o) {
  std::vector<Mat2> out;
  for (const QVec& x : o.basis) out.push_back(elementary(o.ring, x, true));
  for (const QVec& x : o.basis) out.push_back(elementary(o.ring, x, false));
  return out;
}

namespace {

bool is_zero_vec(const QVec& v) {
  for (const Rational& c : v)
    if (c != 0) return false;
  return true;
}

}  // namespace

Sl2Reduction reduce_sl2(const MaximalOrderDescriptor& o, const Mat2& m) {
  const RingShape& r = o.ring;
  for (const QVec* e : {&m.a, &m.b, &m.c, &m.d})
    if (!in_order(o, *e))
      throw Error("reduce_sl2: matrix entries not in the order");
  Mat2 w = m;
  // ops applied on the left, recorded so that product(inverses) * w = m
  std::vector<ElementaryOp> applied;
  auto apply_upper = [&](const QVec& x) {  // R1 <- R1 + x R2
    w.a = ring_add(w.a, ring_mul(r, x, w.c));
    w.b = ring_add(w.b, ring_mul(r, x, w.d));
    applied.push_back({true, x});
  };
  auto apply_lower = [&](const QVec& x) {  // R2 <- R2 + x R1
    w.c = ring_add(w.c, ring_mul(r, x, w.a));
    w.d = ring_add(w.d, ring_mul(r, x, w.b));
    applied.push_back({false, x});
  };

  int guard = 0;
  while (!is_zero_vec(w.c)) {
    if (++guard > 10000) throw Error("reduce_sl2: no convergence");
    if (is_zero_vec(w.a)) {
      apply_upper(ring_one(r));
      continue;
    }
    // left-divide c by a: c = q a + rem
    QVec t = ring_mul(r, w.c, ring_inv(r, w.a));
    EuclideanResult e = euclidean_divide(o, t);
    if (!is_zero_vec(e.q)) {
      apply_lower(ring_neg(e.q));
    } else {
      // N(c) < N(a): shrink a against c first
      QVec t2 = ring_mul(r, w.a, ring_inv(r, w.c));
      EuclideanResult e2 = euclidean_divide(o, t2);
      if (is_zero_vec(e2.q))
        throw EuclideanFailure("reduce_sl2: both quotients vanished");
      apply_upper(ring_neg(e2.q));
    }
  }
  Rational na = abs(ring_norm(r, w.a)), nd = abs(ring_norm(r, w.d));
  if (na != 1 || nd != 1)
    throw NotUnimodular("reduce_sl2: residual diagonal is not a unit");

  Sl2Reduction out;
  out.residual = w;
  // w = E_k ... E_1 m, so m = inv(E_1) ... inv(E_k) w
  for (const ElementaryOp& op : applied)
    out.word.push_back({op.upper, ring_neg(op.x)});
  return out;
}

Mat2 sl2_reconstruct(const RingShape& r, const Sl2Reduction& red) {
  Mat2 acc = mat2_identity(r);
  for (const ElementaryOp& op : red.word)
    acc = mat2_mul(r, acc, elementary(r, op.x, op.upper));
  return mat2_mul(r, acc, red.residual);
}

}  // namespace ringunits
