#include "ringunits/orders.hpp"

#include <algorithm>

#include "ringunits/errors.hpp"

namespace ringunits {

std::string ring_tag_name(RingTag t) {
  switch (t) {
    case RingTag::Q: return "Q";
    case RingTag::Qi: return "Qi";
    case RingTag::Qsqrtm2: return "Qsqrt-2";
    case RingTag::Qsqrtm3: return "Qsqrt-3";
    case RingTag::H1: return "H1";
    case RingTag::H3: return "H3";
    case RingTag::H5: return "H5";
  }
  throw Error("bad ring tag");
}

RingTag ring_tag_from_string(const std::string& s) {
  std::string t = s;
  if (t.rfind("M2", 0) == 0) t = t.substr(2);
  if (t == "Q") return RingTag::Q;
  if (t == "Qi" || t == "Qsqrt-1") return RingTag::Qi;
  if (t == "Qsqrt-2") return RingTag::Qsqrtm2;
  if (t == "Qsqrt-3") return RingTag::Qsqrtm3;
  if (t == "H1") return RingTag::H1;
  if (t == "H3") return RingTag::H3;
  if (t == "H5") return RingTag::H5;
  throw ParseError("unknown ring tag: " + s);
}

RingShape ring_shape(RingTag t) {
  switch (t) {
    case RingTag::Q: return {t, 1, 0, 0};
    case RingTag::Qi: return {t, 2, -1, 0};
    case RingTag::Qsqrtm2: return {t, 2, -2, 0};
    case RingTag::Qsqrtm3: return {t, 2, -3, 0};
    case RingTag::H1: return {t, 4, -1, -1};
    case RingTag::H3: return {t, 4, -1, -3};
    case RingTag::H5: return {t, 4, -2, -5};
  }
  throw Error("bad ring tag");
}

QVec ring_zero(const RingShape& r) { return QVec(r.qdim, 0); }

QVec ring_one(const RingShape& r) {
  QVec v(r.qdim, 0);
  v[0] = 1;
  return v;
}

QVec ring_add(const QVec& x, const QVec& y) {
  QVec z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
  return z;
}

QVec ring_sub(const QVec& x, const QVec& y) {
  QVec z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
  return z;
}

QVec ring_neg(const QVec& x) {
  QVec z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = -x[i];
  return z;
}

QVec ring_mul(const RingShape& r, const QVec& x, const QVec& y) {
  if (r.qdim == 1) return {x[0] * y[0]};
  if (r.qdim == 2)
    return {x[0] * y[0] + r.a * x[1] * y[1], x[0] * y[1] + x[1] * y[0]};
  const Rational &a = r.a, &b = r.b;
  QVec z(4);
  z[0] = x[0] * y[0] + a * x[1] * y[1] + b * x[2] * y[2] -
         a * b * x[3] * y[3];
  z[1] = x[0] * y[1] + x[1] * y[0] + b * (x[3] * y[2] - x[2] * y[3]);
  z[2] = x[0] * y[2] + x[2] * y[0] + a * (x[1] * y[3] - x[3] * y[1]);
  z[3] = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1];
  return z;
}

QVec ring_conj(const RingShape& r, const QVec& x) {
  QVec z = x;
  for (size_t i = 1; i < z.size(); ++i) z[i] = -z[i];
  return z;
}

Rational ring_norm(const RingShape& r, const QVec& x) {
  if (r.qdim == 1) return x[0] * x[0];
  if (r.qdim == 2) return x[0] * x[0] - r.a * x[1] * x[1];
  return x[0] * x[0] - r.a * x[1] * x[1] - r.b * x[2] * x[2] +
         r.a * r.b * x[3] * x[3];
}

Rational ring_trace(const RingShape& r, const QVec& x) {
  return r.qdim == 1 ? x[0] : 2 * x[0];
}

QVec ring_inv(const RingShape& r, const QVec& x) {
  Rational n = ring_norm(r, x);
  if (n == 0) throw NotInvertible("ring element has norm 0");
  if (r.qdim == 1) return {1 / x[0]};
  QVec c = ring_conj(r, x);
  for (auto& v : c) v /= n;
  return c;
}

namespace {

QMat invert_matrix(const QMat& m) {
  int n = (int)m.size();
  QMat aug(n, QVec(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (aug[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw Error("order basis matrix singular");
    std::swap(aug[col], aug[piv]);
    Rational lead = aug[col][col];
    for (auto& v : aug[col]) v /= lead;
    for (int i = 0; i < n; ++i) {
      if (i == col || aug[i][col] == 0) continue;
      Rational f = aug[i][col];
      for (int j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[col][j];
    }
  }
  QMat inv(n, QVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

Rational det(QMat m) {
  int n = (int)m.size();
  Rational d = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap(m[col], m[piv]);
      d = -d;
    }
    d *= m[col][col];
    Rational lead = m[col][col];
    for (int i = col + 1; i < n; ++i) {
      if (m[i][col] == 0) continue;
      Rational f = m[i][col] / lead;
      for (int j = col; j < n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  return d;
}

void verify_order(const MaximalOrderDescriptor& o) {
  const RingShape& r = o.ring;
  int n = r.qdim;
  if ((int)o.basis.size() != n) throw Error("order basis has wrong size");
  if (o.basis[0] != ring_one(r)) throw Error("order basis must start with 1");
  // ring closure: all pairwise products have integer coordinates
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      QVec c = order_coordinates(o, ring_mul(r, o.basis[i], o.basis[j]));
      for (const Rational& v : c)
        if (denominator(v) != 1)
          throw Error("order basis not closed under multiplication");
    }
  // discriminant: det of the trace form on the basis
  QMat gram(n, QVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      gram[i][j] = ring_trace(r, ring_mul(r, o.basis[i], o.basis[j]));
  Rational dd = det(gram);
  Rational expected;
  switch (r.tag) {
    case RingTag::Q: expected = 1; break;
    case RingTag::Qi: expected = -4; break;
    case RingTag::Qsqrtm2: expected = -8; break;
    case RingTag::Qsqrtm3: expected = -3; break;
    default: {
      // maximal quaternion order: |det| = (product of finite ramified primes)^2
      RamificationSet ram = ramification_set({r.a, r.b});
      Rational p = 1;
      for (long q : ram.finite_places) p *= q;
      expected = p * p;
      if (dd < 0) expected = -expected;
      break;
    }
  }
  if (dd != expected) throw Error("order discriminant mismatch");
}

MaximalOrderDescriptor make_order(RingTag tag, std::vector<QVec> basis) {
  MaximalOrderDescriptor o;
  o.ring = ring_shape(tag);
  o.basis = std::move(basis);
  QMat m(o.ring.qdim, QVec(o.ring.qdim));
  for (int j = 0; j < o.ring.qdim; ++j)
    for (int i = 0; i < o.ring.qdim; ++i) m[i][j] = o.basis[j][i];
  o.basis_inverse = invert_matrix(m);
  verify_order(o);
  return o;
}

}  // namespace

MaximalOrderDescriptor maximal_order(RingTag t) {
  const Rational h(1, 2), q(1, 4);
  switch (t) {
    case RingTag::Q:
      return make_order(t, {{1}});
    case RingTag::Qi:
    case RingTag::Qsqrtm2:
      return make_order(t, {{1, 0}, {0, 1}});
    case RingTag::Qsqrtm3:
      return make_order(t, {{1, 0}, {h, h}});  // (1 + sqrt(-3))/2
    case RingTag::H1:
      return make_order(t, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0},
                            {h, h, h, h}});
    case RingTag::H3:
      return make_order(t, {{1, 0, 0, 0}, {0, 1, 0, 0}, {h, 0, h, 0},
                            {0, h, 0, h}});
    case RingTag::H5:
      return make_order(t, {{1, 0, 0, 0},
                            {h, q, 0, -q},      // (2 + i - ij)/4
                            {h, Rational(3, 4), 0, q},  // (2 + 3i + ij)/4
                            {h, h, h, 0}});     // (1 + i + j)/2
  }
  throw Error("bad ring tag");
}

QVec order_coordinates(const MaximalOrderDescriptor& o, const QVec& x) {
  int n = o.ring.qdim;
  QVec c(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[i] += o.basis_inverse[i][j] * x[j];
  return c;
}

bool in_order(const MaximalOrderDescriptor& o, const QVec& x) {
  for (const Rational& v : order_coordinates(o, x))
    if (denominator(v) != 1) return false;
  return true;
}

namespace {

Integer round_half_toward_zero(const Rational& c) {
  Integer num = numerator(c), den = denominator(c);
  Integer q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  // |r/den| > 1/2 ? move one step away from zero; exactly 1/2 stays (toward 0)
  if (2 * abs(r) > den) q += (num < 0 ? -1 : 1);
  return q;
}

}  // namespace

EuclideanResult euclidean_divide(const MaximalOrderDescriptor& o,
                                 const QVec& x) {
  const RingShape& r = o.ring;
  int n = r.qdim;
  QVec coords = order_coordinates(o, x);
  std::vector<Integer> base(n);
  for (int i = 0; i < n; ++i) base[i] = round_half_toward_zero(coords[i]);

  // All candidates are compared over a common denominator so the search
  // runs on integers: with x = X/D and basis columns B_i/D, the remainder
  // of candidate c is (X - sum c_i B_i)/D and norms scale by D^2.
  Integer d = 1;
  for (const Rational& v : x) d = lcm(d, denominator(v));
  for (const QVec& b : o.basis)
    for (const Rational& v : b) d = lcm(d, denominator(v));
  std::vector<Integer> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = numerator(x[i] * d);
  std::vector<std::vector<Integer>> bs(n, std::vector<Integer>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) bs[i][j] = numerator(o.basis[i][j] * d);
  // integral norm coefficients: N(v) = sum w_j v_j^2 (a, b integral for
  // all seven rings)
  std::vector<Integer> w(n, 1);
  if (n >= 2) w[1] = -numerator(r.a);
  if (n == 4) {
    w[2] = -numerator(r.b);
    w[3] = numerator(r.a) * numerator(r.b);
  }
  std::vector<Integer> rem_base(n);
  for (int i = 0; i < n; ++i) {
    rem_base[i] = xs[i];
    for (int j = 0; j < n; ++j) rem_base[i] -= base[j] * bs[j][i];
  }

  bool have = false;
  Integer best_norm;
  std::vector<Integer> best(n);
  std::vector<int> off(n, -1);
  std::vector<Integer> rem(n), cand(n);
  Integer nr, t;
  while (true) {
    for (int i = 0; i < n; ++i) cand[i] = base[i] + off[i];
    rem = rem_base;
    for (int j = 0; j < n; ++j) {
      if (off[j] == 0) continue;
      for (int i = 0; i < n; ++i)
        if (off[j] > 0)
          rem[i] -= bs[j][i];
        else
          rem[i] += bs[j][i];
    }
    nr = 0;
    for (int i = 0; i < n; ++i) {
      t = rem[i] * rem[i];
      nr += w[i] * t;
    }
    nr = abs(nr);
    bool better = !have || nr < best_norm ||
                  (nr == best_norm && cand < best);
    if (better) {
      have = true;
      best_norm = nr;
      best = cand;
    }
    int i = n - 1;
    while (i >= 0 && off[i] == 1) off[i--] = -1;
    if (i < 0) break;
    ++off[i];
  }
  if (best_norm >= d * d)
    throw EuclideanFailure("no candidate with remainder norm < 1");
  QVec best_q = ring_zero(r);
  for (int i = 0; i < n; ++i) {
    QVec term = o.basis[i];
    for (auto& v : term) v *= Rational(best[i]);
    best_q = ring_add(best_q, term);
  }
  EuclideanResult out;
  out.q_coords.resize(n);
  for (int i = 0; i < n; ++i) out.q_coords[i] = Rational(best[i]);
  out.q = best_q;
  out.r = ring_sub(x, best_q);
  return out;
}

// ---------------------------------------------------------------------------
// Canonical quaternion witnesses inside a corner
// ---------------------------------------------------------------------------

namespace {

std::optional<Rational> corner_scalar(const GAElem& x, const GAElem& f) {
  if (x.is_zero()) return Rational(0);
  auto it = f.coeffs.begin();
  Rational lam = x.coeff(it->first) / it->second;
  if ((x - lam * f).is_zero()) return lam;
  return std::nullopt;
}

}  // namespace

QuaternionWitness embed_canonical_quaternion(
    const std::vector<GAElem>& corner_basis, const GAElem& identity,
    const Rational& a0, const Rational& b0, const EmbedOptions& opts) {
  const GroupPtr& g = identity.group;
  // pure (trace-zero) space
  SpanBasis pure(g->order);
  std::vector<GAElem> p;
  for (const GAElem& x : corner_basis) {
    Poly mu = minimal_polynomial(x, identity);
    if (mu.degree() == 1) continue;
    if (mu.degree() != 2)
      throw Error("embed: corner element of degree > 2 over Q");
    GAElem cand = x + (mu.coeff(1) / 2) * identity;
    if (cand.is_zero()) continue;
    if (pure.add(cand.dense())) p.push_back(std::move(cand));
  }
  if (p.size() != 3) throw Error("embed: pure space is not 3-dimensional");
  // Gram matrix of the squaring form: x^2 = q(x) * identity for pure x,
  // with q(sum n_i p_i) = sum n_i n_j G_ij, G_ij = (p_i p_j + p_j p_i)/2.
  QMat gram(3, QVec(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      auto s = corner_scalar(ga_product(p[i], p[j]) + ga_product(p[j], p[i]),
                             identity);
      if (!s) throw Error("embed: squaring form not scalar");
      gram[i][j] = *s / 2;
    }
  auto qform = [&](const QVec& v) {
    Rational acc = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) acc += v[i] * v[j] * gram[i][j];
    return acc;
  };
  auto bform = [&](const QVec& v, const QVec& w) {
    Rational acc = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) acc += v[i] * w[j] * gram[i][j];
    return acc;
  };
  auto assemble = [&](const QVec& v) {
    GAElem x(g);
    for (int i = 0; i < 3; ++i)
      if (v[i] != 0) x = x + v[i] * p[i];
    return x;
  };

  const int N = opts.coord_bound;
  std::optional<QVec> iv;
  for (int den = 1; den <= opts.den_bound && !iv; ++den) {
    for (int n1 = -N; n1 <= N && !iv; ++n1)
      for (int n2 = -N; n2 <= N && !iv; ++n2)
        for (int n3 = -N; n3 <= N && !iv; ++n3) {
          if (!n1 && !n2 && !n3) continue;
          QVec v{Rational(n1, den), Rational(n2, den), Rational(n3, den)};
          if (qform(v) == a0) iv = v;
        }
  }
  if (!iv)
    throw SearchExhausted("embed: no i-witness in coordinate box " +
                          std::to_string(N));
  std::optional<QVec> jv;
  for (int den = 1; den <= opts.den_bound && !jv; ++den) {
    for (int n1 = -N; n1 <= N && !jv; ++n1)
      for (int n2 = -N; n2 <= N && !jv; ++n2)
        for (int n3 = -N; n3 <= N && !jv; ++n3) {
          if (!n1 && !n2 && !n3) continue;
          QVec v{Rational(n1, den), Rational(n2, den), Rational(n3, den)};
          if (qform(v) == b0 && bform(*iv, v) == 0) jv = v;
        }
  }
  if (!jv)
    throw SearchExhausted("embed: no j-witness in coordinate box " +
                          std::to_string(N));
  QuaternionWitness w;
  w.ihat = assemble(*iv);
  w.jhat = assemble(*jv);
  // verify relations exactly
  if (!(ga_product(w.ihat, w.ihat) == a0 * identity) ||
      !(ga_product(w.jhat, w.jhat) == b0 * identity) ||
      !(ga_product(w.ihat, w.jhat) + ga_product(w.jhat, w.ihat)).is_zero())
    throw Error("embed: witness relations failed verification");
  return w;
}

GAElem quadratic_generator(const std::vector<GAElem>& corner_basis,
                           const GAElem& identity, long d) {
  for (const GAElem& x : corner_basis) {
    if (corner_scalar(x, identity)) continue;
    Poly mu = minimal_polynomial(x, identity);
    if (mu.degree() != 2) continue;
    Rational disc = mu.coeff(1) * mu.coeff(1) / 4 - mu.coeff(0);
    SquarefreeSplit sq = squarefree_split(disc);
    if (sq.d != d) continue;
    GAElem w = (Rational(1) / sq.s) * (x + (mu.coeff(1) / 2) * identity);
    if (!(ga_product(w, w) == Rational(d) * identity))
      throw Error("quadratic generator verification failed");
    return w;
  }
  throw SearchExhausted("no quadratic generator with the requested d");
}

}  // namespace ringunits
