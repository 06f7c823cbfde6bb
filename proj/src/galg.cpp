#include "ringunits/galg.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ringunits {

namespace {

void check_same_group(const GAElem& x, const GAElem& y) {
  if (x.group != y.group) throw GroupMismatch("elements of different groups");
}

}  // namespace

GAElem ga_zero(const GroupPtr& g) { return GAElem(g); }

GAElem ga_one(const GroupPtr& g) {
  GAElem x(g);
  x.set(0, 1);
  return x;
}

GAElem ga_element(const GroupPtr& g, int idx) {
  GAElem x(g);
  x.set(idx, 1);
  return x;
}

GAElem ga_from_dense(const GroupPtr& g, const QVec& v) {
  GAElem x(g);
  for (int i = 0; i < g->order; ++i)
    if (v[i] != 0) x.coeffs[i] = v[i];
  return x;
}

GAElem operator+(const GAElem& x, const GAElem& y) {
  check_same_group(x, y);
  GAElem r = x;
  for (const auto& [i, c] : y.coeffs) r.addto(i, c);
  return r;
}

GAElem operator-(const GAElem& x, const GAElem& y) {
  check_same_group(x, y);
  GAElem r = x;
  for (const auto& [i, c] : y.coeffs) r.addto(i, -c);
  return r;
}

GAElem operator*(const Rational& c, const GAElem& x) {
  GAElem r(x.group);
  if (c == 0) return r;
  for (const auto& [i, q] : x.coeffs) r.coeffs[i] = c * q;
  return r;
}

GAElem operator-(const GAElem& x) { return Rational(-1) * x; }

GAElem ga_product_serial(const GAElem& x, const GAElem& y) {
  check_same_group(x, y);
  GAElem r(x.group);
  const auto& mul = x.group->mul;
  for (const auto& [i, ci] : x.coeffs)
    for (const auto& [j, cj] : y.coeffs) r.addto(mul[i][j], ci * cj);
  return r;
}

GAElem ga_product(const GAElem& x, const GAElem& y) {
  check_same_group(x, y);
  const auto& g = x.group;
  const auto& mul = g->mul;
  size_t work = x.coeffs.size() * y.coeffs.size();
  if (work < 4096) return ga_product_serial(x, y);

  std::vector<std::pair<int, Rational>> xs(x.coeffs.begin(), x.coeffs.end());
  QVec acc(g->order, 0);
#ifdef _OPENMP
#pragma omp parallel
  {
    QVec local(g->order, 0);
#pragma omp for schedule(static) nowait
    for (long k = 0; k < (long)xs.size(); ++k) {
      const auto& [i, ci] = xs[k];
      for (const auto& [j, cj] : y.coeffs) local[mul[i][j]] += ci * cj;
    }
#pragma omp critical
    for (int t = 0; t < g->order; ++t)
      if (local[t] != 0) acc[t] += local[t];
  }
#else
  for (const auto& [i, ci] : xs)
    for (const auto& [j, cj] : y.coeffs) acc[mul[i][j]] += ci * cj;
#endif
  return ga_from_dense(g, acc);
}

GAElem involution_star(const GAElem& x) {
  GAElem r(x.group);
  for (const auto& [i, c] : x.coeffs) r.coeffs[x.group->inv[i]] = c;
  return r;
}

GAElem ga_conjugate(const GAElem& x, int g) {
  GAElem r(x.group);
  for (const auto& [i, c] : x.coeffs) r.coeffs[x.group->conj(i, g)] = c;
  return r;
}

GAElem hat(const Subgroup& h) {
  GAElem r(h.parent);
  Rational c(1, (unsigned long)h.order());
  c.canonicalize();
  for (int m : h.members) r.coeffs[m] = c;
  return r;
}

GAElem hat_element(const GroupPtr& g, int x) {
  return hat(cyclic_subgroup(g, x));
}

bool is_idempotent(const GAElem& x) { return ga_product(x, x) == x; }

bool is_central(const GAElem& x) {
  // commuting with every group element suffices (they span QG)
  for (int g = 1; g < x.group->order; ++g)
    if (!(ga_conjugate(x, g) == x)) return false;
  return true;
}

std::vector<int> centralizer_members(const GAElem& x) {
  std::vector<int> out;
  for (int g = 0; g < x.group->order; ++g)
    if (ga_conjugate(x, g) == x) out.push_back(g);
  return out;
}

int idempotent_rank(const GAElem& e) {
  Rational d = Rational(e.group->order) * e.coeff(0);
  if (!is_integer(d)) throw Error("idempotent_rank: non-integral trace");
  return (int)d.get_num().get_si();
}

int corner_dimension(const GAElem& f) {
  const auto& g = f.group;
  Rational tr = 0;
  for (int t = 0; t < g->order; ++t)
    for (const auto& [a, ca] : f.coeffs) {
      // coefficient of t in f*t*f picks b with a*t*b = t
      int b = g->mul[g->mul[g->inv[t]][g->inv[a]]][t];
      tr += ca * f.coeff(b);
    }
  if (!is_integer(tr)) throw Error("corner_dimension: non-integral trace");
  return (int)tr.get_num().get_si();
}

RationalPolynomial minimal_polynomial(const GAElem& x, const GAElem& ambient) {
  if (!(ga_product(x, ambient) == x) || !(ga_product(ambient, x) == x))
    throw NotInCorner("element not in the corner of the given identity");
  SpanBasis span(x.group->order);
  GAElem power = ambient;
  while (true) {
    if (!span.add(power.dense())) {
      auto coords = span.coordinates(power.dense());
      // power = sum coords[i] * x^i, so mu = X^k - sum coords[i] X^i
      std::vector<Rational> c(span.size() + 1, 0);
      for (int i = 0; i < span.size(); ++i) c[i] = -(*coords)[i];
      c[span.size()] = 1;
      return Poly(std::move(c));
    }
    power = ga_product(power, x);
  }
}

GAElem ga_poly_eval(const RationalPolynomial& p, const GAElem& x,
                    const GAElem& ambient) {
  GAElem acc(x.group);
  for (int i = p.degree(); i >= 0; --i) {
    acc = ga_product(acc, x);
    if (p.coeffs[i] != 0) acc = acc + p.coeffs[i] * ambient;
  }
  return acc;
}

GAElem corner_inverse(const GAElem& x, const GAElem& ambient) {
  Poly mu = minimal_polynomial(x, ambient);
  Rational c0 = mu.coeff(0);
  if (c0 == 0) throw NotInvertible("zero divisor in corner");
  // x * q(x) = ambient with q from mu: q = -(mu - c0)/ (c0 X)
  std::vector<Rational> q(mu.degree());
  for (int i = 1; i <= mu.degree(); ++i) q[i - 1] = -mu.coeffs[i] / c0;
  return ga_poly_eval(Poly(std::move(q)), x, ambient);
}

Integer denominator_lcm(const GAElem& x) {
  Integer l = 1;
  for (const auto& [i, c] : x.coeffs) {
    Integer d = denominator(c);
    l = l / gcd(l, d) * d;
  }
  return l;
}

}  // namespace ringunits
