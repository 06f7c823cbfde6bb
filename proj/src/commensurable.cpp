#include "ringunits/commensurable.hpp"

#include <numeric>
#include <set>

#include "ringunits/errors.hpp"

namespace ringunits {

namespace {

bool relation_check(const MatrixUnitSystem& s) {
  const GAElem* E[2][2] = {{&s.e11, &s.e12}, {&s.e21, &s.e22}};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          GAElem p = ga_product(*E[a][b], *E[c][d]);
          if (b == c) {
            if (!(p == *E[a][d])) return false;
          } else if (!p.is_zero()) {
            return false;
          }
        }
  return s.e11 + s.e22 == s.e;
}

std::vector<GAElem> corner_basis_for(const GAElem& f) {
  const GroupPtr& g = f.group;
  int target = corner_dimension(f);
  SpanBasis span(g->order);
  std::vector<GAElem> basis;
  for (int i = 0; i < g->order && (int)basis.size() < target; ++i) {
    GAElem t = ga_product(ga_product(f, ga_element(g, i)), f);
    if (!t.is_zero() && span.add(t.dense())) basis.push_back(t);
  }
  if ((int)basis.size() != target)
    throw Error("corner basis incomplete");
  return basis;
}

}  // namespace

GAElem find_noncentral_idempotent(const WedderburnComponent& c) {
  const GAElem& e = c.e.value;
  const GroupPtr& g = e.group;
  for (int i = 1; i < g->order; ++i) {
    GAElem f = ga_product(hat_element(g, i), e);
    if (!f.is_zero() && !(f == e)) return f;
  }
  throw FixedPointFreeComponent(
      "every ghat projects to 0 or e on this component");
}

MatrixUnitSystem matrix_units(const WedderburnComponent& c, const GAElem& f) {
  if (c.degree_n != 2)
    throw Error("matrix_units requires a degree-2 component");
  const GAElem& e = c.e.value;
  const GroupPtr& g = e.group;
  if (!is_idempotent(f) || !(ga_product(f, e) == f) || f.is_zero() || f == e)
    throw Error("matrix_units: f is not a proper idempotent below e");
  GAElem ef = e - f;

  auto try_pair = [&](const GAElem& x, const GAElem& y,
                      MatrixUnitSystem& out) {
    if (y.is_zero()) return false;
    GAElem xy = ga_product(x, y);
    if (xy.is_zero()) return false;
    GAElem inv;
    try {
      inv = corner_inverse(xy, f);
    } catch (const NotInvertible&) {
      return false;
    }
    out.e = e;
    out.e11 = f;
    out.e12 = x;
    out.e21 = ga_product(y, inv);
    out.e22 = ef;
    return relation_check(out);
  };

  auto try_candidate = [&](const GAElem& u, MatrixUnitSystem& out) {
    GAElem x = ga_product(ga_product(f, u), ef);
    if (x.is_zero()) return false;
    GAElem y = ga_product(ga_product(ef, involution_star(u)), f);
    if (try_pair(x, y, out)) return true;
    for (int v = 0; v < g->order; ++v) {
      y = ga_product(ga_product(ef, ga_element(g, v)), f);
      if (try_pair(x, y, out)) return true;
    }
    return false;
  };

  MatrixUnitSystem out;
  for (int i = 0; i < g->order; ++i)
    if (try_candidate(ga_element(g, i), out)) return out;
  for (int i = 0; i < g->order; ++i)
    for (int j = i + 1; j < g->order; ++j) {
      if (try_candidate(ga_element(g, i) + ga_element(g, j), out)) return out;
      if (try_candidate(ga_element(g, i) - ga_element(g, j), out)) return out;
    }
  throw SearchExhausted("no matrix-unit system within the candidate budget");
}

IsoWitness build_iota(const WedderburnComponent& c,
                      const MatrixUnitSystem& mu) {
  ExceptionalType exc = classify_exceptional(c);
  if (exc.tag != ExceptionalTag::Type2)
    throw MethodInapplicable("build_iota requires a type-2 component");
  IsoWitness w;
  w.units = mu;
  w.ring = exc.ring;
  MaximalOrderDescriptor ord = maximal_order(w.ring);
  const RingShape& shape = ord.ring;
  const GAElem& f = mu.e11;
  std::vector<GAElem> cb = corner_basis_for(f);

  // images of the ring generators 1, s (fields) or 1, i, j, ij
  std::vector<GAElem> gens;
  gens.push_back(f);
  if (shape.qdim == 2) {
    long d = numerator(shape.a).get_si();
    gens.push_back(quadratic_generator(cb, f, d));
  } else if (shape.qdim == 4) {
    QuaternionWitness qw =
        embed_canonical_quaternion(cb, f, shape.a, shape.b);
    gens.push_back(qw.ihat);
    gens.push_back(qw.jhat);
    gens.push_back(ga_product(qw.ihat, qw.jhat));
  }
  auto psi = [&](const QVec& x) {
    GAElem img(f.group);
    for (int k = 0; k < shape.qdim; ++k) img = img + x[k] * gens[k];
    return img;
  };
  for (const QVec& b : ord.basis) w.corner_embedding.push_back(psi(b));

  // psi must be multiplicative on all basis products
  for (int i = 0; i < shape.qdim; ++i)
    for (int j = 0; j < shape.qdim; ++j) {
      GAElem lhs = ga_product(w.corner_embedding[i], w.corner_embedding[j]);
      if (!(lhs == psi(ring_mul(shape, ord.basis[i], ord.basis[j]))))
        throw Error("corner embedding is not multiplicative");
    }

  w.denominator_z = 1;
  for (const QVec& b : ord.basis) {
    GAElem up = mu.e + ga_product(psi(b), mu.e12);
    GAElem lo = mu.e + ga_product(mu.e21, psi(b));
    w.denominator_z = lcm(w.denominator_z, denominator_lcm(up));
    w.denominator_z = lcm(w.denominator_z, denominator_lcm(lo));
  }
  return w;
}

std::vector<UnitElement> u_generators(const IsoWitness& w) {
  const GroupPtr& g = w.units.e.group;
  GAElem one = ga_one(g);
  std::vector<UnitElement> out;
  int k = 0;
  for (const GAElem& psi_b : w.corner_embedding) {
    ++k;
    for (bool upper : {true, false}) {
      GAElem pert = upper ? ga_product(psi_b, w.units.e12)
                          : ga_product(w.units.e21, psi_b);
      if (!ga_product(pert, pert).is_zero())
        throw Error("exceptional generator is not square-zero");
      if (w.denominator_z % denominator_lcm(pert) != 0)
        throw Error("exceptional generator denominator exceeds z");
      UnitElement u;
      u.value = one + pert;
      u.inverse = one - pert;
      u.kind = UnitKind::Exceptional;
      u.label = std::string("U(") + (upper ? "upper" : "lower") + ",b" +
                std::to_string(k) + ")";
      out.push_back(std::move(u));
    }
  }
  return out;
}

namespace {

void append_bass_units(const GroupPtr& g, std::vector<UnitElement>& out) {
  std::set<std::map<int, Rational>> seen;
  for (int e = 1; e < g->order; ++e) {
    long n = g->element_order[e];
    for (long k = 2; k < n; ++k) {
      if (std::gcd(k, n) != 1) continue;
      long m = 1, acc = k % n;
      while (acc != 1) {
        acc = acc * k % n;
        ++m;
      }
      UnitElement u = bass_unit(g, e, k, m);
      if (u.value == ga_one(g)) continue;
      if (seen.insert(u.value.coeffs).second) out.push_back(std::move(u));
    }
  }
}

bool commutative_component(const WedderburnComponent& c) {
  return c.division.dim == c.center.dim;
}

bool totally_definite_component(const WedderburnComponent& c) {
  const DivisionDescriptor& d = c.division;
  if (d.totally_definite) return true;
  return d.kind == DivisionKind::QuaternionOverQ && d.a < 0 && d.b < 0;
}

}  // namespace

GeneratorSet method_run(const GroupPtr& g,
                        const std::map<int, GAElem>& user_idempotents,
                        unsigned long seed) {
  GeneratorSet out;
  append_bass_units(g, out.bass);
  out.bicyclic = bicyclic_units(g);

  std::vector<WedderburnComponent> dec = decompose(g, seed);
  std::set<std::map<int, Rational>> seen_generalized;
  for (int i = 0; i < (int)dec.size(); ++i) {
    const WedderburnComponent& c = dec[i];
    ComponentDisposition d;
    d.index = i;
    d.dim_q = c.dim_q;
    d.degree_n = c.degree_n;
    ExceptionalType exc = classify_exceptional(c);

    if (c.degree_n == 1) {
      if (commutative_component(c)) {
        d.status = "commutative";
      } else if (totally_definite_component(c)) {
        d.status = "totally-definite";
        d.detail = "finite unit group, no generators needed";
      } else if (exc.tag == ExceptionalTag::Type1) {
        d.status = "type-1";
        d.detail = "exceptional division component, outside Method 4.2";
      } else {
        d.status = exc.unresolved ? "unresolved" : "division";
      }
      out.report.components.push_back(std::move(d));
      continue;
    }

    GAElem f;
    try {
      f = find_noncentral_idempotent(c);
      d.status = "g-hat-idempotent";
    } catch (const FixedPointFreeComponent&) {
      auto it = user_idempotents.find(i);
      if (it == user_idempotents.end())
        throw MethodInapplicable(
            "component " + std::to_string(i) +
            " (dim " + std::to_string(c.dim_q) +
            ") has no ghat idempotent and none was supplied");
      f = it->second;
      if (!is_idempotent(f) || !(ga_product(f, c.e.value) == f) ||
          f.is_zero() || f == c.e.value)
        throw Error("supplied idempotent invalid for component " +
                    std::to_string(i));
      d.status = "user-idempotent";
    }

    for (int x = 0; x < g->order; ++x)
      for (UnitElement& u : generalized_bicyclic(f, x)) {
        u.label += "@c" + std::to_string(i);
        if (seen_generalized.insert(u.value.coeffs).second)
          out.generalized.push_back(std::move(u));
      }

    if (exc.tag == ExceptionalTag::Type2) {
      MatrixUnitSystem mu = matrix_units(c, f);
      IsoWitness w = build_iota(c, mu);
      for (UnitElement& u : u_generators(w)) {
        u.label += "@c" + std::to_string(i);
        out.exceptional_u.push_back(std::move(u));
      }
      d.status = "exceptional-U";
      d.detail = ring_tag_name(w.ring) +
                 ", z = " + w.denominator_z.get_str();
    } else if (exc.unresolved) {
      d.detail = "division ring not certified";
    }
    out.report.components.push_back(std::move(d));
  }
  return out;
}

}  // namespace ringunits
