#include "ringunits/units.hpp"

#include <set>

#include "ringunits/errors.hpp"
#include "ringunits/linalg.hpp"

namespace ringunits {

bool is_integral(const GAElem& x) {
  for (const auto& [i, c] : x.coeffs)
    if (denominator(c) != 1) return false;
  return true;
}

GAElem ga_inverse(const GAElem& x) {
  const GroupPtr& g = x.group;
  int n = g->order;
  QMat m(n, QVec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = x.coeff(g->mul[i][g->inv[j]]);
  QVec rhs(n, 0);
  rhs[0] = 1;
  auto sol = solve_linear(std::move(m), std::move(rhs));
  if (!sol) throw NotInvertible("element has no inverse in QG");
  GAElem y = ga_from_dense(g, *sol);
  if (!(ga_product(x, y) == ga_one(g)) || !(ga_product(y, x) == ga_one(g)))
    throw NotInvertible("inverse verification failed");
  return y;
}

namespace {

// 1 + g + ... + g^{k-1}
GAElem partial_geometric(const GroupPtr& g, int elem, long k) {
  GAElem s(g);
  int cur = 0;
  for (long i = 0; i < k; ++i) {
    s.addto(cur, 1);
    cur = g->mul[cur][elem];
  }
  return s;
}

UnitElement make_square_zero_unit(GAElem value, UnitKind kind,
                                  std::string label) {
  GAElem one = ga_one(value.group);
  GAElem pert = value - one;
  if (!ga_product(pert, pert).is_zero())
    throw Error("bicyclic perturbation does not square to zero");
  if (!is_integral(value)) throw Error("bicyclic unit not integral");
  UnitElement u;
  u.inverse = one + one - value;  // (value-1)^2 = 0  =>  value(2-value) = 1
  u.value = std::move(value);
  u.kind = kind;
  u.label = std::move(label);
  return u;
}

}  // namespace

UnitElement bass_unit(const GroupPtr& g, int elem, long k, long m) {
  long n = g->element_order[elem];
  UnitElement u;
  u.kind = UnitKind::Bass;
  u.label = "bass(g" + std::to_string(elem) + ",k=" + std::to_string(k) +
            ",m=" + std::to_string(m) + ")";
  if (n == 1) {
    u.value = ga_one(g);
    u.inverse = ga_one(g);
    return u;
  }
  if (k < 1 || k >= n) throw BadExponents("bass_unit: need 1 <= k < o(g)");
  Integer km;
  mpz_ui_pow_ui(km.get_mpz_t(), (unsigned long)k, (unsigned long)m);
  if (km % n != 1) throw BadExponents("bass_unit: k^m != 1 mod o(g)");
  GAElem s = partial_geometric(g, elem, k);
  GAElem acc = ga_one(g);
  for (long i = 0; i < m; ++i) acc = ga_product(acc, s);
  Rational coef = Rational(1 - km) / Rational(n);
  u.value = acc + coef * partial_geometric(g, elem, n);
  if (!is_integral(u.value)) throw Error("bass unit not integral");
  u.inverse = ga_inverse(u.value);
  if (!is_integral(u.inverse)) throw Error("bass unit inverse not integral");
  return u;
}

std::vector<UnitElement> bicyclic_units(const GroupPtr& g) {
  std::vector<UnitElement> out;
  std::set<std::map<int, Rational>> seen;
  GAElem one = ga_one(g);
  for (int a = 1; a < g->order; ++a) {
    long n = g->element_order[a];
    GAElem tilde = partial_geometric(g, a, n);
    GAElem one_minus_a = one - ga_element(g, a);
    for (int h = 1; h < g->order; ++h) {
      GAElem hh = ga_element(g, h);
      GAElem beta = one + ga_product(ga_product(one_minus_a, hh), tilde);
      GAElem gamma = one + ga_product(ga_product(tilde, hh), one_minus_a);
      for (auto* v : {&beta, &gamma}) {
        if (*v == one) continue;
        if (!seen.insert(v->coeffs).second) continue;
        const char* name = v == &beta ? "beta" : "gamma";
        out.push_back(make_square_zero_unit(
            std::move(*v), UnitKind::Bicyclic,
            std::string(name) + "(g" + std::to_string(a) + ",g" +
                std::to_string(h) + ")"));
      }
    }
  }
  return out;
}

Integer idempotent_denominator(const GAElem& e) { return denominator_lcm(e); }

std::vector<UnitElement> generalized_bicyclic(const GAElem& e, int elem) {
  const GroupPtr& g = e.group;
  GAElem one = ga_one(g);
  Integer z = idempotent_denominator(e);
  Rational z2(z * z);
  GAElem x = ga_element(g, elem);
  GAElem comp = one - e;
  GAElem beta = one + z2 * ga_product(ga_product(comp, x), e);
  GAElem gamma = one + z2 * ga_product(ga_product(e, x), comp);
  std::vector<UnitElement> out;
  if (!(beta == one))
    out.push_back(make_square_zero_unit(
        std::move(beta), UnitKind::GeneralizedBicyclic,
        "gbeta(g" + std::to_string(elem) + ",z=" + z.get_str() + ")"));
  if (!(gamma == one))
    out.push_back(make_square_zero_unit(
        std::move(gamma), UnitKind::GeneralizedBicyclic,
        "ggamma(g" + std::to_string(elem) + ",z=" + z.get_str() + ")"));
  return out;
}

}  // namespace ringunits
