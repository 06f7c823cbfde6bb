#include "ringunits/poly.hpp"

#include <sstream>

namespace ringunits {

Rational RationalPolynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

std::string RationalPolynomial::to_string() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] == 0) continue;
    Rational c = coeffs[i];
    if (!first) os << (c > 0 ? " + " : " - ");
    if (first && c < 0) os << "-";
    Rational ac = abs(c);
    first = false;
    if (i == 0 || ac != 1) os << rat_to_string(ac);
    if (i > 0) {
      os << "X";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Poly poly_from_longs(const std::vector<long>& c) {
  std::vector<Rational> q(c.begin(), c.end());
  return Poly(std::move(q));
}

Poly poly_x() { return poly_from_longs({0, 1}); }
Poly poly_const(const Rational& c) { return Poly({c}); }

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs.size(); ++j)
      c[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return Poly(std::move(c));
}

Poly operator*(const Rational& c, const Poly& a) {
  std::vector<Rational> r = a.coeffs;
  for (auto& q : r) q *= c;
  return Poly(std::move(r));
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error("poly_divmod: division by zero");
  Poly r = a;
  if (a.degree() < b.degree()) return {Poly(), r};
  std::vector<Rational> q(a.degree() - b.degree() + 1, 0);
  Rational lead = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    Rational f = r.leading() / lead;
    q[shift] = f;
    for (int i = 0; i <= b.degree(); ++i) r.coeffs[i + shift] -= f * b.coeffs[i];
    r.normalize();
  }
  return {Poly(std::move(q)), r};
}

Poly derivative(const Poly& a) {
  if (a.degree() < 1) return Poly();
  std::vector<Rational> c(a.degree());
  for (int i = 1; i <= a.degree(); ++i) c[i - 1] = Rational(i) * a.coeffs[i];
  return Poly(std::move(c));
}

Poly monic(const Poly& a) {
  if (a.is_zero()) return a;
  return (Rational(1) / a.leading()) * a;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

XgcdResult poly_xgcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly s0 = poly_const(1), s1;
  Poly t0, t1 = poly_const(1);
  while (!r1.is_zero()) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly s = s0 - q * s1;
    Poly t = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (!r0.is_zero()) {
    Rational inv = Rational(1) / r0.leading();
    r0 = inv * r0;
    s0 = inv * s0;
    t0 = inv * t0;
  }
  return {r0, s0, t0};
}

}  // namespace ringunits
