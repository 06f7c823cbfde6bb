#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ringunits/rational.hpp"

namespace ringunits {

/// Dense polynomial over Q, coefficients low-to-high, no trailing zeros.
/// The zero polynomial has an empty coefficient list and degree -1.
struct RationalPolynomial {
  std::vector<Rational> coeffs;

  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> c) : coeffs(std::move(c)) {
    normalize();
  }

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  Rational coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(coeffs.size())) ? coeffs[i]
                                                           : Rational(0);
  }
  Rational leading() const { return coeffs.empty() ? Rational(0) : coeffs.back(); }
  void normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }
  bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }

  Rational eval(const Rational& x) const;
  std::string to_string() const;  // human-readable, variable X

  friend bool operator==(const RationalPolynomial& a,
                         const RationalPolynomial& b) {
    return a.coeffs == b.coeffs;
  }
};

using Poly = RationalPolynomial;

Poly poly_from_longs(const std::vector<long>& c);
Poly poly_x();  // X
Poly poly_const(const Rational& c);

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rational& c, const Poly& a);

/// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly derivative(const Poly& a);
/// Monic gcd.
Poly poly_gcd(Poly a, Poly b);
/// g = gcd = s*a + t*b, g monic (or zero).
struct XgcdResult {
  Poly g, s, t;
};
XgcdResult poly_xgcd(const Poly& a, const Poly& b);
Poly monic(const Poly& a);

/// Irreducible monic factors with multiplicities; the product of the factors
/// (each to its multiplicity) times the leading coefficient reproduces the
/// input.  Squarefree decomposition, then factorization modulo a good prime
/// with Hensel lifting and subset recombination.
std::vector<std::pair<Poly, int>> factor_rational_poly(const Poly& p);

}  // namespace ringunits
