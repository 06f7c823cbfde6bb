#pragma once

#include <map>

#include "ringunits/fingroup.hpp"
#include "ringunits/linalg.hpp"
#include "ringunits/poly.hpp"
#include "ringunits/rational.hpp"

namespace ringunits {

/// Sparse exact element of the rational group algebra QG.
struct GAElem {
  GroupPtr group;
  std::map<int, Rational> coeffs;  // element index -> nonzero coefficient

  GAElem() = default;
  explicit GAElem(GroupPtr g) : group(std::move(g)) {}

  Rational coeff(int idx) const {
    auto it = coeffs.find(idx);
    return it == coeffs.end() ? Rational(0) : it->second;
  }
  void set(int idx, const Rational& c) {
    if (c == 0)
      coeffs.erase(idx);
    else
      coeffs[idx] = c;
  }
  void addto(int idx, const Rational& c) { set(idx, coeff(idx) + c); }
  bool is_zero() const { return coeffs.empty(); }

  QVec dense() const {
    QVec v(group->order, 0);
    for (const auto& [i, c] : coeffs) v[i] = c;
    return v;
  }

  friend bool operator==(const GAElem& a, const GAElem& b) {
    return a.coeffs == b.coeffs;
  }
};

GAElem ga_zero(const GroupPtr& g);
GAElem ga_one(const GroupPtr& g);
GAElem ga_element(const GroupPtr& g, int idx);  // a single basis element
GAElem ga_from_dense(const GroupPtr& g, const QVec& v);

GAElem operator+(const GAElem& x, const GAElem& y);
GAElem operator-(const GAElem& x, const GAElem& y);
GAElem operator*(const Rational& c, const GAElem& x);
GAElem operator-(const GAElem& x);

/// Exact convolution product.  Dense accumulation, OpenMP over the sparser
/// factor's support when it pays off.
GAElem ga_product(const GAElem& x, const GAElem& y);
/// Pure map-based reference implementation, kept for testing the kernel.
GAElem ga_product_serial(const GAElem& x, const GAElem& y);

/// The standard involution  sum a_g g  ->  sum a_g g^-1.
GAElem involution_star(const GAElem& x);

/// g^-1 x g.
GAElem ga_conjugate(const GAElem& x, int g);

/// Averaged subgroup sum  (1/|H|) sum_{h in H} h.
GAElem hat(const Subgroup& h);
/// hat of the cyclic subgroup generated by an element.
GAElem hat_element(const GroupPtr& g, int x);

bool is_idempotent(const GAElem& x);
bool is_central(const GAElem& x);

/// Members of C_G(x) = {g : g^-1 x g = x}.
std::vector<int> centralizer_members(const GAElem& x);

/// dim_Q of the left ideal QGe for an idempotent e equals |G| * coeff_1(e).
int idempotent_rank(const GAElem& e);

/// trace of x -> f x f on QG; for idempotent f this is dim_Q f QG f.
int corner_dimension(const GAElem& f);

/// Monic least-degree polynomial with mu(x) = 0 inside the corner algebra
/// whose identity is `ambient` (an idempotent commuting with x).
RationalPolynomial minimal_polynomial(const GAElem& x, const GAElem& ambient);

/// Two-sided inverse of x in the corner with identity `ambient`, via the
/// minimal polynomial.  Throws NotInvertible when x is a zero divisor.
GAElem corner_inverse(const GAElem& x, const GAElem& ambient);

/// Evaluate p(x) inside the corner with identity `ambient`.
GAElem ga_poly_eval(const RationalPolynomial& p, const GAElem& x,
                    const GAElem& ambient);

/// lcm of coefficient denominators (1 for the zero element).
Integer denominator_lcm(const GAElem& x);

}  // namespace ringunits
