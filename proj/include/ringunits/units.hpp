#pragma once

#include <string>
#include <vector>

#include "ringunits/galg.hpp"

namespace ringunits {

enum class UnitKind { Bass, Bicyclic, GeneralizedBicyclic, Exceptional };

struct UnitElement {
  GAElem value;
  GAElem inverse;
  UnitKind kind = UnitKind::Bass;
  std::string label;  // e.g. "bass(g3,k=2,m=4)", "beta(g2,g5)"
};

/// u_{k,m}(g) = (1+g+...+g^{k-1})^m + ((1-k^m)/n)(1+g+...+g^{n-1}), n = o(g).
/// Requires k^m = 1 mod n; the inverse is solved exactly and checked integral.
UnitElement bass_unit(const GroupPtr& g, int elem, long k, long m);

/// All nontrivial beta_{g,h} = 1 + (1-g)h g~ and gamma_{g,h} = 1 + g~ h(1-g)
/// over ordered pairs (g,h), deduplicated (g~ = 1+g+...+g^{n-1}).
std::vector<UnitElement> bicyclic_units(const GroupPtr& g);

/// beta = 1 + z^2 (1-e) x e,  gamma = 1 + z^2 e x (1-e)  for an idempotent e
/// and group element x, with z the lcm of coefficient denominators of e.
/// Trivial (= 1) entries are omitted.
std::vector<UnitElement> generalized_bicyclic(const GAElem& e, int elem);

/// Smallest positive integer z with z*e in ZG.
Integer idempotent_denominator(const GAElem& e);

/// Exact two-sided inverse in QG; throws NotInvertible.
GAElem ga_inverse(const GAElem& x);

/// All coefficients integral?
bool is_integral(const GAElem& x);

}  // namespace ringunits
