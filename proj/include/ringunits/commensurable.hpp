#pragma once

#include <map>
#include <string>
#include <vector>

#include "ringunits/orders.hpp"
#include "ringunits/table2.hpp"
#include "ringunits/units.hpp"
#include "ringunits/wedderburn.hpp"

namespace ringunits {

/// 2x2 matrix-unit system inside a component QGe; all 16 delta relations
/// are verified exactly at construction.
struct MatrixUnitSystem {
  GAElem e;  // component identity
  GAElem e11, e12, e21, e22;
};

/// Explicit isomorphism data M2(D) -> QGe: the matrix units together with
/// an embedding of the Table 1 order basis of D into the corner e11 QG e11.
struct IsoWitness {
  MatrixUnitSystem units;
  RingTag ring = RingTag::Q;
  std::vector<GAElem> corner_embedding;  // images of maximal_order(ring).basis
  Integer denominator_z = 1;  // lcm of denominators of the generator images
};

struct ComponentDisposition {
  int index = 0;
  int dim_q = 0, degree_n = 0;
  std::string status;  // commutative | g-hat-idempotent | exceptional-U |
                       // totally-definite | type-1 | fixed-point-free |
                       // user-idempotent
  std::string detail;
};

struct MethodReport {
  std::vector<ComponentDisposition> components;
};

struct GeneratorSet {
  std::vector<UnitElement> bass;
  std::vector<UnitElement> bicyclic;
  std::vector<UnitElement> generalized;
  std::vector<UnitElement> exceptional_u;
  MethodReport report;
};

/// Some ghat * e not in {0, e}, scanning group elements in index order.
/// Throws FixedPointFreeComponent when every ghat projects to 0 or e.
GAElem find_noncentral_idempotent(const WedderburnComponent& c);

/// Build matrix units for a degree-2 component from a rank-one f.
/// Candidates: group elements, then +/- sums of two group elements.
MatrixUnitSystem matrix_units(const WedderburnComponent& c, const GAElem& f);

/// Embed the canonical maximal-order basis through the corner; computes the
/// denominator z from the images of the 2|B| elementary generators.
IsoWitness build_iota(const WedderburnComponent& c,
                      const MatrixUnitSystem& mu);

/// The 2|B| square-zero units 1 + psi(x) E12, 1 + E21 psi(x), x in B.
std::vector<UnitElement> u_generators(const IsoWitness& w);

/// Method 4.2 end-to-end.  `user_idempotents` maps a component index to a
/// noncentral idempotent supplied for components where no ghat works.
GeneratorSet method_run(const GroupPtr& g,
                        const std::map<int, GAElem>& user_idempotents = {},
                        unsigned long seed = 0);

}  // namespace ringunits
