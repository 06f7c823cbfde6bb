#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringunits/orders.hpp"
#include "ringunits/wedderburn.hpp"

namespace ringunits {

struct Table2Row {
  long order = 0, index = 0;  // SmallGroup ID
  std::string structure;
  std::vector<std::pair<int, RingTag>> components;  // (multiplicity, ring)
};

/// The bundled 55-row catalog of groups with faithful exceptional
/// components; loaded once and validated (exactly 55 rows, known tags).
const std::vector<Table2Row>& table2();

std::optional<Table2Row> table2_lookup(long order, long index);

enum class ExceptionalTag { None, Type1, Type2 };

struct ExceptionalType {
  ExceptionalTag tag = ExceptionalTag::None;
  RingTag ring = RingTag::Q;       // Type2: which of the seven rings
  DivisionDescriptor descriptor;   // Type1: the division algebra
  bool unresolved = false;         // None because the corner was not certified
};

/// Type 1: a noncommutative division component that is not a totally
/// definite quaternion algebra.  Type 2: M2(D) with D one of the seven
/// rings.  Throws TheoremViolation when a 2x2 component lands outside the
/// classified lists (imaginary quadratic field with d not in {-1,-2,-3},
/// or a totally definite quaternion over Q away from H1/H3/H5).
ExceptionalType classify_exceptional(const WedderburnComponent& c);

}  // namespace ringunits
