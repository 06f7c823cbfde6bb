#pragma once

#include <stdexcept>
#include <string>

namespace ringunits {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define RINGUNITS_ERROR(Name)                                       \
  struct Name : Error {                                             \
    explicit Name(const std::string& what = #Name) : Error(what) {} \
  }

RINGUNITS_ERROR(InvalidPermutation);
RINGUNITS_ERROR(ClosureTooLarge);
RINGUNITS_ERROR(BoundExceeded);
RINGUNITS_ERROR(NotNormal);
RINGUNITS_ERROR(NotASubgroup);
RINGUNITS_ERROR(GroupMismatch);
RINGUNITS_ERROR(NotInCorner);
RINGUNITS_ERROR(NotInvertible);
RINGUNITS_ERROR(SplitFailure);
RINGUNITS_ERROR(FixedPointFreeComponent);
RINGUNITS_ERROR(BadExponents);
RINGUNITS_ERROR(TheoremViolation);
RINGUNITS_ERROR(EuclideanFailure);
RINGUNITS_ERROR(SearchExhausted);
RINGUNITS_ERROR(NotUnimodular);
RINGUNITS_ERROR(InvalidTransversal);
RINGUNITS_ERROR(MethodInapplicable);
RINGUNITS_ERROR(ParseError);
RINGUNITS_ERROR(UnknownCatalogName);

#undef RINGUNITS_ERROR

}  // namespace ringunits
