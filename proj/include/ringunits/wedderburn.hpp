#pragma once

#include <optional>
#include <vector>

#include "ringunits/galg.hpp"
#include "ringunits/quat.hpp"

namespace ringunits {

/// Provenance of a central idempotent coming from a Shoda pair (H, K).
struct ShodaPair {
  std::vector<int> h_members;
  std::vector<int> k_members;
};

struct CentralIdempotent {
  GAElem value;
  std::optional<ShodaPair> shoda;  // nullopt: produced by center splitting
};

GAElem epsilon_hk(const Subgroup& h, const Subgroup& k);

struct EGHKResult {
  GAElem value;
  bool idempotent = false;
  std::optional<CentralIdempotent> central;  // set iff idempotent
};
EGHKResult e_ghk(const GroupPtr& g, const Subgroup& h, const Subgroup& k);

/// Shoda-pair path: scan pairs K normal-in H over all subgroups, keep the
/// primitive e(G,H,K), and return them when they form a complete orthogonal
/// system summing to 1.  Empty list when the scan comes up short.
std::vector<CentralIdempotent> shoda_idempotents(const GroupPtr& g);

/// General path: split the center (spanned by class sums) at a random central
/// element; cross-checked against the Shoda path for small groups, which also
/// supplies provenance when it matches.
std::vector<CentralIdempotent> primitive_central_idempotents(
    const GroupPtr& g, unsigned long seed = 0);

enum class DivisionKind {
  RationalField,          // Q
  QuadraticField,         // Q(sqrt d)
  QuaternionOverQ,        // (a, b / Q), division (nonempty ramification)
  QuaternionOverQuadratic,  // (a, b / Q(sqrt d)), a = a1+a2*sqrt(d) etc.
  Split,                  // corner certified NOT a division ring
  Unresolved,
};

struct DivisionDescriptor {
  DivisionKind kind = DivisionKind::Unresolved;
  int dim = 0;  // dim over Q
  long d = 0;   // center discriminant when the center is quadratic
  Rational a, b;                  // QuaternionOverQ
  Rational a1, a2, b1, b2;        // QuaternionOverQuadratic components
  bool totally_definite = false;  // quadratic-center quaternion case
  bool certified = false;  // division-ring property proved, not just assumed
};

struct CenterDescriptor {
  int dim = 1;   // [F : Q]
  long d = 0;    // dim == 2: F = Q(sqrt d), d squarefree
  Poly defining;  // dim > 2: minimal polynomial of a primitive element
};

struct WedderburnComponent {
  CentralIdempotent e;
  int dim_q = 0;
  int degree_n = 0;
  CenterDescriptor center;
  DivisionDescriptor division;
  GAElem rank_one;                   // the chosen f (e itself when n = 1)
  std::vector<GAElem> corner_basis;  // Q-basis of f QG f
  bool fixed_point_free = false;     // no g with ĝe noncentral
};

struct RankOneOptions {
  bool allow_random_split = true;
  unsigned long seed = 0;
};

GAElem rank_one_idempotent(const CentralIdempotent& e,
                           const RankOneOptions& opts = {});

/// Identify the division structure of a corner algebra given a Q-basis and
/// its identity.  The basis must be closed (a spanning set of the corner).
DivisionDescriptor identify_division_ring(
    const std::vector<GAElem>& corner_basis, const GAElem& identity);

WedderburnComponent analyze_component(const CentralIdempotent& e,
                                      const RankOneOptions& opts = {});

/// G acts faithfully on QGe iff no nonidentity element fixes e.
bool component_faithful(const WedderburnComponent& c);

/// Full decomposition, components sorted by dim then idempotent coefficients.
std::vector<WedderburnComponent> decompose(const GroupPtr& g,
                                           unsigned long seed = 0);

}  // namespace ringunits
