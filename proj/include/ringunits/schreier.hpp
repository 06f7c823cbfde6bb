#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringunits/rational.hpp"

namespace ringunits {

struct Gaussian {
  Integer re, im;

  Gaussian() : re(0), im(0) {}
  Gaussian(long r, long i) : re(r), im(i) {}
  Gaussian(Integer r, Integer i) : re(std::move(r)), im(std::move(i)) {}

  friend Gaussian operator+(const Gaussian& x, const Gaussian& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend Gaussian operator-(const Gaussian& x, const Gaussian& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend Gaussian operator*(const Gaussian& x, const Gaussian& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend Gaussian operator-(const Gaussian& x) { return {-x.re, -x.im}; }
  friend bool operator==(const Gaussian& x, const Gaussian& y) {
    return x.re == y.re && x.im == y.im;
  }
  bool divisible_by(long m) const { return re % m == 0 && im % m == 0; }
  std::string str() const;
};

struct GaussianMatrix {
  Gaussian a, b, c, d;  // [[a, b], [c, d]]

  Gaussian det() const { return a * d - b * c; }
  /// Inverse, valid when det = 1.
  GaussianMatrix inverse() const { return {d, -b, -c, a}; }
  friend GaussianMatrix operator*(const GaussianMatrix& x,
                                  const GaussianMatrix& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const GaussianMatrix& x, const GaussianMatrix& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

GaussianMatrix gaussian_identity();

/// Congruence pattern in SL2(Z[i]): diagonal entries = 1 mod `diag`, the
/// off-diagonal entries in ur*Z[i] / ll*Z[i].  A modulus of 0 means no
/// condition on that entry.
struct CongruenceCondition {
  long diag = 0, ur = 0, ll = 0;
};

CongruenceCondition condition_c();          // diag 2Z[i]+1, offdiag 4Z[i]
CongruenceCondition condition_gamma();      // diag 2Z[i]+1, ur 4Z[i], ll 2Z[i]
CongruenceCondition condition_level(long m);  // principal congruence mod m

/// Exact divisibility test; throws NotUnimodular when det != 1.
bool in_subgroup(const GaussianMatrix& m, const CongruenceCondition& c);

/// Breadth-first enumeration of right cosets of the congruence subgroup under
/// right multiplication by the generators; identity-first canonical
/// representatives in discovery order.  Throws BoundExceeded.
std::vector<GaussianMatrix> coset_enumerate(
    const std::vector<GaussianMatrix>& generators,
    const CongruenceCondition& c, int bound);

/// Schreier generators { t x (rep(tx))^-1 : t in T, x in X }, each verified
/// to satisfy the condition.  Throws InvalidTransversal when T is not a
/// transversal for <X> modulo c.  With dedupe, removes identities and
/// repeated matrices.
std::vector<GaussianMatrix> schreier_generators(
    const std::vector<GaussianMatrix>& x,
    const std::vector<GaussianMatrix>& t, const CongruenceCondition& c,
    bool dedupe = false);

/// One entry of the Jespers-Leal generator list, kept verbatim; entries whose
/// determinant is not 1 as printed carry the determinant-forced correction.
struct JespersLealEntry {
  std::string label;
  GaussianMatrix printed;
  bool det_ok = false;
  bool pattern_ok = false;  // Gamma-pattern of the printed matrix
  std::optional<GaussianMatrix> corrected;
  std::string note;
};

/// The 17 generators l1..l9, r1..r8.
std::vector<JespersLealEntry> jespers_leal_dataset();

/// The usable matrices: corrected where a correction exists, printed
/// otherwise.
std::vector<GaussianMatrix> jespers_leal_matrices();

}  // namespace ringunits
