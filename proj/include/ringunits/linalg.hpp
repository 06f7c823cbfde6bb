#pragma once

#include <optional>
#include <vector>

#include "ringunits/rational.hpp"

namespace ringunits {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

/// Rank via fraction-free (Bareiss) elimination on the cleared-denominator
/// integer matrix.
int rank(QMat a);

/// Solve A x = b exactly (A square).  Empty optional if A is singular or the
/// system is inconsistent.
std::optional<QVec> solve_linear(QMat a, QVec b);

/// Incrementally maintained row space in reduced echelon form.  Used for
/// corner-algebra bases, minimal polynomials and primitive-idempotent
/// assembly, where vectors arrive one at a time and coordinates w.r.t. the
/// original insertion order are needed.
class SpanBasis {
 public:
  explicit SpanBasis(int dim) : dim_(dim) {}

  /// Returns true when v was independent of the current span (and is added).
  bool add(const QVec& v);

  /// Coordinates of v as a combination of the vectors previously added with
  /// add() == true, in insertion order; empty optional if v is outside.
  std::optional<QVec> coordinates(const QVec& v) const;

  bool contains(const QVec& v) const { return coordinates(v).has_value(); }
  int size() const { return static_cast<int>(rows_.size()); }
  int dim() const { return dim_; }
  /// The original (un-echelonized) vectors accepted by add().
  const std::vector<QVec>& vectors() const { return originals_; }

 private:
  int dim_;
  std::vector<QVec> rows_;       // echelon rows, pivot normalized to 1
  std::vector<int> pivots_;      // pivot column per echelon row
  std::vector<QVec> combos_;     // rows_[i] = sum combos_[i][j] * originals_[j]
  std::vector<QVec> originals_;
};

}  // namespace ringunits
