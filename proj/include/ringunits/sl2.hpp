#pragma once

#include <vector>

#include "ringunits/orders.hpp"

namespace ringunits {

/// 2x2 matrix over one of the seven rings; entries are coordinate vectors.
struct Mat2 {
  QVec a, b, c, d;  // [[a, b], [c, d]]
};

Mat2 mat2_identity(const RingShape& r);
Mat2 mat2_mul(const RingShape& r, const Mat2& x, const Mat2& y);
bool mat2_eq(const Mat2& x, const Mat2& y);
/// Reduced norm (determinant analogue): N(a)N(d) style only valid for
/// commutative rings; for quaternions uses the corner formula
/// nrd(M) = N(a)N(d - c a^{-1} b) when a is invertible (and symmetrically).
Rational mat2_reduced_norm(const RingShape& r, const Mat2& m);

/// [[1,x],[0,1]] (upper) or [[1,0],[x,1]] (lower).
Mat2 elementary(const RingShape& r, const QVec& x, bool upper);

/// Prop 4.1 generator set: elementary matrices over the order basis.
std::vector<Mat2> sl2_generators(const MaximalOrderDescriptor& o);

struct ElementaryOp {
  bool upper;
  QVec x;  // ring element
};

struct Sl2Reduction {
  std::vector<ElementaryOp> word;  // product(word) * residual = input
  Mat2 residual;                   // upper triangular, unit diagonal
};

/// Row-reduce by repeated Euclidean division; entries must lie in the order
/// and the reduced norm must be a unit.
Sl2Reduction reduce_sl2(const MaximalOrderDescriptor& o, const Mat2& m);

/// Multiply out a reduction (oracle for round-trip tests).
Mat2 sl2_reconstruct(const RingShape& r, const Sl2Reduction& red);

}  // namespace ringunits
