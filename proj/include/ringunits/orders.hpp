#pragma once

#include <string>
#include <vector>

#include "ringunits/galg.hpp"
#include "ringunits/linalg.hpp"
#include "ringunits/quat.hpp"

namespace ringunits {

/// The seven rings of the maximal-order table.
enum class RingTag { Q, Qi, Qsqrtm2, Qsqrtm3, H1, H3, H5 };

std::string ring_tag_name(RingTag t);
/// Parse names like "M2Q", "M2Qi", "M2H3" (catalog component tags) or the
/// plain ring names "Q", "Qi", "Qsqrt-2", "Qsqrt-3", "H1", "H3", "H5".
RingTag ring_tag_from_string(const std::string& s);

/// Structure constants of the ring: dimension over Q and the defining
/// parameters.  Fields use basis {1, s} with s^2 = a; quaternions use
/// {1, i, j, ij} with i^2 = a, j^2 = b, ij = -ji.
struct RingShape {
  RingTag tag;
  int qdim;       // 1, 2 or 4
  Rational a, b;  // b unused for fields
};
RingShape ring_shape(RingTag t);

/// Elements are coordinate vectors of length qdim.
QVec ring_mul(const RingShape& r, const QVec& x, const QVec& y);
QVec ring_add(const QVec& x, const QVec& y);
QVec ring_sub(const QVec& x, const QVec& y);
QVec ring_neg(const QVec& x);
QVec ring_conj(const RingShape& r, const QVec& x);
Rational ring_norm(const RingShape& r, const QVec& x);
Rational ring_trace(const RingShape& r, const QVec& x);
QVec ring_one(const RingShape& r);
QVec ring_zero(const RingShape& r);
QVec ring_inv(const RingShape& r, const QVec& x);  // throws NotInvertible

struct MaximalOrderDescriptor {
  RingShape ring;
  std::vector<QVec> basis;    // qdim vectors, first one = 1
  QMat basis_inverse;         // coordinates of a ring element in the basis
};

/// The Table 1 maximal order; ring closure and discriminant are verified.
MaximalOrderDescriptor maximal_order(RingTag t);

/// Order-coordinates of x (rational vector of length qdim).
QVec order_coordinates(const MaximalOrderDescriptor& o, const QVec& x);
bool in_order(const MaximalOrderDescriptor& o, const QVec& x);

/// q in the order with N(x - q) < 1; deterministic rounding and tie-break.
struct EuclideanResult {
  QVec q_coords;  // integer coordinates of q in the order basis
  QVec q;         // q as a ring element
  QVec r;         // x - q
};
EuclideanResult euclidean_divide(const MaximalOrderDescriptor& o,
                                 const QVec& x);

/// Search witnesses ihat, jhat in a quaternion corner with ihat^2 = a0,
/// jhat^2 = b0, anticommuting; integer coordinates in [-N, N] over the pure
/// trace-zero space, denominators dividing den_bound.
struct EmbedOptions {
  int coord_bound = 12;
  int den_bound = 2;
};
struct QuaternionWitness {
  GAElem ihat, jhat;
};
QuaternionWitness embed_canonical_quaternion(
    const std::vector<GAElem>& corner_basis, const GAElem& identity,
    const Rational& a0, const Rational& b0, const EmbedOptions& opts = {});

/// A generator w of the quadratic part of a commutative corner: w^2 = d * f.
GAElem quadratic_generator(const std::vector<GAElem>& corner_basis,
                           const GAElem& identity, long d);

}  // namespace ringunits
