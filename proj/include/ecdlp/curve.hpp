#pragma once

// Short Weierstrass curve y^2 = x^3 + ax + b over F_p and its abelian group
// law in affine coordinates. Affine only, on purpose: the workbench exists
// to count group operations exactly, not to maximize throughput.

#include <optional>
#include <utility>

#include "ecdlp/bigint.hpp"
#include "ecdlp/field.hpp"

namespace ecdlp {

struct CurveParams {
  PrimeModulus p;
  FieldElement a;
  FieldElement b;

  CurveParams(const PrimeModulus& modulus, const BigUint& a_raw,
              const BigUint& b_raw)
      : p(modulus), a(a_raw, modulus), b(b_raw, modulus) {}
};

// Rejects singular curves: requires 4a^3 + 27b^2 != 0 in F_p.
CurveParams validate_curve(const CurveParams& c);

// A curve point: the distinguished identity at infinity, or an affine pair.
class Point {
 public:
  static Point infinity() { return Point(); }
  static Point affine(FieldElement x, FieldElement y) {
    return Point(std::move(x), std::move(y));
  }

  bool is_infinity() const { return !coords_.has_value(); }
  const FieldElement& x() const { return coords_->first; }
  const FieldElement& y() const { return coords_->second; }

  friend bool operator==(const Point& a, const Point& b) {
    if (a.is_infinity() || b.is_infinity())
      return a.is_infinity() == b.is_infinity();
    return a.x() == b.x() && a.y() == b.y();
  }

 private:
  Point() = default;
  Point(FieldElement x, FieldElement y)
      : coords_(std::in_place, std::move(x), std::move(y)) {}

  std::optional<std::pair<FieldElement, FieldElement>> coords_;
};

bool is_on_curve(const CurveParams& c, const Point& pt);

// Group inverse: (x, y) -> (x, -y). Throws NotOnCurve for foreign points.
Point point_neg(const CurveParams& c, const Point& pt);

// The chord-and-tangent group law. One total function: doubling dispatches
// internally on P == Q. Inputs are trusted to be on the curve; membership is
// checked once at the entry points that accept outside data, never per step
// of a walk.
Point point_add(const CurveParams& c, const Point& lhs, const Point& rhs);

// k*P by literally adding P k times: exactly max(k-1, 0) group operations
// for affine P. This is the operation-for-operation model of key computation
// that the discrete-log walk is measured against.
Point scalar_mul_naive(const CurveParams& c, const BigUint& k, const Point& pt);

// k*P by double-and-add, O(log k) group operations; agrees with
// scalar_mul_naive everywhere and serves as its fast cross-check.
Point scalar_mul(const CurveParams& c, const BigUint& k, const Point& pt);

}  // namespace ecdlp
