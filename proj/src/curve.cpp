#include "ecdlp/curve.hpp"

#include "ecdlp/errors.hpp"
#include "ecdlp/opcount.hpp"

namespace ecdlp {

CurveParams validate_curve(const CurveParams& c) {
  FieldElement four(4, c.p);
  FieldElement twenty_seven(27, c.p);
  FieldElement discriminant = four * c.a * c.a * c.a +
                              twenty_seven * c.b * c.b;
  if (discriminant.is_zero())
    throw SingularCurve("4a^3 + 27b^2 = 0 mod " + c.p.value().to_decimal());
  return c;
}

bool is_on_curve(const CurveParams& c, const Point& pt) {
  if (pt.is_infinity()) return true;
  if (!(pt.x().modulus() == c.p)) return false;
  FieldElement lhs = pt.y() * pt.y();
  FieldElement rhs = pt.x() * pt.x() * pt.x() + c.a * pt.x() + c.b;
  return lhs == rhs;
}

namespace {
void require_on_curve(const CurveParams& c, const Point& pt, const char* role) {
  if (!is_on_curve(c, pt))
    throw NotOnCurve(std::string(role) + " is not on the curve");
}
}  // namespace

Point point_neg(const CurveParams& c, const Point& pt) {
  require_on_curve(c, pt, "point");
  if (pt.is_infinity()) return pt;
  return Point::affine(pt.x(), -pt.y());
}

Point point_add(const CurveParams& c, const Point& lhs, const Point& rhs) {
  detail::tick_group_op();
  if (lhs.is_infinity()) return rhs;
  if (rhs.is_infinity()) return lhs;

  const FieldElement& x1 = lhs.x();
  const FieldElement& y1 = lhs.y();
  const FieldElement& x2 = rhs.x();
  const FieldElement& y2 = rhs.y();

  FieldElement slope(0, c.p);
  if (x1 == x2) {
    // vertical chord: inverse pair, or tangent at a 2-torsion point
    if (!(y1 == y2) || y1.is_zero()) return Point::infinity();
    FieldElement three(3, c.p);
    FieldElement two(2, c.p);
    slope = (three * x1 * x1 + c.a) * fe_inv(two * y1);
  } else {
    slope = (y2 - y1) * fe_inv(x2 - x1);
  }
  FieldElement x3 = slope * slope - x1 - x2;
  FieldElement y3 = slope * (x1 - x3) - y1;
  return Point::affine(std::move(x3), std::move(y3));
}

Point scalar_mul_naive(const CurveParams& c, const BigUint& k, const Point& pt) {
  require_on_curve(c, pt, "base point");
  if (k.is_zero() || pt.is_infinity()) return Point::infinity();
  Point acc = pt;
  for (BigUint i(1); i < k; i += 1) acc = point_add(c, acc, pt);
  return acc;
}

Point scalar_mul(const CurveParams& c, const BigUint& k, const Point& pt) {
  require_on_curve(c, pt, "base point");
  if (k.is_zero() || pt.is_infinity()) return Point::infinity();
  std::size_t bits = k.bit_length();
  Point acc = pt;
  for (std::size_t i = bits - 1; i > 0; --i) {
    acc = point_add(c, acc, acc);
    if (k.bit(i - 1)) acc = point_add(c, acc, pt);
  }
  return acc;
}

}  // namespace ecdlp
