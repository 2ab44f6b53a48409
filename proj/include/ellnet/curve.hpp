#ifndef ELLNET_CURVE_HPP
#define ELLNET_CURVE_HPP

#include <cstdlib>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ellnet/error.hpp"
#include "ellnet/rational.hpp"

namespace ellnet {

// Weierstrass cubic y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q,
// together with its standard invariants.  Singular cubics are representable.
struct Curve {
  Rational a1, a2, a3, a4, a6;
  Rational b2, b4, b6, b8;
  Rational c4, c6;
  Rational disc;
  bool singular = false;

  bool integral() const {
    return is_integer(a1) && is_integer(a2) && is_integer(a3) && is_integer(a4) &&
           is_integer(a6);
  }

  friend bool operator==(const Curve& l, const Curve& r) {
    return l.a1 == r.a1 && l.a2 == r.a2 && l.a3 == r.a3 && l.a4 == r.a4 && l.a6 == r.a6;
  }
};

inline Curve curve_validate(const Rational& a1, const Rational& a2, const Rational& a3,
                            const Rational& a4, const Rational& a6) {
  Curve c{a1, a2, a3, a4, a6, {}, {}, {}, {}, {}, {}, {}, false};
  c.b2 = a1 * a1 + 4 * a2;
  c.b4 = 2 * a4 + a1 * a3;
  c.b6 = a3 * a3 + 4 * a6;
  c.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  c.c4 = c.b2 * c.b2 - 24 * c.b4;
  c.c6 = -c.b2 * c.b2 * c.b2 + 36 * c.b2 * c.b4 - 216 * c.b6;
  c.disc = -c.b2 * c.b2 * c.b8 - 8 * c.b4 * c.b4 * c.b4 - 27 * c.b6 * c.b6 +
           9 * c.b2 * c.b4 * c.b6;
  c.singular = (c.disc == 0);
  return c;
}

inline Rational j_invariant(const Curve& c) {
  if (c.singular) throw SingularCurveError("j-invariant of a singular cubic");
  return c.c4 * c.c4 * c.c4 / c.disc;
}

// Affine rational point or the point at infinity.
class CurvePoint {
 public:
  CurvePoint() = default;  // identity
  static CurvePoint identity() { return {}; }
  static CurvePoint affine_unchecked(Rational x, Rational y) {
    CurvePoint p;
    p.xy_ = std::make_pair(std::move(x), std::move(y));
    return p;
  }

  bool is_identity() const { return !xy_.has_value(); }
  const Rational& x() const { return xy_.value().first; }
  const Rational& y() const { return xy_.value().second; }

  friend bool operator==(const CurvePoint& l, const CurvePoint& r) { return l.xy_ == r.xy_; }

 private:
  std::optional<std::pair<Rational, Rational>> xy_;
};

// f(x, y) = y^2 + a1 xy + a3 y - x^3 - a2 x^2 - a4 x - a6
inline Rational curve_residual(const Curve& c, const Rational& x, const Rational& y) {
  return y * y + c.a1 * x * y + c.a3 * y - x * x * x - c.a2 * x * x - c.a4 * x - c.a6;
}

inline CurvePoint point_on_curve(const Curve& c, const Rational& x, const Rational& y) {
  Rational r = curve_residual(c, x, y);
  if (r != 0)
    throw NotOnCurveError("point (" + to_string(x) + ", " + to_string(y) +
                          ") is not on the curve; residual " + to_string(r));
  return CurvePoint::affine_unchecked(x, y);
}

inline bool on_curve(const Curve& c, const CurvePoint& p) {
  return p.is_identity() || curve_residual(c, p.x(), p.y()) == 0;
}

// Partial derivatives of f; both vanish exactly at the singular point.
inline Rational partial_x(const Curve& c, const Rational& x, const Rational& y) {
  return c.a1 * y - 3 * x * x - 2 * c.a2 * x - c.a4;
}
inline Rational partial_y(const Curve& c, const Rational& x, const Rational& y) {
  return 2 * y + c.a1 * x + c.a3;
}

inline bool is_singular_point(const Curve& c, const CurvePoint& p) {
  if (p.is_identity() || !c.singular) return false;
  return partial_x(c, p.x(), p.y()) == 0 && partial_y(c, p.x(), p.y()) == 0;
}

inline CurvePoint negate(const Curve& c, const CurvePoint& p) {
  if (p.is_identity()) return p;
  return CurvePoint::affine_unchecked(p.x(), -p.y() - c.a1 * p.x() - c.a3);
}

inline CurvePoint add_points(const Curve& c, const CurvePoint& p, const CurvePoint& q) {
  if (is_singular_point(c, p) || is_singular_point(c, q))
    throw SingularPointError("group law is undefined at the singular point");
  if (p.is_identity()) return q;
  if (q.is_identity()) return p;

  Rational lambda, nu;
  if (p.x() == q.x()) {
    Rational denom = p.y() + q.y() + c.a1 * q.x() + c.a3;
    if (denom == 0) return CurvePoint::identity();
    // tangent; denom == 2y + a1 x + a3 here since p == q
    lambda = (3 * p.x() * p.x() + 2 * c.a2 * p.x() + c.a4 - c.a1 * p.y()) / denom;
  } else {
    lambda = (q.y() - p.y()) / (q.x() - p.x());
  }
  nu = p.y() - lambda * p.x();
  Rational x3 = lambda * lambda + c.a1 * lambda - c.a2 - p.x() - q.x();
  Rational y3 = -(lambda + c.a1) * x3 - nu - c.a3;
  return CurvePoint::affine_unchecked(std::move(x3), std::move(y3));
}

// Left-to-right double-and-add on |n|, negating for n < 0.
inline CurvePoint multiply(const Curve& c, long n, const CurvePoint& p) {
  CurvePoint base = n < 0 ? negate(c, p) : p;
  unsigned long m = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  CurvePoint acc;
  for (int bit = 63; bit >= 0; --bit) {
    acc = add_points(c, acc, acc);
    if ((m >> bit) & 1UL) acc = add_points(c, acc, base);
  }
  return acc;
}

inline CurvePoint linear_combo(const Curve& c, std::span<const CurvePoint> points,
                               std::span<const long> v) {
  if (points.size() != v.size())
    throw InvalidArgumentError("linear_combo: coefficient and point counts differ");
  CurvePoint acc;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    acc = add_points(c, acc, multiply(c, v[i], points[i]));
  }
  return acc;
}

// x = A/D^2, y = B/D^3 in lowest terms.
struct PointDecomposition {
  Integer A, B, D;
};

inline PointDecomposition decompose(const CurvePoint& p) {
  if (p.is_identity()) throw IdentityPointError("the identity has no affine decomposition");
  auto d = exact_sqrt(p.x().get_den());
  if (!d) throw ModelError("x-denominator " + p.x().get_den().get_str() + " is not a square");
  if ((*d) * (*d) * (*d) != p.y().get_den())
    throw ModelError("y-denominator does not match the cube of D");
  return {p.x().get_num(), p.y().get_num(), *d};
}

}  // namespace ellnet

#endif  // ELLNET_CURVE_HPP
