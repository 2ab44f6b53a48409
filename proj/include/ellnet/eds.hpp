#ifndef ELLNET_EDS_HPP
#define ELLNET_EDS_HPP

#include <utility>
#include <vector>

#include "ellnet/curve.hpp"
#include "ellnet/factor.hpp"

namespace ellnet {

// Swart's construction: a cubic and the point (0,0) on it whose division
// polynomial values start 1, W2, W3, W4.  The cubic may be singular.
inline std::pair<Curve, CurvePoint> curve_from_eds(const Rational& w2, const Rational& w3,
                                                   const Rational& w4) {
  if (w2 * w3 == 0) throw DegenerateSequenceError("W2*W3 = 0");
  Rational w2_2 = w2 * w2, w2_5 = w2_2 * w2_2 * w2;
  Rational a1 = (w4 + w2_5 - 2 * w2 * w3) / (w2_2 * w3);
  Rational a2 = (w2 * w3 * w3 + w4 + w2_5 - w2 * w3) / (w2_2 * w2 * w3);
  Curve c = curve_validate(a1, a2, w2, 1, 0);
  return {c, CurvePoint::affine_unchecked(0, 0)};
}

// Terms W_0..W_n of the elliptic sequence with W_1 = 1 and the given seeds,
// by the rank-one doubling and addition formulas.
inline std::vector<Rational> eds_terms(const Rational& w2, const Rational& w3,
                                       const Rational& w4, long n) {
  std::vector<Rational> w{0, 1, w2, w3, w4};
  for (long k = 5; k <= n; ++k) {
    long m = k / 2;
    auto at = [&](long i) -> const Rational& { return w[static_cast<std::size_t>(i)]; };
    if (k % 2 == 1) {
      w.push_back(at(m + 2) * at(m) * at(m) * at(m) - at(m - 1) * at(m + 1) * at(m + 1) * at(m + 1));
    } else {
      if (w2 == 0) throw DivisionByZeroError("W2 = 0");
      w.push_back((at(m + 2) * at(m - 1) * at(m - 1) - at(m - 2) * at(m + 1) * at(m + 1)) * at(m) /
                  w2);
    }
  }
  w.resize(static_cast<std::size_t>(std::max(n + 1, 0L)));
  return w;
}

// True iff P avoids the singular point of the reduction at every prime of bad
// reduction.  Points with a denominator divisible by l reduce to the identity.
inline bool nonsingular_reduction_check(const Curve& c, const CurvePoint& p) {
  if (!c.integral()) throw NonIntegralModelError("curve coefficients are not all integers");
  if (p.is_identity()) return true;
  if (c.singular) throw SingularCurveError("reduction check on a singular cubic");
  Rational fx = partial_x(c, p.x(), p.y());
  Rational fy = partial_y(c, p.x(), p.y());
  for (const Integer& l : prime_divisors(c.disc.get_num())) {
    if (p.x().get_den() % l == 0) continue;
    // denominators are units mod l here, so divisibility of numerators decides
    if (fx.get_num() % l == 0 && fy.get_num() % l == 0) return false;
  }
  return true;
}

}  // namespace ellnet

#endif  // ELLNET_EDS_HPP
