#ifndef ELLNET_DIVISION_POLY_HPP
#define ELLNET_DIVISION_POLY_HPP

#include <map>
#include <vector>

#include "ellnet/curve.hpp"

namespace ellnet {

// Values psi_n(P) for a fixed point, memoized.  psi_{-n} = -psi_n.
class DivisionPolynomials {
 public:
  DivisionPolynomials(const Curve& c, const CurvePoint& p) : curve_(c), point_(p) {
    if (p.is_identity()) throw IdentityPointError("division polynomials at the identity");
    const Rational& x = p.x();
    const Rational& y = p.y();
    const Curve& e = curve_;
    Rational x2 = x * x, x3 = x2 * x, x4 = x3 * x;
    memo_[0] = 0;
    memo_[1] = 1;
    memo_[2] = 2 * y + e.a1 * x + e.a3;
    memo_[3] = 3 * x4 + e.b2 * x3 + 3 * e.b4 * x2 + 3 * e.b6 * x + e.b8;
    memo_[4] = memo_[2] * (2 * x4 * x2 + e.b2 * x4 * x + 5 * e.b4 * x4 + 10 * e.b6 * x3 +
                           10 * e.b8 * x2 + (e.b2 * e.b8 - e.b4 * e.b6) * x +
                           (e.b4 * e.b8 - e.b6 * e.b6));
  }

  const Curve& curve() const { return curve_; }
  const CurvePoint& point() const { return point_; }

  Rational operator()(long n) {
    if (n < 0) return -at(-n);
    return at(n);
  }

  // psi_0 .. psi_n in order.
  std::vector<Rational> sequence(long n) {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(n + 1));
    for (long i = 0; i <= n; ++i) out.push_back(at(i));
    return out;
  }

 private:
  const Rational& at(long n) {
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    long m = n / 2;
    Rational v;
    if (n % 2 == 1) {
      Rational a = at(m), b = at(m + 1);
      v = at(m + 2) * a * a * a - at(m - 1) * b * b * b;
    } else {
      if (memo_[2] == 0)
        throw DivisionByZeroError("psi_2 vanishes; P is a 2-torsion point");
      Rational a = at(m - 1), b = at(m + 1);
      v = (at(m + 2) * a * a - at(m - 2) * b * b) * at(m) / memo_[2];
    }
    return memo_.emplace(n, std::move(v)).first->second;
  }

  Curve curve_;
  CurvePoint point_;
  std::map<long, Rational> memo_;
};

inline Rational division_poly_eval(const Curve& c, long n, const CurvePoint& p) {
  DivisionPolynomials psi(c, p);
  return psi(n);
}

}  // namespace ellnet

#endif  // ELLNET_DIVISION_POLY_HPP
