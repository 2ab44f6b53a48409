#ifndef ELLNET_QUADRATIC_FORM_HPP
#define ELLNET_QUADRATIC_FORM_HPP

#include <vector>

#include "ellnet/curve.hpp"
#include "ellnet/index.hpp"

namespace ellnet {

// quotient: gamma_ij = D(Pi+Pj) / (D(Pi) D(Pj)), the form that makes |F Psi| = D.
// product:  gamma_ij = D(Pi+Pj); the scaling some published tables use.
enum class DenominatorConvention { quotient, product };

struct GammaMatrix {
  std::vector<std::vector<Rational>> g;  // upper triangle used
  std::size_t rank() const { return g.size(); }
};

inline Integer denominator_of(const CurvePoint& p) {
  if (p.is_identity()) throw IdentityCombinationError("combination is the identity");
  return decompose(p).D;
}

inline GammaMatrix gamma_matrix(const Curve& c, const std::vector<CurvePoint>& points,
                                DenominatorConvention conv = DenominatorConvention::quotient) {
  std::size_t n = points.size();
  GammaMatrix m{std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, 0))};
  std::vector<Integer> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = denominator_of(points[i]);
    m.g[i][i] = d[i];
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Integer dij = denominator_of(add_points(c, points[i], points[j]));
      m.g[i][j] = conv == DenominatorConvention::quotient ? make_rational(dij, d[i] * d[j])
                                                          : Rational(dij);
    }
  return m;
}

// F_v = prod_{i<=j} gamma_ij^{v_i v_j}
inline Rational F_eval(const GammaMatrix& gm, const IndexVector& v) {
  if (v.size() != gm.rank()) throw InvalidArgumentError("F_eval: rank mismatch");
  Rational out = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i; j < v.size(); ++j) {
      long e = v[i] * v[j];
      if (e != 0) out *= pow(gm.g[i][j], e);
    }
  return out;
}

}  // namespace ellnet

#endif  // ELLNET_QUADRATIC_FORM_HPP
