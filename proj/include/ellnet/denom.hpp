#ifndef ELLNET_DENOM_HPP
#define ELLNET_DENOM_HPP

#include <map>
#include <string>
#include <vector>

#include "ellnet/division_poly.hpp"
#include "ellnet/eds.hpp"
#include "ellnet/net.hpp"
#include "ellnet/quadratic_form.hpp"
#include "ellnet/sign_rules.hpp"
#include "ellnet/sign_stats.hpp"

namespace ellnet {

struct DenomConfig {
  Curve curve;
  std::vector<CurvePoint> points;
  bool reduction_ok = false;   // every P_i reduces to a non-singular point
  bool pairwise_ok = false;    // same for every P_i + P_j (advisory)
};

inline DenomConfig make_denom_config(const Curve& c, std::vector<CurvePoint> points) {
  if (!c.integral()) throw NonIntegralModelError("denominator nets need integer coefficients");
  DenomConfig cfg{c, std::move(points), true, true};
  for (std::size_t i = 0; i < cfg.points.size(); ++i) {
    if (!on_curve(c, cfg.points[i])) throw NotOnCurveError("point is not on the curve");
    if (!nonsingular_reduction_check(c, cfg.points[i])) cfg.reduction_ok = false;
    for (std::size_t j = i + 1; j < cfg.points.size(); ++j)
      if (!nonsingular_reduction_check(c, add_points(c, cfg.points[i], cfg.points[j])))
        cfg.pairwise_ok = false;
  }
  return cfg;
}

inline Integer denom_value(const DenomConfig& cfg, const IndexVector& v) {
  CurvePoint p = linear_combo(cfg.curve, cfg.points, v);
  if (p.is_identity())
    throw IdentityCombinationError("v.P is the identity for v = " + to_string(v));
  return decompose(p).D;
}

inline GammaMatrix gamma_matrix(const DenomConfig& cfg) {
  return gamma_matrix(cfg.curve, cfg.points, DenominatorConvention::quotient);
}

// Psi-hat = F * Psi, taking Psi from an analytic-normalization table.
inline Rational scaled_net(NetTable& table, const GammaMatrix& g, const IndexVector& v) {
  Rational w = table.analytic(v);
  return w == 0 ? w : w * F_eval(g, v);
}

// (-1)^{predicted parity} D(v.P), any rank.
inline Integer signed_denominator_net(const DenomConfig& cfg, const SignPredictor& pred,
                                      const IndexVector& v) {
  if (!cfg.reduction_ok)
    throw HypothesisViolatedError("a point reduces to a singular point at some prime");
  if (is_zero(v)) return 0;
  Integer d = denom_value(cfg, v);
  return pred.parity(v) ? Integer(-d) : d;
}

namespace detail {

inline DivisionPolynomials shipsey_setup(const Curve& c) {
  if (!c.integral()) throw FormViolationError("curve coefficients must be integers");
  if (c.a6 != 0) throw FormViolationError("a6 must be 0");
  Integer a3 = c.a3.get_num(), a4 = c.a4.get_num();
  if (gcd(a3, a4) != 1) throw FormViolationError("gcd(a3, a4) must be 1");
  if (c.singular) throw FormViolationError("the cubic is singular");
  CurvePoint p = CurvePoint::affine_unchecked(0, 0);
  if (is_torsion(c, p)) throw TorsionPointError("(0,0) has finite order");
  return DivisionPolynomials(c, p);
}

}  // namespace detail

// Shipsey's sequence for y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x, P = (0,0),
// gcd(a3, a4) = 1: W_1 = 1, W_2 = a3, |W_n| = D(nP),
// Sign[W_{n-2} W_n] = -Sign[A((n-1)P)].  Entries 0..n.
inline std::vector<Integer> shipsey_signs(const Curve& c, long n) {
  DivisionPolynomials psi = detail::shipsey_setup(c);
  std::vector<Integer> w{0, 1, c.a3.get_num()};
  // x(mP) = -psi_{m-1} psi_{m+1} / psi_m^2 since x(P) = 0
  auto x_of = [&](long m) {
    Rational s = psi(m);
    return Rational(-psi(m - 1) * psi(m + 1) / (s * s));
  };
  Rational x_prev = x_of(2);
  for (long m = 3; m <= n; ++m) {
    Rational xm = x_of(m);
    auto dm = exact_sqrt(xm.get_den());
    if (!dm) throw ModelError("x(nP) denominator is not a square");
    int s = -sgn(x_prev) * sgn(w[static_cast<std::size_t>(m - 2)]);
    w.push_back(s < 0 ? Integer(-*dm) : *dm);
    x_prev = std::move(xm);
  }
  w.resize(static_cast<std::size_t>(std::max(n + 1, 0L)));
  return w;
}

// Signs of the same sequence without extracting denominators:
// Sign[A((m-1)P)] = Sign[x((m-1)P)] = -Sign[psi_{m-2} psi_m].
inline std::vector<int> shipsey_sign_sequence(const Curve& c, long n) {
  DivisionPolynomials psi = detail::shipsey_setup(c);
  std::vector<int> s{0, 1, sgn(c.a3)};
  for (long m = 3; m <= n; ++m) {
    int sign_a = -sgn(psi(m - 2)) * sgn(psi(m));
    s.push_back(-sign_a * s[static_cast<std::size_t>(m - 2)]);
  }
  s.resize(static_cast<std::size_t>(std::max(n + 1, 0L)));
  return s;
}

struct DenomReport {
  bool hypothesis = false;  // reduction_ok of the configuration
  std::size_t checked = 0;
  std::vector<std::pair<IndexVector, std::string>> mismatches;
  bool pass() const { return mismatches.empty(); }
};

// |Psi-hat_v| = D(v.P) over a rank-2 box; v = 0 compares against 0.  Runs even
// when the reduction hypothesis fails; the report records which case applies.
inline DenomReport verify_psihat_equals_denoms(const DenomConfig& cfg, NetTable& table,
                                               const Box& box) {
  GammaMatrix g = gamma_matrix(cfg);
  DenomReport rep;
  rep.hypothesis = cfg.reduction_ok;
  for_each_index(box, [&](const IndexVector& v) {
    ++rep.checked;
    Rational hat = scaled_net(table, g, v);
    Integer d = is_zero(v) ? Integer(0) : denom_value(cfg, v);
    if (abs(hat) != Rational(d))
      rep.mismatches.emplace_back(v, to_string(hat) + " vs " + to_string(d));
  });
  return rep;
}

}  // namespace ellnet

#endif  // ELLNET_DENOM_HPP
