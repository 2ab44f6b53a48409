#ifndef ELLNET_SIGN_RULES_HPP
#define ELLNET_SIGN_RULES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ellnet/index.hpp"
#include "ellnet/tate.hpp"

namespace ellnet {

namespace detail {

inline long floor_pair(const AnalyticContext& ctx, std::size_t i, std::size_t j) {
  IndexVector c(ctx.rank(), 0);
  c[i] += 1;
  c[j] += 1;
  return floor_beta_combination(ctx, c);
}

// Terms shared by H and its reduced form: sum_{i<=k} floor(v_i/2), plus
// floor(sum v_i beta_i) when sum_{i<=k} v_i is even.
inline long parity_core(const IndexVector& v, const AnalyticContext& ctx) {
  long neg_sum = 0, halves = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (ctx.negative(i)) {
      neg_sum += v[i];
      halves += floor_half(v[i]);
    }
  long h = halves;
  if (mod2(neg_sum) == 0) h += floor_beta_combination(ctx, v);
  return h;
}

inline void check_rank(const IndexVector& v, const AnalyticContext& ctx) {
  if (v.size() != ctx.rank()) throw InvalidArgumentError("index rank does not match the points");
  if (is_zero(v)) throw InvalidArgumentError("parity of the zero index");
}

}  // namespace detail

// Cross terms run over pairs inside the negative-u block and inside the
// positive-u block; the point order itself does not matter.
inline int parity_H(const IndexVector& v, const AnalyticContext& ctx) {
  detail::check_rank(v, ctx);
  long h = detail::parity_core(v, ctx);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (ctx.negative(i) != ctx.negative(j) || mod2(v[i] * v[j]) == 0) continue;
      h += detail::floor_pair(ctx, i, j);
    }
  return mod2(h);
}

inline int parity_reduced(const IndexVector& v, const AnalyticContext& ctx) {
  detail::check_rank(v, ctx);
  return mod2(detail::parity_core(v, ctx));
}

enum class SignCase { pp, np, pn, nn };  // signs of (u1, u2)

inline SignCase sign_case(const AnalyticContext& ctx) {
  if (ctx.rank() != 2) throw InvalidArgumentError("sign cases are defined for rank 2");
  bool n1 = ctx.negative(0), n2 = ctx.negative(1);
  return n1 ? (n2 ? SignCase::nn : SignCase::np) : (n2 ? SignCase::pn : SignCase::pp);
}

// The four rank-2 formulas, written out case by case.
inline int rank2_parity(const IndexVector& v, const AnalyticContext& ctx,
                        std::optional<SignCase> which = std::nullopt) {
  detail::check_rank(v, ctx);
  if (v.size() != 2) throw InvalidArgumentError("rank2_parity needs rank 2");
  SignCase sc = which.value_or(sign_case(ctx));
  long v1 = v[0], v2 = v[1];
  auto fl = [&] { return floor_beta_combination(ctx, v); };
  auto cross = [&] { return detail::floor_pair(ctx, 0, 1) * v1 * v2; };
  long h = 0;
  switch (sc) {
    case SignCase::pp:
      h = fl() + cross();
      break;
    case SignCase::np:
      h = mod2(v1) == 0 ? fl() + floor_half(v1) : floor_half(v1);
      break;
    case SignCase::pn:
      h = mod2(v2) == 0 ? fl() + floor_half(v2) : floor_half(v2);
      break;
    case SignCase::nn:
      h = cross() + floor_half(v1) + floor_half(v2);
      if (mod2(v1 + v2) == 0) h += fl();
      break;
  }
  return mod2(h);
}

// Small relation sum c_i P_i = O with 0 < max|c_i| <= bound, if any.
inline std::optional<IndexVector> find_relation(const Curve& c,
                                                const std::vector<CurvePoint>& points,
                                                long bound) {
  std::size_t n = points.size();
  if (n == 0) return std::nullopt;
  std::vector<std::vector<CurvePoint>> mult(n);
  for (std::size_t i = 0; i < n; ++i) {
    CurvePoint acc;
    std::vector<CurvePoint> pos{acc};
    for (long m = 1; m <= bound; ++m) pos.push_back(acc = add_points(c, acc, points[i]));
    for (long m = -bound; m <= bound; ++m)
      mult[i].push_back(m >= 0 ? pos[static_cast<std::size_t>(m)]
                               : negate(c, pos[static_cast<std::size_t>(-m)]));
  }
  auto key = [](const CurvePoint& p) {
    return p.is_identity() ? std::string("O") : to_string(p.x()) + "," + to_string(p.y());
  };
  // all combinations of the first n-1 points, then look up -c_n P_n
  std::map<std::string, IndexVector> seen;
  std::vector<std::pair<CurvePoint, IndexVector>> layer{{CurvePoint{}, {}}};
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::vector<std::pair<CurvePoint, IndexVector>> next;
    for (const auto& [p, cv] : layer)
      for (long m = -bound; m <= bound; ++m) {
        IndexVector nv = cv;
        nv.push_back(m);
        next.emplace_back(add_points(c, p, mult[i][static_cast<std::size_t>(m + bound)]), nv);
      }
    layer = std::move(next);
  }
  for (const auto& [p, cv] : layer) {
    auto [it, fresh] = seen.emplace(key(p), cv);
    if (!fresh) {  // two coefficient vectors with the same sum: their difference
      IndexVector d(cv.size());
      for (std::size_t i = 0; i < d.size(); ++i) d[i] = cv[i] - it->second[i];
      d.push_back(0);
      return d;
    }
  }
  for (long m = -bound; m <= bound; ++m) {
    const CurvePoint& target = negate(c, mult[n - 1][static_cast<std::size_t>(m + bound)]);
    auto it = seen.find(key(target));
    if (it == seen.end()) continue;
    IndexVector d = it->second;
    d.push_back(m);
    if (!is_zero(d)) return d;
  }
  return std::nullopt;
}

constexpr long kRelationBound = 12;

inline void require_independent(const AnalyticContext& ctx) {
  for (std::size_t i = 0; i < ctx.rank(); ++i)
    if (ctx.torsion[i])
      throw TorsionPointError("point " + std::to_string(i + 1) + " has finite order");
  if (auto rel = find_relation(ctx.curve, ctx.points, kRelationBound))
    throw DependentPointsError("points satisfy the relation " + to_string(*rel));
}

struct SignPredictor {
  ContextPtr ctx;
  int twist = 0;  // epsilon
  IndexVector probe;

  int parity(const IndexVector& v) const {
    return mod2(parity_H(v, *ctx) + twist * twist_exponent(v));
  }
  int sign(const IndexVector& v) const { return parity(v) ? -1 : 1; }
};

inline IndexVector default_probe(std::size_t rank) {
  if (rank == 1) return {2};
  IndexVector p(rank, 0);
  p[0] = p[1] = 2;
  return p;
}

// Fixes epsilon from one exact sign at a probe whose twist exponent is odd.
inline SignPredictor calibrate_twist(ContextPtr ctx, const IndexVector& probe, int exact_sign) {
  if (probe.size() != ctx->rank()) throw BadProbeError("probe rank does not match the points");
  if (mod2(twist_exponent(probe)) == 0)
    throw BadProbeError("probe " + to_string(probe) +
                        " has even twist exponent; try " + to_string(default_probe(ctx->rank())));
  if (exact_sign == 0)
    throw BadProbeError("net value at probe " + to_string(probe) + " is zero");
  int exact_parity = exact_sign < 0 ? 1 : 0;
  int h = parity_H(probe, *ctx);
  return {std::move(ctx), h == exact_parity ? 0 : 1, probe};
}

// Fail-fast construction: torsion and dependent points are rejected first.
inline SignPredictor make_sign_predictor(ContextPtr ctx, const IndexVector& probe,
                                         int exact_sign) {
  require_independent(*ctx);
  return calibrate_twist(std::move(ctx), probe, exact_sign);
}

inline int predict_sign(const SignPredictor& pred, const IndexVector& v) { return pred.sign(v); }

// Signs of the multipliers of f(v) = prod gamma_ii^{v_i^2} prod gamma_ij^{v_i v_j}.
struct QuadraticFormSigns {
  std::vector<std::vector<int>> s;  // upper triangle, entries +1 or -1
};

inline int quadratic_form_parity(const QuadraticFormSigns& f, const IndexVector& v) {
  if (f.s.size() != v.size()) throw InvalidArgumentError("form rank mismatch");
  long p = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i; j < v.size(); ++j)
      if (f.s[i][j] < 0) p += v[i] * v[j];
  return mod2(p);
}

// Parity of W = f * Psi for a net obtained by rescaling with f.
inline int scaled_parity(const SignPredictor& pred, const QuadraticFormSigns& f,
                         const IndexVector& v) {
  return mod2(quadratic_form_parity(f, v) + pred.parity(v));
}

}  // namespace ellnet

#endif  // ELLNET_SIGN_RULES_HPP
