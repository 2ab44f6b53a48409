#ifndef ELLNET_TATE_HPP
#define ELLNET_TATE_HPP

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <vector>

#include "ellnet/curve.hpp"
#include "ellnet/index.hpp"
#include "ellnet/real.hpp"

namespace ellnet {

template <class T>
struct WeierstrassInvariants {
  T b2, b4, b6, b8, c4, c6, disc;
};

template <class T>
WeierstrassInvariants<T> invariants_of(const T& a1, const T& a2, const T& a3, const T& a4,
                                        const T& a6) {
  WeierstrassInvariants<T> w;
  w.b2 = a1 * a1 + 4 * a2;
  w.b4 = 2 * a4 + a1 * a3;
  w.b6 = a3 * a3 + 4 * a6;
  w.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  w.c4 = w.b2 * w.b2 - 24 * w.b4;
  w.c6 = -w.b2 * w.b2 * w.b2 + 36 * w.b2 * w.b4 - 216 * w.b6;
  w.disc = -w.b2 * w.b2 * w.b8 - 8 * w.b4 * w.b4 * w.b4 - 27 * w.b6 * w.b6 +
           9 * w.b2 * w.b4 * w.b6;
  return w;
}

namespace detail {

constexpr unsigned kGuardBits = 64;

inline Real eps_for(unsigned bits) { return pow2(-static_cast<long>(bits) - 8); }

inline Real signed_cbrt(const Real& x) {
  if (x == 0) return Real(0);
  Real r = exp(log(abs(x)) / 3);
  return x < 0 ? Real(-r) : r;
}

// Real roots of 4x^3 + b2 x^2 + 2 b4 x + b6, descending, Newton polished.
inline std::vector<Real> two_torsion_abscissae(const Curve& c, unsigned bits) {
  Real b2 = to_real(c.b2), b4 = to_real(c.b4), b6 = to_real(c.b6);
  auto f = [&](const Real& x) { return ((4 * x + b2) * x + 2 * b4) * x + b6; };
  auto df = [&](const Real& x) { return (12 * x + 2 * b2) * x + 2 * b4; };
  Real A = b2 / 4, B = b4 / 2, C = b6 / 4;
  Real p = B - A * A / 3;
  Real qq = 2 * A * A * A / 27 - A * B / 3 + C;
  std::vector<Real> roots;
  if (c.disc > 0) {
    Real r = 2 * sqrt(-p / 3);
    Real arg = (3 * qq / (2 * p)) * sqrt(-3 / p);
    if (arg > 1) arg = 1;
    if (arg < -1) arg = -1;
    Real phi = acos(arg) / 3;
    for (int k = 0; k < 3; ++k) roots.push_back(r * cos(phi - 2 * pi_real() * k / 3) - A / 3);
  } else {
    Real d = qq * qq / 4 + p * p * p / 27;
    Real sd = sqrt(d);
    roots.push_back(signed_cbrt(-qq / 2 + sd) + signed_cbrt(-qq / 2 - sd) - A / 3);
  }
  Real tol = pow2(-static_cast<long>(bits));
  for (auto& x : roots) {
    for (int it = 0; it < 200; ++it) {
      Real d = df(x);
      if (d == 0) break;
      Real step = f(x) / d;
      x -= step;
      if (abs(step) <= tol * (1 + abs(x))) break;
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Real& a, const Real& b) { return a > b; });
  return roots;
}

}  // namespace detail

// Tate parameter of a real curve, by the arithmetic-geometric mean.
inline Real real_parameters(const Curve& c, unsigned bits = kDefaultPrecision) {
  if (c.singular) throw SingularCurveError("Tate parameter of a singular cubic");
  unsigned work = bits + detail::kGuardBits;
  PrecisionScope scope(work);
  auto e = detail::two_torsion_abscissae(c, work);
  Real pi = pi_real();
  if (c.disc > 0) {
    Real wr = pi / agm(sqrt(e[0] - e[2]), sqrt(e[0] - e[1]), work);
    Real wi = pi / agm(sqrt(e[0] - e[2]), sqrt(e[1] - e[2]), work);
    return exp(-2 * pi * wr / wi);
  }
  Real b2 = to_real(c.b2), b4 = to_real(c.b4);
  Real e1 = e[0];
  Real A = 3 * e1 + b2 / 4;
  Real B = sqrt(3 * e1 * e1 + b2 * e1 / 2 + b4 / 2);
  Real w1 = 2 * pi / agm(2 * sqrt(B), sqrt(2 * B + A), work);
  Real s = pi / agm(2 * sqrt(B), sqrt(2 * B - A), work);
  return Real(-exp(-pi * w1 / (2 * s)));
}

struct TateCoefficients {
  Real a4, a6;
};

inline TateCoefficients tate_coefficients(const Real& q, unsigned bits = kDefaultPrecision) {
  PrecisionScope scope(bits + detail::kGuardBits);
  if (abs(q) >= 1) throw InvalidArgumentError("|q| >= 1");
  Real s3 = 0, s5 = 0, qn = 1;
  Real eps = detail::eps_for(bits);
  for (long n = 1; q != 0; ++n) {
    qn *= q;
    Real t = qn / (1 - qn);
    Real n3 = Real(n) * n * n;
    s3 += n3 * t;
    s5 += n3 * n * n * t;
    if (abs(qn) * n3 * n * n < eps) break;
  }
  return {Real(-5 * s3), Real(-(5 * s3 + 7 * s5) / 12)};
}

inline Real j_invariant_tate(const Real& q, unsigned bits = kDefaultPrecision) {
  auto co = tate_coefficients(q, bits);
  PrecisionScope scope(bits + detail::kGuardBits);
  auto w = invariants_of<Real>(Real(1), Real(0), Real(0), co.a4, co.a6);
  return w.c4 * w.c4 * w.c4 / w.disc;
}

// x = l^2 X + r, y = l^3 Y + s l^2 X + t carries E_q onto E.
struct TateIsomorphism {
  Real q, l, l2, r, s, t;
};

// The sign of l is fixed as -sign(q); the other choice replaces every u by 1/u
// (beta by 1 - beta), which the twist bit absorbs.
inline TateIsomorphism tate_isomorphism(const Curve& c, const Real& q,
                                        unsigned bits = kDefaultPrecision) {
  auto co = tate_coefficients(q, bits);
  PrecisionScope scope(bits + detail::kGuardBits);
  auto wq = invariants_of<Real>(Real(1), Real(0), Real(0), co.a4, co.a6);
  Real c4 = to_real(c.c4), c6 = to_real(c.c6);
  Real l2;
  if (c.c4 == 0)
    l2 = detail::signed_cbrt(c6 / wq.c6);
  else if (c.c6 == 0)
    l2 = sqrt(c4 / wq.c4);
  else
    l2 = c6 * wq.c4 / (c4 * wq.c6);
  Real l = sqrt(l2);
  if (q > 0) l = -l;
  Real a1 = to_real(c.a1), a2 = to_real(c.a2), a3 = to_real(c.a3);
  Real s = (l - a1) / 2;
  Real r = (-a2 + s * a1 + s * s) / 3;
  Real t = (-a3 - r * a1) / 2;
  return {q, l, l2, r, s, t};
}

struct TateXY {
  Real X, Y;
};

namespace detail {

inline Real lambert_s1(const Real& q, const Real& eps) {
  Real s1 = 0, qn = 1;
  for (long n = 1; q != 0; ++n) {
    qn *= q;
    s1 += n * qn / (1 - qn);
    if (abs(qn) * n < eps) break;
  }
  return s1;
}

}  // namespace detail

// Coordinates on E_q of the class of u, by the Tate series.
inline TateXY tate_xy(const Real& u, const Real& q, unsigned bits) {
  Real eps = detail::eps_for(bits);
  Real X = 0, Y = 0;
  Real t = u;
  for (int n = 0; n < 100000; ++n) {  // t = q^n u
    Real d = 1 - t;
    X += t / (d * d);
    Y += t * t / (d * d * d);
    if (abs(t) < eps || q == 0) break;
    t *= q;
  }
  Real w = q / u;
  for (int m = 1; m < 100000 && q != 0; ++m) {  // w = q^m / u
    Real d = 1 - w;
    X += w / (d * d);
    Y -= w / (d * d * d);
    if (abs(w) < eps) break;
    w *= q;
  }
  Real s1 = detail::lambert_s1(q, eps);
  return {Real(X - 2 * s1), Real(Y + s1)};
}

inline Real tate_dx(const Real& u, const Real& q, unsigned bits) {
  Real eps = detail::eps_for(bits);
  Real acc = 0;
  Real t = u;
  for (int n = 0; n < 100000; ++n) {
    Real d = 1 - t;
    acc += t * (1 + t) / (d * d * d);
    if (abs(t) < eps || q == 0) break;
    t *= q;
  }
  Real w = q / u;
  for (int m = 1; m < 100000 && q != 0; ++m) {
    Real d = 1 - w;
    acc -= w * (1 + w) / (d * d * d);
    if (abs(w) < eps) break;
    w *= q;
  }
  return acc / u;
}

// Image on E of the class of u.
inline std::pair<Real, Real> tate_to_curve(const TateIsomorphism& iso, const Real& u,
                                           unsigned bits) {
  auto xy = tate_xy(u, iso.q, bits);
  Real x = iso.l2 * xy.X + iso.r;
  Real y = iso.l2 * iso.l * xy.Y + iso.s * iso.l2 * xy.X + iso.t;
  return {x, y};
}

inline bool is_torsion(const Curve& c, const CurvePoint& p) {
  // rational torsion has order at most 12
  CurvePoint acc;
  for (int n = 1; n <= 12; ++n) {
    acc = add_points(c, acc, p);
    if (acc.is_identity()) return true;
  }
  return false;
}

// u in R* with u = q^m u0, q < |u| < 1 (q > 0) or q^2 < u < 1 (q < 0).
inline Real normalize_u(const Real& u0, const Real& q) {
  if (u0 == 0) throw InvalidArgumentError("u = 0");
  if (q == 0 || abs(q) >= 1) throw InvalidArgumentError("need 0 < |q| < 1");
  if (q < 0 && u0 < 0) throw InvalidArgumentError("u must be positive when q < 0");
  Real base = q > 0 ? q : Real(q * q);
  Real ratio = log(abs(u0)) / log(base);
  Real fl = floor(ratio);
  Real near = round(ratio);
  unsigned bits = static_cast<unsigned>(mpfr_get_prec(u0.backend().data()));
  if (abs(ratio - near) < pow2(-static_cast<long>(bits) / 2))
    throw LatticeElementError("u is a power of q; the point is the identity");
  long m = -fl.convert_to<long>();
  return u0 * pow(base, m);
}

inline Real beta(const Real& u, const Real& q) {
  if (q > 0) return log(abs(u)) / log(q);
  if (u <= 0) throw InvalidArgumentError("q < 0 requires u > 0");
  return log(u) / log(-q) / 2;
}

// Multiplicative parameter of P under E(R) = R*/q^Z, normalized.
inline Real elliptic_log_u(const Curve& c, const Real& q, const CurvePoint& p,
                           unsigned bits = kDefaultPrecision) {
  if (p.is_identity()) throw IdentityPointError("elliptic logarithm of the identity");
  unsigned work = bits + detail::kGuardBits;
  auto iso = tate_isomorphism(c, q, bits);
  PrecisionScope scope(work);
  Real qw = q;
  Real xp = to_real(p.x()), yp = to_real(p.y());
  Real X = (xp - iso.r) / iso.l2;
  Real Y = (yp - iso.s * iso.l2 * X - iso.t) / (iso.l2 * iso.l);

  auto Xof = [&](const Real& u) { return tate_xy(u, qw, work).X; };

  // Solve X(u) = X on (lo, hi) where X is monotone; bracketed Newton.
  auto solve = [&](Real lo, Real hi, bool increasing) {
    Real tol = pow2(-static_cast<long>(work));
    Real u = (lo + hi) / 2;
    for (int it = 0; it < 20000; ++it) {
      Real fx = Xof(u) - X;
      bool below = increasing ? fx < 0 : fx > 0;
      if (below)
        lo = u;
      else
        hi = u;
      Real d = tate_dx(u, qw, work);
      Real next = d != 0 ? Real(u - fx / d) : Real((lo + hi) / 2);
      if (!(next > lo && next < hi)) next = (lo + hi) / 2;
      Real step = abs(next - u);
      u = next;
      if (step <= tol * abs(u) || hi - lo <= tol * abs(u)) break;
    }
    return u;
  };

  Real u, partner;
  if (qw > 0) {
    Real rq = sqrt(qw);
    if (X >= Xof(rq)) {
      u = solve(rq, Real(1), true);
    } else {
      Real xa = Xof(Real(-1)), xb = Xof(Real(-rq));
      u = solve(Real(-1), Real(-rq), xb > xa);
    }
    partner = qw / u;
  } else {
    Real aq = -qw;
    u = solve(aq, Real(1), true);
    partner = qw * qw / u;
  }
  Real y1 = tate_xy(u, qw, work).Y, y2 = tate_xy(partner, qw, work).Y;
  Real chosen = abs(y1 - Y) <= abs(y2 - Y) ? u : partner;
  return normalize_u(chosen, qw);
}

struct ThetaValue {
  Real value;
  long truncation_bound = 0;  // factors m = 1..truncation_bound used
  Real error_bound;           // relative
  Real min_factor;            // smallest |factor|; near 0 means the sign is fragile
  int sign() const { return value > 0 ? 1 : (value < 0 ? -1 : 0); }
};

// theta(w,q) = (1-w) prod_{m>=1} (1-q^m w)(1-q^m/w)/(1-q^m)^2
inline ThetaValue theta_eval(const Real& w, const Real& q, unsigned bits = kDefaultPrecision) {
  if (w == 0) throw InvalidArgumentError("theta at w = 0");
  PrecisionScope scope(bits + detail::kGuardBits);
  Real eps = detail::eps_for(bits);
  Real big = max(abs(w), Real(1 / abs(w)));
  ThetaValue out;
  out.value = 1 - w;
  out.min_factor = abs(out.value);
  Real qm = 1;
  long m = 0;
  while (q != 0) {
    ++m;
    qm *= q;
    Real f1 = 1 - qm * w, f2 = 1 - qm / w, f0 = 1 - qm;
    out.value *= f1 * f2 / (f0 * f0);
    out.min_factor = min(out.min_factor, Real(min(abs(f1), abs(f2))));
    if (abs(qm) * big < eps) break;
  }
  out.truncation_bound = m;
  Real aq = abs(q);
  out.error_bound = q == 0 ? Real(0) : Real(4 * abs(qm * q) * (big + 1) / (1 - aq));
  return out;
}

// q, u, beta for a configuration; refined() rebuilds at twice the precision.
class AnalyticContext : public std::enable_shared_from_this<AnalyticContext> {
 public:
  static std::shared_ptr<const AnalyticContext> build(const Curve& c,
                                                      std::vector<CurvePoint> points,
                                                      unsigned bits = kDefaultPrecision) {
    if (bits < 64) throw InvalidArgumentError("precision below 64 bits");
    auto ctx = std::shared_ptr<AnalyticContext>(new AnalyticContext);
    ctx->curve = c;
    ctx->points = std::move(points);
    ctx->precision = bits;
    ctx->q = real_parameters(c, bits);
    for (const auto& p : ctx->points) {
      ctx->torsion.push_back(is_torsion(c, p));
      ctx->u.push_back(elliptic_log_u(c, ctx->q, p, bits));
      PrecisionScope scope(bits + detail::kGuardBits);
      ctx->beta.push_back(ellnet::beta(ctx->u.back(), ctx->q));
    }
    std::size_t n = ctx->points.size();
    ctx->perm.resize(n);
    std::iota(ctx->perm.begin(), ctx->perm.end(), 0);
    std::stable_partition(ctx->perm.begin(), ctx->perm.end(),
                          [&](std::size_t i) { return ctx->u[i] < 0; });
    ctx->k = static_cast<std::size_t>(
        std::count_if(ctx->u.begin(), ctx->u.end(), [](const Real& x) { return x < 0; }));
    return ctx;
  }

  Curve curve;
  std::vector<CurvePoint> points;
  unsigned precision = kDefaultPrecision;
  Real q;
  std::vector<Real> u, beta;
  std::vector<bool> torsion;
  std::size_t k = 0;
  std::vector<std::size_t> perm;

  bool negative(std::size_t i) const { return u.at(i) < 0; }
  std::size_t rank() const { return points.size(); }

  std::shared_ptr<const AnalyticContext> refined() const {
    std::lock_guard<std::mutex> lock(mutex_);
    if (!refined_) {
      unsigned next = precision * 2;
      if (next > max_precision())
        throw PrecisionExhaustedError("floor guard unresolved at " + std::to_string(precision) +
                                      " bits");
      refined_ = build(curve, points, next);
    }
    return refined_;
  }

 private:
  AnalyticContext() = default;
  mutable std::mutex mutex_;
  mutable std::shared_ptr<const AnalyticContext> refined_;
};

using ContextPtr = std::shared_ptr<const AnalyticContext>;

inline ContextPtr analytic_context(const Curve& c, std::vector<CurvePoint> points,
                                   unsigned bits = kDefaultPrecision) {
  return AnalyticContext::build(c, std::move(points), bits);
}

// floor(expr(ctx)) once expr is at least 2^-32 away from an integer; otherwise
// retry on refined contexts.
template <class Expr>
long guarded_floor(const AnalyticContext& ctx, Expr&& expr) {
  const AnalyticContext* cur = &ctx;
  ContextPtr hold;
  for (;;) {
    PrecisionScope scope(cur->precision + detail::kGuardBits);
    Real t = expr(*cur);
    Real near = round(t);
    if (abs(t - near) > pow2(-32)) return floor(t).template convert_to<long>();
    hold = cur->refined();
    cur = hold.get();
  }
}

// floor(sum c_i beta_i)
inline long floor_beta_combination(const AnalyticContext& ctx, const IndexVector& c) {
  if (c.size() != ctx.rank()) throw InvalidArgumentError("coefficient rank mismatch");
  return guarded_floor(ctx, [&](const AnalyticContext& x) {
    Real t = 0;
    for (std::size_t i = 0; i < c.size(); ++i) t += c[i] * x.beta[i];
    return t;
  });
}

// Sign of theta at w = prod u_i^{c_i}, escalating while a factor is within 2^-32 of 0.
inline int theta_sign_guarded(const AnalyticContext& ctx, const IndexVector& c) {
  const AnalyticContext* cur = &ctx;
  ContextPtr hold;
  for (;;) {
    PrecisionScope scope(cur->precision + detail::kGuardBits);
    Real w = 1;
    for (std::size_t i = 0; i < c.size(); ++i) w *= pow(cur->u[i], c[i]);
    ThetaValue th = theta_eval(w, cur->q, cur->precision);
    if (th.min_factor > pow2(-32)) return th.sign();
    hold = cur->refined();
    cur = hold.get();
  }
}

struct OmegaParity {
  int u_power = 0;     // prod u_i^{(v_i^2 - v_i)/2}
  int theta_sum = 0;   // theta(prod u_i^{v_i}, q)
  int theta_self = 0;  // prod theta(u_i, q)^{2 v_i^2 - sum_k v_i v_k}
  int theta_pair = 0;  // prod_{i<j} theta(u_i u_j, q)^{v_i v_j}
  int total() const { return (u_power + theta_sum + theta_self + theta_pair) % 2; }
};

inline OmegaParity omega_parity_components(const AnalyticContext& ctx, const IndexVector& v) {
  if (v.size() != ctx.rank()) throw InvalidArgumentError("index rank mismatch");
  if (is_zero(v)) throw InvalidArgumentError("v = 0");
  OmegaParity out;
  std::size_t n = v.size();
  long vsum = std::accumulate(v.begin(), v.end(), 0L);
  for (std::size_t i = 0; i < n; ++i) {
    if (ctx.negative(i)) out.u_power = (out.u_power + mod2((v[i] * v[i] - v[i]) / 2)) % 2;
    long e = 2 * v[i] * v[i] - v[i] * vsum;
    if (mod2(e) && theta_sign_guarded(ctx, unit_vector(n, i)) < 0) out.theta_self ^= 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!mod2(v[i] * v[j])) continue;
      IndexVector c(n, 0);
      c[i] = c[j] = 1;
      if (theta_sign_guarded(ctx, c) < 0) out.theta_pair ^= 1;
    }
  }
  out.theta_sum = theta_sign_guarded(ctx, v) < 0 ? 1 : 0;
  return out;
}

}  // namespace ellnet

#endif  // ELLNET_TATE_HPP
