#ifndef ELLNET_NET_HPP
#define ELLNET_NET_HPP

#include <array>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ellnet/curve.hpp"
#include "ellnet/division_poly.hpp"
#include "ellnet/index.hpp"
#include "ellnet/quadratic_form.hpp"

namespace ellnet {

enum class Normalization { analytic, denominator_cleared };

struct NetConfig {
  Curve curve;
  std::vector<CurvePoint> points;
  Normalization normalization = Normalization::analytic;
  DenominatorConvention convention = DenominatorConvention::quotient;

  std::size_t rank() const { return points.size(); }
};

inline NetConfig make_net_config(const Curve& c, std::vector<CurvePoint> points,
                                 Normalization norm = Normalization::analytic,
                                 DenominatorConvention conv = DenominatorConvention::quotient) {
  if (points.empty() || points.size() > 2)
    throw InvalidArgumentError("exact nets are available for rank 1 and 2 only");
  for (const auto& p : points) {
    if (p.is_identity()) throw IdentityPointError("net point is the identity");
    if (!on_curve(c, p)) throw NotOnCurveError("net point is not on the curve");
  }
  if (points.size() == 2 && points[0].x() == points[1].x())
    throw DegenerateConfigurationError("P1 = +-P2");
  return {c, std::move(points), norm, conv};
}

// Values on the seed set, analytic normalization.
inline std::map<IndexVector, Rational> net_seed(const NetConfig& cfg) {
  std::map<IndexVector, Rational> s;
  const Curve& c = cfg.curve;
  DivisionPolynomials psi1(c, cfg.points[0]);
  if (cfg.rank() == 1) {
    for (long n = 1; n <= 4; ++n) s[{n}] = psi1(n);
    return s;
  }
  const CurvePoint& p1 = cfg.points[0];
  const CurvePoint& p2 = cfg.points[1];
  DivisionPolynomials psi2(c, p2);
  CurvePoint sum = add_points(c, p1, p2);
  if (sum.is_identity() || p1.x() == p2.x())
    throw DegenerateConfigurationError("seed denominator vanishes; points are dependent");
  s[{1, 0}] = 1;
  s[{0, 1}] = 1;
  s[{1, 1}] = 1;
  s[{1, -1}] = p2.x() - p1.x();
  for (long n = 2; n <= 4; ++n) {
    s[{n, 0}] = psi1(n);
    s[{0, n}] = psi2(n);
  }
  s[{2, 1}] = p1.x() - sum.x();
  s[{1, 2}] = p2.x() - sum.x();
  return s;
}

// Memoized net over Z^1 or Z^2.  Rank 2 is filled column by column:
//   column 0 from psi_n(P2), column 1 from the seeds and the instance
//   p=(0,m), q=(0,-1), r=(0,1), s=e1, columns a>=2 from
//   W(a,b) W(a-2,b) = W(a-1,b+1) W(a-1,b-1) - W(1,-1) W(a-1,b)^2.
// Column a is kept for |b| <= L-(a-1).  Negative a comes from W(-v) = -W(v).
class NetTable {
 public:
  explicit NetTable(NetConfig cfg) : cfg_(std::move(cfg)), psi1_(cfg_.curve, cfg_.points[0]) {
    if (cfg_.rank() == 2) {
      psi2_.emplace(cfg_.curve, cfg_.points[1]);
      auto s = net_seed(cfg_);
      w1m1_ = s[{1, -1}];
      w12_ = s[{1, 2}];
      CurvePoint diff = add_points(cfg_.curve, cfg_.points[0], negate(cfg_.curve, cfg_.points[1]));
      w1m2_ = (cfg_.points[1].x() - diff.x()) * w1m1_ * w1m1_;
    }
    if (cfg_.normalization == Normalization::denominator_cleared)
      gamma_ = gamma_matrix(cfg_.curve, cfg_.points, cfg_.convention);
  }

  const NetConfig& config() const { return cfg_; }
  std::size_t rank() const { return cfg_.rank(); }

  // Value in the table's normalization.
  Rational value(const IndexVector& v) {
    Rational w = analytic(v);
    if (gamma_ && w != 0) w *= F_eval(*gamma_, v);
    return w;
  }

  // Value in the analytic normalization regardless of the configured one.
  Rational analytic(const IndexVector& v) {
    if (v.size() != rank()) throw InvalidArgumentError("index rank does not match the net");
    if (rank() == 1) return psi1_(v[0]);
    long a = v[0], b = v[1];
    if (a < 0) return -cell(-a, -b);
    return cell(a, b);
  }

  // Pre-extend so that every v with |v1| <= a, |v2| <= b is available.
  void reserve(long a, long b) {
    if (rank() == 2) ensure(std::labs(a), std::labs(b));
  }

  const std::optional<GammaMatrix>& gamma() const { return gamma_; }

 private:
  static std::size_t slot(long b, long half) { return static_cast<std::size_t>(b + half); }

  long half_width(long a) const { return a == 0 ? L_ + 1 : L_ - (a - 1); }

  Rational cell(long a, long b) {
    ensure(a, std::labs(b));
    return cols_[static_cast<std::size_t>(a)][slot(b, half_width(a))];
  }

  void ensure(long a, long b) {
    if (!cols_.empty() && a <= A_ && b <= half_width(a)) return;
    long new_a = std::max({a, 2 * A_, 4L});
    long new_l = std::max({b + new_a + 1, 2 * L_, new_a + 4});
    fill(new_a, new_l);
  }

  Rational psi2(long n) { return (*psi2_)(n); }

  void fill(long A, long L) {
    A_ = A;
    L_ = L;
    cols_.assign(static_cast<std::size_t>(A + 1), {});
    // column 0
    {
      long h = half_width(0);
      auto& col = cols_[0];
      col.resize(static_cast<std::size_t>(2 * h + 1));
      for (long b = -h; b <= h; ++b) col[slot(b, h)] = psi2(b);
    }
    // column 1
    {
      long h = half_width(1);
      std::map<long, Rational> w;
      w[0] = 1;
      w[1] = 1;
      w[-1] = w1m1_;
      w[2] = w12_;
      w[-2] = w1m2_;
      Rational p2 = psi2(2);
      for (long m = 2; m + 1 <= h; ++m) {
        Rational den = w1m1_ * psi2(m - 1);
        if (den == 0) throw ZeroDivisorError("column 1 divisor vanishes at m=" + std::to_string(m));
        w[m + 1] = (p2 * psi2(m) * w[m] - psi2(m + 1) * w[m - 1]) / den;
      }
      for (long m = -2; m - 1 >= -h; --m) {
        Rational den = psi2(m + 1);
        if (den == 0) throw ZeroDivisorError("column 1 divisor vanishes at m=" + std::to_string(m));
        w[m - 1] = (p2 * psi2(m) * w[m] - w1m1_ * psi2(m - 1) * w[m + 1]) / den;
      }
      auto& col = cols_[1];
      col.resize(static_cast<std::size_t>(2 * h + 1));
      for (long b = -h; b <= h; ++b) col[slot(b, h)] = w[b];
    }
    for (long a = 2; a <= A; ++a) {
      long h = half_width(a), hp = half_width(a - 1), hpp = half_width(a - 2);
      const auto& prev = cols_[static_cast<std::size_t>(a - 1)];
      const auto& prev2 = cols_[static_cast<std::size_t>(a - 2)];
      auto& col = cols_[static_cast<std::size_t>(a)];
      col.resize(static_cast<std::size_t>(2 * h + 1));
      for (long b = -h; b <= h; ++b) {
        if (a == 2 && b == 0) {
          col[slot(b, h)] = psi1_(2);
          continue;
        }
        const Rational& den = prev2[slot(b, hpp)];
        if (den == 0)
          throw ZeroDivisorError("net divisor W(" + std::to_string(a - 2) + "," +
                                 std::to_string(b) + ") vanishes; points are dependent or torsion");
        const Rational& mid = prev[slot(b, hp)];
        col[slot(b, h)] =
            (prev[slot(b + 1, hp)] * prev[slot(b - 1, hp)] - w1m1_ * mid * mid) / den;
      }
    }
  }

  NetConfig cfg_;
  DivisionPolynomials psi1_;
  std::optional<DivisionPolynomials> psi2_;
  std::optional<GammaMatrix> gamma_;
  Rational w1m1_, w12_, w1m2_;
  long A_ = 0, L_ = 0;
  std::vector<std::vector<Rational>> cols_;
};

inline Rational net_value(NetTable& table, const IndexVector& v) { return table.value(v); }

struct NetBox {
  long v1min, v1max, v2min = 0, v2max = 0;
};

// Fills and returns the grid of values; rows indexed by v2, columns by v1.
inline std::vector<std::vector<Rational>> net_table(NetTable& table, const NetBox& box) {
  if (box.v1min > box.v1max || box.v2min > box.v2max)
    throw InvalidArgumentError("empty box");
  long reach1 = std::max(std::labs(box.v1min), std::labs(box.v1max));
  long reach2 = std::max(std::labs(box.v2min), std::labs(box.v2max));
  table.reserve(reach1, reach2);
  std::vector<std::vector<Rational>> grid;
  for (long b = box.v2min; b <= box.v2max; ++b) {
    std::vector<Rational> row;
    for (long a = box.v1min; a <= box.v1max; ++a)
      row.push_back(table.rank() == 1 ? table.value({a}) : table.value({a, b}));
    grid.push_back(std::move(row));
  }
  return grid;
}

using Quadruple = std::array<IndexVector, 4>;  // p, q, r, s

struct RecurrenceOutcome {
  Quadruple quad;
  std::optional<Rational> residual;  // empty if evaluation failed
  std::string error;
};

struct RecurrenceReport {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::vector<RecurrenceOutcome> outcomes;
  bool pass() const { return failures == 0; }
};

template <class W>
Rational recurrence_residual(W&& w, const Quadruple& t) {
  const auto& [p, q, r, s] = t;
  return w(p + q + s) * w(p - q) * w(r + s) * w(r) + w(q + r + s) * w(q - r) * w(p + s) * w(p) +
         w(r + p + s) * w(r - p) * w(q + s) * w(q);
}

// W is any callable IndexVector -> Rational, of any rank.
template <class W>
RecurrenceReport verify_recurrence(W&& w, const std::vector<Quadruple>& quads) {
  RecurrenceReport rep;
  for (const auto& t : quads) {
    RecurrenceOutcome o{t, std::nullopt, {}};
    try {
      o.residual = recurrence_residual(w, t);
      if (*o.residual != 0) ++rep.failures;
    } catch (const Error& e) {
      o.error = e.what();
      ++rep.failures;
    }
    ++rep.checked;
    rep.outcomes.push_back(std::move(o));
  }
  return rep;
}

inline std::vector<Quadruple> random_quadruples(std::size_t count, std::size_t rank, long bound,
                                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-bound, bound);
  std::vector<Quadruple> out(count);
  for (auto& t : out)
    for (auto& v : t) {
      v.resize(rank);
      for (auto& x : v) x = dist(rng);
    }
  return out;
}

// x(v.P) = x(P_i) - W(v+e_i) W(v-e_i) / W(v)^2 in the analytic normalization.
inline bool coordinate_identity_check(NetTable& table, const IndexVector& v, std::size_t i) {
  const NetConfig& cfg = table.config();
  if (i >= cfg.rank()) throw InvalidArgumentError("axis index out of range");
  CurvePoint vp = linear_combo(cfg.curve, cfg.points, v);
  if (vp.is_identity()) throw IdentityCombinationError("v.P is the identity");
  IndexVector e = unit_vector(cfg.rank(), i);
  Rational w = table.analytic(v);
  if (w == 0) throw ZeroDivisorError("W(v) = 0");
  Rational rhs = cfg.points[i].x() - table.analytic(v + e) * table.analytic(v - e) / (w * w);
  return rhs == vp.x();
}

}  // namespace ellnet

#endif  // ELLNET_NET_HPP
