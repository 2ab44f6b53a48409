#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace ellnet;
using fixtures::pt;

namespace {

NetTable analytic_table(const fixtures::Config& c) {
  return NetTable(make_net_config(c.curve, c.points));
}

void expect_table(const fixtures::PrintedTable& t) {
  EXPECT_EQ(fixtures::matching_entries(t, t.convention), t.entries()) << t.config.name;
}

}  // namespace

TEST(NetSeed, Table3Configuration) {
  auto cfg = make_net_config(fixtures::e2(), fixtures::ex53().points);
  auto s = net_seed(cfg);
  EXPECT_EQ((s[{1, -1}]), 1);
  EXPECT_EQ((s[{2, 1}]), -5);
  EXPECT_EQ((s[{1, 1}]), 1);
  EXPECT_EQ(s.size(), 12u);
}

TEST(NetSeed, FillAgreesWithSeeds) {
  for (const auto& c : fixtures::all_configs()) {
    auto cfg = make_net_config(c.curve, c.points);
    NetTable t(cfg);
    for (const auto& [v, w] : net_seed(cfg)) EXPECT_EQ(t.analytic(v), w) << c.name;
  }
}

TEST(NetConfig, RejectsBadPoints) {
  Curve c = fixtures::e2();
  CurvePoint p = pt(c, -1, 1);
  EXPECT_THROW(make_net_config(c, {p, p}), DegenerateConfigurationError);
  EXPECT_THROW(make_net_config(c, {p, negate(c, p)}), DegenerateConfigurationError);
  EXPECT_THROW(make_net_config(c, {p, CurvePoint::identity()}), IdentityPointError);
  EXPECT_THROW(make_net_config(c, {p, p, p}), InvalidArgumentError);
}

TEST(NetValue, Table3Corners) {
  NetTable t = analytic_table(fixtures::ex53());
  EXPECT_EQ(t.value({5, 2}), -106201);
  EXPECT_EQ(t.value({-5, -2}), 106201);
  EXPECT_EQ(t.value({0, 0}), 0);
}

TEST(NetTable, Table2) { expect_table(fixtures::table2()); }
TEST(NetTable, Table3) { expect_table(fixtures::table3()); }
TEST(NetTable, Table4) { expect_table(fixtures::table4()); }
TEST(NetTable, Table1ProductForm) { expect_table(fixtures::table1()); }

TEST(NetTable, Table1QuotientFormDiffersByPowerOfFive) {
  // with gamma_12 = D(P1+P2)/(D(P1)D(P2)) the entries are the printed ones
  // divided by 5^{v1 v2}
  auto t = fixtures::table1();
  NetTable net(make_net_config(t.config.curve, t.config.points, Normalization::denominator_cleared,
                               DenominatorConvention::quotient));
  for (long b = t.v2min; b <= t.v2max; ++b)
    for (long a = t.v1min; a <= t.v1max; ++a)
      EXPECT_EQ(net.value({a, b}) * pow(Rational(5), a * b), Rational(t.at(a, b)));
}

TEST(NetTable, GridMatchesTable2) {
  auto t = fixtures::table2();
  NetTable net(make_net_config(t.config.curve, t.config.points, Normalization::denominator_cleared));
  auto grid = net_table(net, {0, 3, 0, 6});
  ASSERT_EQ(grid.size(), 7u);
  for (long b = 0; b <= 6; ++b)
    for (long a = 0; a <= 3; ++a)
      EXPECT_EQ(grid[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)],
                Rational(t.at(a, b)));
}

TEST(NetTable, OddSymmetryAndZero) {
  for (const auto& c : fixtures::all_configs()) {
    NetTable t = analytic_table(c);
    EXPECT_EQ(t.value({0, 0}), 0);
    for (long a = -12; a <= 12; ++a)
      for (long b = -12; b <= 12; ++b) EXPECT_EQ(t.value({a, b}), -t.value({-a, -b}));
  }
}

TEST(NetTable, AxesAreDivisionPolynomials) {
  for (const auto& c : fixtures::all_configs()) {
    NetTable t = analytic_table(c);
    DivisionPolynomials psi1(c.curve, c.points[0]), psi2(c.curve, c.points[1]);
    for (long n = -12; n <= 12; ++n) {
      EXPECT_EQ(t.value({n, 0}), psi1(n));
      EXPECT_EQ(t.value({0, n}), psi2(n));
    }
  }
}

TEST(NetTable, GrowsOnDemand) {
  NetTable a = analytic_table(fixtures::ex53());
  NetTable b = analytic_table(fixtures::ex53());
  b.reserve(30, 30);
  for (long v1 : {-29, -3, 0, 7, 30})
    for (long v2 : {-30, -1, 0, 12, 29}) EXPECT_EQ(a.value({v1, v2}), b.value({v1, v2}));
}

TEST(Recurrence, TrivialQuadruple) {
  NetTable t = analytic_table(fixtures::ex53());
  IndexVector z{0, 0};
  auto rep = verify_recurrence([&](const IndexVector& v) { return t.value(v); },
                               {Quadruple{z, z, z, z}});
  EXPECT_TRUE(rep.pass());
}

TEST(Recurrence, RandomQuadruplesAllConfigs) {
  for (const auto& c : fixtures::all_configs()) {
    NetTable t = analytic_table(c);
    auto quads = random_quadruples(1000, 2, 6, 2024);
    auto rep = verify_recurrence([&](const IndexVector& v) { return t.value(v); }, quads);
    EXPECT_EQ(rep.checked, 1000u);
    EXPECT_TRUE(rep.pass()) << c.name << " failures " << rep.failures;
  }
}

TEST(Recurrence, DenominatorClearedIsStillANet) {
  auto c = fixtures::ex51();
  NetTable t(make_net_config(c.curve, c.points, Normalization::denominator_cleared));
  auto rep = verify_recurrence([&](const IndexVector& v) { return t.value(v); },
                               random_quadruples(200, 2, 4, 5));
  EXPECT_TRUE(rep.pass());
}

TEST(Recurrence, ReportsResiduals) {
  auto bogus = [](const IndexVector& v) { return Rational(v[0] * v[0] + 1); };
  IndexVector p{1}, q{2}, r{3}, s{0};
  auto rep = verify_recurrence(bogus, {Quadruple{p, q, r, s}});
  EXPECT_FALSE(rep.pass());
  ASSERT_TRUE(rep.outcomes[0].residual.has_value());
  EXPECT_NE(*rep.outcomes[0].residual, 0);
}

TEST(Recurrence, RankOneIsTheSequenceRecurrence) {
  Curve c = fixtures::e1();
  NetTable t(make_net_config(c, {pt(c, -1, 3)}));
  std::vector<Quadruple> quads;
  for (long m = 2; m <= 9; ++m)
    for (long n = 1; n < m; ++n) quads.push_back({IndexVector{m}, {n}, {1}, {0}});
  auto rep = verify_recurrence([&](const IndexVector& v) { return t.value(v); }, quads);
  EXPECT_TRUE(rep.pass());
}

TEST(CoordinateIdentity, WorkedAndBox) {
  NetTable t = analytic_table(fixtures::ex53());
  EXPECT_TRUE(coordinate_identity_check(t, {2, 1}, 0));
  EXPECT_TRUE(coordinate_identity_check(t, {0, 1}, 0));
  for (const auto& c : {fixtures::ex52(), fixtures::ex53(), fixtures::ex54()}) {
    NetTable tt = analytic_table(c);
    for (long a = 1; a <= 4; ++a)
      for (long b = 1; b <= 4; ++b)
        for (std::size_t i = 0; i < 2; ++i)
          EXPECT_TRUE(coordinate_identity_check(tt, {a, b}, i)) << c.name << " " << a << "," << b;
  }
}

TEST(CoordinateIdentity, RankOne) {
  Curve c = fixtures::e2();
  NetTable t(make_net_config(c, {pt(c, -1, 1)}));
  for (long n = 2; n <= 6; ++n) EXPECT_TRUE(coordinate_identity_check(t, {n}, 0));
}

TEST(NetTable, IntegerEntriesWhenHypothesisHolds) {
  for (const auto& c : {fixtures::ex52(), fixtures::ex53(), fixtures::ex54()}) {
    NetTable t(make_net_config(c.curve, c.points, Normalization::denominator_cleared));
    for (long a = -8; a <= 8; ++a)
      for (long b = -8; b <= 8; ++b) EXPECT_TRUE(is_integer(t.value({a, b})));
  }
}

TEST(NetTable, DependentPointsHitZeroDivisor) {
  Curve c = fixtures::e2();
  CurvePoint p = pt(c, -1, 1);
  NetTable t(make_net_config(c, {p, multiply(c, 2, p)}));
  // W(2,-1) = 0 is a divisor of column 4
  EXPECT_THROW(t.value({1, 0}), ZeroDivisorError);
}
