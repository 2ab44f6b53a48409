#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace ellnet;

namespace {

Real golden_minus_one() {
  PrecisionScope scope(256);
  return Real((sqrt(Real(5)) - 1) / 2);
}

}  // namespace

TEST(ForEachIndex, OrderAndSize) {
  std::vector<IndexVector> seen;
  for_each_index({{0, 1}, {5, 6}}, [&](const IndexVector& v) { seen.push_back(v); });
  ASSERT_EQ(seen.size(), 4u);
  EXPECT_EQ(seen[0], (IndexVector{0, 5}));
  EXPECT_EQ(seen[1], (IndexVector{0, 6}));
  EXPECT_EQ(seen[3], (IndexVector{1, 6}));
  EXPECT_EQ(box_size(positive_box(3, 7)), 343u);
  EXPECT_THROW(for_each_index({{2, 1}}, [](const IndexVector&) {}), InvalidArgumentError);
}

TEST(SignCounts, FrequenciesSumToOne) {
  auto r = sign_counts([](const IndexVector& v) { return v[0] * v[0] + v[1]; }, {{-3, 4}, {0, 9}}, 3);
  EXPECT_EQ(r.total(), 80u);
  double s = 0;
  for (double f : r.frequencies) s += f;
  EXPECT_NEAR(s, 1.0, 1e-12);
  EXPECT_THROW(sign_counts([](const IndexVector&) { return 0; }, {{1, 2}}, 1), InvalidArgumentError);
}

TEST(SignCounts, PredictedParitiesAreBalanced) {
  for (const auto& c : fixtures::all_configs()) {
    auto pred = build_predictor(c.curve, c.points);
    auto r = sign_counts([&](const IndexVector& v) { return pred.parity(v); }, positive_box(2, 100));
    EXPECT_EQ(r.total(), 10000u);
    EXPECT_TRUE(r.within(0.45, 0.55)) << c.name << " " << r.frequencies[0];
  }
}

TEST(SignCounts, ExactAndPredictedAgree) {
  auto c = fixtures::ex53();
  auto pred = build_predictor(c.curve, c.points);
  NetTable t(make_net_config(c.curve, c.points));
  Box box = positive_box(2, 30);
  auto a = sign_counts([&](const IndexVector& v) { return pred.parity(v); }, box);
  auto b = sign_counts([&](const IndexVector& v) { return t.value(v) < 0 ? 1 : 0; }, box);
  EXPECT_EQ(a.counts, b.counts);
}

TEST(SignCounts, ShipseySequenceBalanced) {
  auto s = shipsey_sign_sequence(fixtures::e2(), 2000);
  auto r = sign_counts([&](const IndexVector& v) { return s[static_cast<std::size_t>(v[0])] < 0; },
                       positive_box(1, 2000));
  EXPECT_TRUE(r.within(0.45, 0.55)) << r.frequencies[0];
}

TEST(FloorArray, GoldenRatio) {
  PrecisionScope scope(256);
  Real b = golden_minus_one();
  auto r = floor_array_distribution({b}, Real(0), 2, positive_box(1, 10000));
  EXPECT_TRUE(r.within(0.45, 0.55));
  for (const char* shift : {"0.25", "0.5", "17.3"}) {
    auto s = floor_array_distribution({b}, Real(shift), 2, positive_box(1, 10000));
    EXPECT_TRUE(s.within(0.45, 0.55)) << shift;
  }
  auto m3 = floor_array_distribution({b}, Real(0), 3, positive_box(1, 10000));
  EXPECT_TRUE(m3.within(0.28, 0.39));
  EXPECT_THROW(floor_array_distribution({b, b}, Real(0), 2, positive_box(1, 4)), InvalidArgumentError);
}

TEST(FloorArray, RationalBetaCaughtByWeyl) {
  PrecisionScope scope(256);
  auto r = floor_array_distribution({Real("0.5")}, Real(0), 2, positive_box(1, 1000));
  EXPECT_DOUBLE_EQ(r.frequencies[0], 0.5);
  Real w = weyl_sum([](const IndexVector& v) { return Real(v[0]) / 2; }, positive_box(1, 1000), 2);
  EXPECT_LT(abs(w - 1), Real("1e-30"));
}

TEST(Weyl, TrivialSums) {
  PrecisionScope scope(256);
  for (long v : {10L, 100L, 1000L}) {
    Real w = weyl_sum([](const IndexVector& x) { return Real(x[0]) / 2; }, positive_box(1, v), 2);
    EXPECT_LT(abs(w - 1), Real("1e-30"));
  }
  Real k = weyl_sum([](const IndexVector&) { return Real("0.3"); }, positive_box(1, 50), 1);
  EXPECT_LT(abs(k - 1), Real("1e-30"));
  EXPECT_THROW(weyl_sum([](const IndexVector&) { return Real(0); }, positive_box(1, 5), 0),
               InvalidArgumentError);
}

TEST(Weyl, DecreasingForIrrationalSlope) {
  PrecisionScope scope(256);
  Real b = golden_minus_one();
  Real prev = 2;
  for (long v : {100L, 1000L, 10000L}) {
    Real w = weyl_sum([&](const IndexVector& x) { return Real(x[0] * b); }, positive_box(1, v), 1);
    EXPECT_LT(w, prev) << v;
    prev = w;
  }
}
