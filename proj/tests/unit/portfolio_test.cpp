#include <cmath>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "fxc/error.hpp"
#include "fxc/mc_arfima.hpp"
#include "fxc/portfolio.hpp"

using namespace fxc;

namespace {

FluctuationSet fx(double f_g, double f_c, double f_gc) {
  FluctuationSet fs;
  fs.scale = 20;
  fs.n_segments = 10;
  fs.f_x_q = f_g;
  fs.f_y_q = f_c;
  fs.f_xy_q = f_gc;
  return fs;
}

}  // namespace

TEST(OptimalWeight, Examples) {
  EXPECT_EQ(optimal_weight(fx(2.0, 2.0, 0.0)).clipped, 0.5);
  EXPECT_EQ(optimal_weight(fx(3.0, 3.0, 1.0)).clipped, 0.5);
  EXPECT_DOUBLE_EQ(optimal_weight(fx(1.0, 4.0, 0.0)).clipped, 0.8);
}

TEST(OptimalWeight, DegenerateDenominatorFixture) {
  // F_g = 4, F_c = 1, F_gc = 2.5 makes the denominator vanish.
  EXPECT_THROW((void)optimal_weight(fx(4.0, 1.0, 2.5)), DegenerateFluctuation);
}

TEST(OptimalWeight, LowerClipBranch) {
  const auto w = optimal_weight(fx(4.0, 1.0, 1.5));
  EXPECT_DOUBLE_EQ(w.raw, -0.25);
  EXPECT_EQ(w.clipped, 0.0);
}

TEST(OptimalWeight, UpperClipBranch) {
  const auto w = optimal_weight(fx(1.0, 4.0, 1.5));
  EXPECT_DOUBLE_EQ(w.raw, 1.25);
  EXPECT_EQ(w.clipped, 1.0);
}

TEST(OptimalWeight, UncorrelatedIsInterior) {
  for (const double fg : {0.01, 0.5, 3.0}) {
    for (const double fc : {0.02, 1.0, 7.0}) {
      const auto w = optimal_weight(fx(fg, fc, 0.0));
      EXPECT_NEAR(w.raw, fc / (fg + fc), 1e-15);
      EXPECT_GT(w.clipped, 0.0);
      EXPECT_LT(w.clipped, 1.0);
    }
  }
}

TEST(ClipWeight, Idempotent) {
  for (const double w : {-3.0, -0.0, 0.3, 1.0, 1.7}) {
    const double c = clip_weight(w);
    EXPECT_GE(c, 0.0);
    EXPECT_LE(c, 1.0);
    EXPECT_EQ(clip_weight(c), c);
  }
}

TEST(HedgeRatio, Examples) {
  EXPECT_EQ(hedge_ratio(fx(1.0, 2.0, 0.0)), 0.0);
  EXPECT_DOUBLE_EQ(hedge_ratio(fx(1.0, 2.0, -0.3)), -0.3);
  EXPECT_DOUBLE_EQ(hedge_ratio(fx(2.5, 2.5, 2.5)), 1.0);
  EXPECT_THROW((void)hedge_ratio(fx(0.0, 1.0, 0.0)), DegenerateFluctuation);
}

TEST(PortfolioScan, PerfectSubstitutesAreDegenerate) {
  const auto x = fxt::gaussian(1000, 2);
  const AlignedPair same{TimeSeries(x), TimeSeries(x)};
  EXPECT_THROW((void)portfolio_scan(same, DetrendConfig{0.5, {20, 50}, 2.0}), DegenerateFluctuation);
}

TEST(PortfolioScan, NegativelyCoherentPairHasNegativeBeta) {
  McArfimaSpec spec;
  spec.cross_corr = -0.9;
  spec.seed = 5;
  const auto s = generate(spec);
  const auto m = portfolio_scan(AlignedPair(s.x, s.y), DetrendConfig{0.5, {10, 20, 50, 100, 200}, 2.0});
  ASSERT_EQ(m.size(), 10u);
  for (const auto& pm : m) EXPECT_LT(pm.beta, 0.0) << "s=" << pm.scale << " q=" << pm.q;
}

TEST(PortfolioScan, CalmAssetDominates) {
  const auto a = fxt::gaussian(4000, 31);
  const auto b = fxt::gaussian(4000, 32, 10.0);
  const auto m = portfolio_scan(AlignedPair(TimeSeries(a), TimeSeries(b)), DetrendConfig{0.5, {20, 100}, 2.0});
  for (const auto& pm : m) {
    EXPECT_GT(pm.w_g, 0.9);
    EXPECT_EQ(pm.w_g + pm.counterpart_weight(), 1.0);
  }
}

TEST(PortfolioScan, BetaSignFollowsCrossTerm) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto pair = fxt::gaussian_pair(400, 7000 + seed, (static_cast<double>(seed % 7) - 3.0) / 4.0);
    const DetrendConfig cfg{0.5, {10, 40}, 2.0};
    const auto fs = q_fluctuations(pair, cfg);
    const auto m = portfolio_scan(pair, cfg, std::vector<double>{2.0});
    for (std::size_t i = 0; i < fs.size(); ++i) {
      EXPECT_EQ(std::signbit(m[i].beta), std::signbit(fs[i].f_xy_q));
    }
  }
}

TEST(PortfolioScan, BetaIsHomogeneousInCounterpartScale) {
  const auto pair = fxt::gaussian_pair(1000, 3, 0.4);
  std::vector<double> y2(pair.y().values().begin(), pair.y().values().end());
  for (auto& v : y2) v *= 3.0;
  const DetrendConfig cfg{0.5, {10, 50, 200}, 2.0};
  const std::vector<double> q2{2.0};
  const auto base = portfolio_scan(pair, cfg, q2);
  const auto scaled = portfolio_scan(AlignedPair(pair.x(), TimeSeries(y2)), cfg, q2);
  for (std::size_t i = 0; i < base.size(); ++i) {
    EXPECT_NEAR(scaled[i].beta, 3.0 * base[i].beta, 1e-9 * std::abs(base[i].beta) + 1e-12);
  }
}
