#include <algorithm>
#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "fxc/error.hpp"
#include "fxc/mc_arfima.hpp"
#include "fxc/surrogate.hpp"
#include "oracles.hpp"

using namespace fxc;

namespace {

std::vector<double> sorted(std::span<const double> v) {
  std::vector<double> out(v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> arfima(double d, std::size_t n, std::uint64_t seed) {
  McArfimaSpec spec;
  spec.d1 = d;
  spec.beta = 0.0;
  spec.length = n;
  spec.truncation = 2000;
  spec.seed = seed;
  return fxt::raw(generate(spec).x);
}

}  // namespace

TEST(Iaaft, PreservesValueMultiset) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const TimeSeries x(arfima(0.3, 500, seed));
    const auto s = iaaft_surrogate(x, IaaftConfig{1000, 1e-8, seed});
    EXPECT_EQ(sorted(s.values()), sorted(x.values()));
  }
}

TEST(Iaaft, PreservesPowerSpectrum) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto x = arfima(0.4, 1024, seed);
    const auto s = fxt::raw(iaaft_surrogate(TimeSeries(x), IaaftConfig{1000, 1e-8, seed + 100}));
    const double oracle_mismatch = oracle::spectrum_mismatch(s, x);
    EXPECT_LT(oracle_mismatch, 5e-3);
    EXPECT_NEAR(power_spectrum_mismatch(s, x), oracle_mismatch, 1e-9);
  }
}

TEST(Iaaft, DifferentSeedsAreDecorrelated) {
  const TimeSeries x(fxt::gaussian(1000, 1));
  int small = 0;
  for (std::uint64_t k = 0; k < 100; ++k) {
    const auto a = fxt::raw(iaaft_surrogate(x, IaaftConfig{100, 1e-8, 2 * k}));
    const auto b = fxt::raw(iaaft_surrogate(x, IaaftConfig{100, 1e-8, 2 * k + 1}));
    const double m = std::accumulate(a.begin(), a.end(), 0.0) / 1000.0;
    double sab = 0, saa = 0, sbb = 0;
    for (std::size_t i = 0; i < 1000; ++i) {
      sab += (a[i] - m) * (b[i] - m);
      saa += (a[i] - m) * (a[i] - m);
      sbb += (b[i] - m) * (b[i] - m);
    }
    if (std::abs(sab / std::sqrt(saa * sbb)) < 0.2) ++small;
  }
  EXPECT_EQ(small, 100);
}

TEST(Iaaft, Validation) {
  EXPECT_THROW((void)iaaft_surrogate(TimeSeries(fxt::gaussian(31, 1)), IaaftConfig{}), InvalidInput);
  EXPECT_THROW((void)iaaft_surrogate(TimeSeries(fxt::gaussian(64, 1)), IaaftConfig{0, 1e-8, 0}), InvalidInput);
}

TEST(PValue, Examples) {
  const std::vector<double> ens{-1.0, 0.0, 1.0, 2.0};
  EXPECT_DOUBLE_EQ(two_tailed_p_value(0.5, ens), 1.0);
  EXPECT_DOUBLE_EQ(two_tailed_p_value(10.0, ens), 1.0 / 5.0);
  EXPECT_DOUBLE_EQ(two_tailed_p_value(-1.0, ens), 3.0 / 5.0);
  EXPECT_THROW((void)two_tailed_p_value(0.0, std::vector<double>{}), InvalidInput);
}

TEST(Classify, Examples) {
  SurrogateTestReport r;
  r.q = 2.0;
  r.observed_rho = -0.4165;
  r.p_value = 0.0005;
  EXPECT_EQ(classify(r, 0.05).label(), "strong hedge");
  r.observed_rho = 0.0284;
  r.p_value = 0.16;
  EXPECT_EQ(classify(r, 0.05).label(), "weak hedge");
  r.q = 4.0;
  r.observed_rho = -0.1477;
  r.p_value = 0.0005;
  EXPECT_EQ(classify(r, 0.05).label(), "strong safe-haven");
  r.observed_rho = 0.3;
  EXPECT_EQ(classify(r, 0.05).strength, Strength::none);
  r.q = 3.0;
  EXPECT_EQ(classify(r, 0.05).role, Role::co_movement);
}

TEST(Stars, Thresholds) {
  EXPECT_EQ(significance_stars(0.001), "***");
  EXPECT_EQ(significance_stars(0.01), "***");
  EXPECT_EQ(significance_stars(0.03), "**");
  EXPECT_EQ(significance_stars(0.08), "*");
  EXPECT_EQ(significance_stars(0.2), "");
}

TEST(SurrogateTest, AntiCorrelatedPairIsSignificant) {
  const auto x = fxt::gaussian(5000, 12);
  auto noise = fxt::gaussian(5000, 13, 0.2);
  std::vector<double> y(5000);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = -x[i] + noise[i];
  const AlignedPair pair{TimeSeries(x), TimeSeries(y)};
  const auto reports = surrogate_test(pair, DetrendConfig{0.5, {20}, 2.0}, 100, IaaftConfig{});
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_LT(reports[0].p_value, 0.01);
  EXPECT_EQ(reports[0].classification.label(), "strong hedge");
  EXPECT_EQ(reports[0].surrogate_values.size(), 100u);
}

TEST(SurrogateTest, IdenticalInputsAreNone) {
  const auto x = fxt::gaussian(1000, 4);
  SurrogateTestConfig cfg;
  cfg.scales = {20, 100};
  cfg.n_surrogates = 100;
  const auto reports = surrogate_test(AlignedPair(TimeSeries(x), TimeSeries(x)), cfg);
  ASSERT_EQ(reports.size(), 4u);
  for (const auto& r : reports) {
    EXPECT_NEAR(r.observed_rho, 1.0, 1e-12);
    EXPECT_LE(r.p_value, 0.05);
    EXPECT_GT(r.p_value, 0.0);
    EXPECT_EQ(r.classification.strength, Strength::none);
  }
}

TEST(SurrogateTest, SymmetricInThePair) {
  const auto pair = fxt::gaussian_pair(600, 40, 0.2);
  SurrogateTestConfig cfg;
  cfg.scales = {10, 50};
  cfg.n_surrogates = 100;
  const auto a = surrogate_test(pair, cfg);
  const auto b = surrogate_test(pair.swapped(), cfg);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].p_value, b[i].p_value);
    ASSERT_EQ(a[i].surrogate_values.size(), b[i].surrogate_values.size());
    for (std::size_t k = 0; k < a[i].surrogate_values.size(); ++k) {
      EXPECT_NEAR(a[i].surrogate_values[k], b[i].surrogate_values[k], 1e-12);
    }
  }
}

TEST(SurrogateTest, IndependentOfThreadCount) {
  const auto pair = fxt::gaussian_pair(400, 41, 0.0);
  SurrogateTestConfig cfg;
  cfg.scales = {10};
  cfg.qs = {2.0};
  cfg.n_surrogates = 100;
  cfg.threads = 1;
  const auto a = surrogate_test(pair, cfg);
  cfg.threads = 4;
  const auto b = surrogate_test(pair, cfg);
  EXPECT_EQ(a[0].surrogate_values, b[0].surrogate_values);
}

TEST(SurrogateTest, Validation) {
  const auto pair = fxt::gaussian_pair(400, 1);
  SurrogateTestConfig cfg;
  cfg.scales = {10};
  cfg.n_surrogates = 99;
  EXPECT_THROW((void)surrogate_test(pair, cfg), InvalidInput);
  cfg.n_surrogates = 100;
  cfg.alpha = 1.0;
  EXPECT_THROW((void)surrogate_test(pair, cfg), InvalidInput);
}

TEST(SurrogateTest, StrongerCouplingLowersMedianP) {
  auto median_p = [](double corr) {
    std::vector<double> ps;
    for (std::uint64_t seed = 0; seed < 7; ++seed) {
      SurrogateTestConfig cfg;
      cfg.scales = {20};
      cfg.qs = {2.0};
      cfg.n_surrogates = 100;
      ps.push_back(surrogate_test(fxt::gaussian_pair(500, 300 + seed, corr), cfg)[0].p_value);
    }
    std::sort(ps.begin(), ps.end());
    return ps[3];
  };
  const double p0 = median_p(0.0);
  const double p1 = median_p(0.15);
  const double p2 = median_p(0.5);
  EXPECT_GE(p0, p1);
  EXPECT_GE(p1, p2);
}
