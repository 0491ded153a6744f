#include <cmath>
#include <limits>
#include <sstream>

#include <gtest/gtest.h>

#include "fxc/serialize.hpp"

using namespace fxc;
using nlohmann::json;

TEST(FormatDouble, RoundTrips) {
  for (const double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0, 123456789.0}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(2.0), "2");
}

TEST(FormatFixed, Rounds) {
  EXPECT_EQ(format_fixed(0.25678, 4), "0.2568");
  EXPECT_EQ(format_fixed(-0.00001, 4), "0.0000");
  EXPECT_EQ(format_fixed(1.0, 3), "1.000");
}

TEST(Json, ScalingFitKeys) {
  ScalingFit f{0.9, 0.1, 0.99, 10, 100, 20};
  const json j = f;
  EXPECT_EQ(j.at("exponent"), 0.9);
  EXPECT_EQ(j.at("s_lo"), 10);
  EXPECT_EQ(j.at("s_hi"), 100);
  EXPECT_EQ(j.at("n_points"), 20);
  EXPECT_EQ(j.size(), 6u);
}

TEST(Json, SpecRoundTrip) {
  McArfimaSpec spec;
  spec.d2 = -0.1;
  spec.cross_corr = 0.3;
  spec.innovation_sd = {1, 2, 3, 4};
  spec.seed = 99;
  const json j = spec;
  const auto back = j.get<McArfimaSpec>();
  EXPECT_EQ(json(back), j);
  const auto partial = json{{"d1", 0.3}}.get<McArfimaSpec>();
  EXPECT_EQ(partial.d1, 0.3);
  EXPECT_EQ(partial.d4, McArfimaSpec{}.d4);
}

TEST(Json, UndefinedMomentsAreNull) {
  DescriptiveStats s;
  s.count = 9;
  const json j = s;
  EXPECT_TRUE(j.at("skewness").is_null());
  EXPECT_TRUE(j.at("jarque_bera_p_value").is_null());
}

TEST(Csv, Profiles) {
  CorrelationProfile p;
  p.q = 2.0;
  p.points = {{20, 0.5, false}, {35, -0.25, true}};
  std::ostringstream os;
  write_profiles_csv(os, std::span(&p, 1));
  EXPECT_EQ(os.str(), "scale,q,method,rho,capped\n20,2,q-DMCA,0.5,false\n35,2,q-DMCA,-0.25,true\n");
}

TEST(Csv, PortfolioTable) {
  const std::vector<PortfolioMetrics> m{{20, 2.0, 0.81234, 0.81234, -0.123456},
                                        {100, 2.0, 1.0, 1.2, 0.5},
                                        {20, 4.0, 0.1, 0.1, 0.1}};
  std::ostringstream os;
  write_portfolio_table_csv(os, m, 2.0, "x/y");
  EXPECT_EQ(os.str(), "pair,metric,20,100\nx/y,w_g,0.8123,1.0000\nx/y,beta,-0.1235,0.5000\n");
}

TEST(Csv, SurrogateTable) {
  SurrogateTestReport r;
  r.scale = 20;
  r.q = 2.0;
  r.observed_rho = -0.41649;
  r.p_value = 0.001;
  r.classification = {Strength::strong, Role::hedge};
  std::ostringstream os;
  write_surrogate_table_csv(os, std::span(&r, 1), 2.0, "x/y");
  EXPECT_EQ(os.str(), "s,x/y statistic,x/y p-value,x/y classification\n20,-0.4165***,0.001,strong hedge\n");
}

TEST(Csv, BenchmarkTableLayout) {
  std::vector<EstimatorReport> reports(2);
  for (std::size_t i = 0; i < 2; ++i) {
    reports[i].key = {Method::q_dcca, 500, i == 0 ? 0.1 : 0.9, 2.0, 10, {10, 100}};
    reports[i].bias = 0.1 * static_cast<double>(i + 1);
    reports[i].sd = 0.01;
    reports[i].mse = reports[i].bias * reports[i].bias + 1e-4;
  }
  std::ostringstream os;
  write_benchmark_table_csv(os, reports, Method::q_dcca, 2.0);
  EXPECT_EQ(os.str(),
            "N,n_min,bias_rho0.1,sd_rho0.1,mse_rho0.1,bias_rho0.9,sd_rho0.9,mse_rho0.9\n"
            "500,10,0.1000,0.0100,0.0101,0.2000,0.0100,0.0401\n");
}

TEST(Csv, SeriesColumns) {
  const std::vector<TimeSeries> s{TimeSeries({1.5, 2.0}, "a"), TimeSeries({-1.0, 0.25}, "b")};
  std::ostringstream os;
  write_series_csv(os, s);
  EXPECT_EQ(os.str(), "a,b\n1.5,-1\n2,0.25\n");
}
