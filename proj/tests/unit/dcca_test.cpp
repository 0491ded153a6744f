#include <cmath>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "fxc/error.hpp"
#include "fxc/fluctuation.hpp"
#include "oracles.hpp"

using namespace fxc;

TEST(Dcca, IdenticalPairGivesOne) {
  const auto x = fxt::gaussian(600, 13);
  const AlignedPair same{TimeSeries(x), TimeSeries(x)};
  for (const double q : {2.0, 4.0}) {
    for (const auto& fs : q_fluctuations_dcca(same, std::vector<std::size_t>{5, 17, 60, 150}, q)) {
      EXPECT_NEAR(rho_q_dmca(fs).rho, 1.0, 1e-12);
    }
  }
}

TEST(Dcca, LinearPairIsDegenerate) {
  // Constant returns make linear profiles, which every box fit removes.
  const AlignedPair line{TimeSeries(std::vector<double>(200, 1.0)), TimeSeries(std::vector<double>(200, -2.0))};
  const auto fs = q_fluctuations_dcca(line, std::vector<std::size_t>{10}, 2.0);
  EXPECT_EQ(fs[0].f_x_q, 0.0);
  EXPECT_THROW((void)rho_q_dmca(fs[0]), DegenerateFluctuation);
}

TEST(Dcca, BoxCountIsTwiceFloor) {
  const auto p = cumulative_profile(fxt::gaussian(105, 1));
  EXPECT_EQ(dcca_segment_statistics(p, p, 10).segments.size(), 20u);
  EXPECT_EQ(dcca_segment_statistics(p, p, 50).segments.size(), 4u);
  EXPECT_THROW((void)dcca_segment_statistics(p, p, 2), InvalidInput);
  EXPECT_THROW((void)dcca_segment_statistics(p, p, 106), InvalidInput);
}

TEST(Dcca, MatchesNormalEquationOracle) {
  const auto pair = fxt::gaussian_pair(300, 99, -0.5);
  const auto x = fxt::raw(pair.x());
  const auto y = fxt::raw(pair.y());
  const std::vector<std::size_t> grid{4, 10, 17, 33, 75};
  for (const double q : {2.0, 4.0, 1.0}) {
    const auto got = q_fluctuations_dcca(pair, grid, q);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto want = oracle::q_dcca(x, y, grid[i], q);
      EXPECT_EQ(got[i].n_segments, want.n_segments);
      EXPECT_NEAR(got[i].f_x_q, want.fx, 1e-9 * want.fx);
      EXPECT_NEAR(got[i].f_y_q, want.fy, 1e-9 * want.fy);
      EXPECT_NEAR(got[i].f_xy_q, want.fxy, 1e-9 * std::sqrt(want.fx * want.fy));
    }
  }
}
