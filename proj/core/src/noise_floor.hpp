#pragma once

#include <algorithm>
#include <cmath>
#include <span>

#include "fxc/fluctuation.hpp"

namespace fxc::detail {

// Detrended variance at or below this level is rounding noise of the profile
// magnitudes rather than signal.
inline double noise_floor(std::span<const double> profile) {
  double peak = 0.0;
  for (double v : profile) peak = std::max(peak, std::abs(v));
  const double floor = 1e-12 * peak;
  return floor * floor;
}

inline SegmentStatistics::Entry snap(SegmentStatistics::Entry e, double floor_x, double floor_y) {
  if (e.var_x <= floor_x) e.var_x = 0.0;
  if (e.var_y <= floor_y) e.var_y = 0.0;
  if (e.var_x == 0.0 || e.var_y == 0.0) e.cov = 0.0;
  return e;
}

}  // namespace fxc::detail
