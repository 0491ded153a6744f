#include <string>

#include "fxc/error.hpp"
#include "fxc/fluctuation.hpp"
#include "noise_floor.hpp"

namespace fxc {

namespace {

// Residual second moments of one box after removing its least-squares line.
SegmentStatistics::Entry detrended_box(std::span<const double> bx, std::span<const double> by) {
  const std::size_t s = bx.size();
  const double ds = static_cast<double>(s);
  const double t_mean = (ds - 1.0) / 2.0;
  const double stt = ds * (ds * ds - 1.0) / 12.0;

  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < s; ++i) {
    mx += bx[i];
    my += by[i];
  }
  mx /= ds;
  my /= ds;
  double stx = 0.0, sty = 0.0;
  for (std::size_t i = 0; i < s; ++i) {
    const double dt = static_cast<double>(i) - t_mean;
    stx += dt * (bx[i] - mx);
    sty += dt * (by[i] - my);
  }
  const double slope_x = stx / stt;
  const double slope_y = sty / stt;

  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < s; ++i) {
    const double dt = static_cast<double>(i) - t_mean;
    const double ex = bx[i] - mx - slope_x * dt;
    const double ey = by[i] - my - slope_y * dt;
    sxx += ex * ex;
    syy += ey * ey;
    sxy += ex * ey;
  }
  return {sxx / ds, syy / ds, sxy / ds};
}

}  // namespace

SegmentStatistics dcca_segment_statistics(std::span<const double> profile_x,
                                          std::span<const double> profile_y, std::size_t scale) {
  if (profile_x.size() != profile_y.size()) throw InvalidInput("profiles differ in length");
  if (scale < 3) throw InvalidInput("box size must be at least 3 for linear detrending");
  const std::size_t n = profile_x.size();
  const std::size_t boxes = n / scale;
  if (boxes < 1) {
    throw InvalidInput("box size " + std::to_string(scale) + " exceeds series length " +
                       std::to_string(n));
  }
  const double floor_x = detail::noise_floor(profile_x);
  const double floor_y = detail::noise_floor(profile_y);

  SegmentStatistics out;
  out.scale = scale;
  out.segments.reserve(2 * boxes);
  for (std::size_t v = 0; v < boxes; ++v) {
    const auto start = v * scale;
    out.segments.push_back(detail::snap(
        detrended_box(profile_x.subspan(start, scale), profile_y.subspan(start, scale)), floor_x,
        floor_y));
  }
  for (std::size_t v = 0; v < boxes; ++v) {
    const auto start = n - (v + 1) * scale;
    out.segments.push_back(detail::snap(
        detrended_box(profile_x.subspan(start, scale), profile_y.subspan(start, scale)), floor_x,
        floor_y));
  }
  return out;
}

}  // namespace fxc
