#include "fxc/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fxc/error.hpp"
#include "fxc/scale_grid.hpp"

namespace fxc {

ScalingFit fit_power_law(std::span<const ScalePoint> points, FitRange range) {
  std::vector<double> lx, ly;
  for (const auto& p : points) {
    if (p.scale < range.lo || p.scale > range.hi) continue;
    if (!(p.value > 0.0) || !std::isfinite(p.value)) {
      throw InvalidInput("non-positive value " + std::to_string(p.value) + " at scale " +
                         std::to_string(p.scale));
    }
    lx.push_back(std::log(static_cast<double>(p.scale)));
    ly.push_back(std::log(p.value));
  }
  if (lx.size() < 3) {
    throw InvalidInput("power-law fit needs at least 3 points in [" + std::to_string(range.lo) + ", " +
                       std::to_string(range.hi) + "], got " + std::to_string(lx.size()));
  }
  const auto n = static_cast<double>(lx.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double dx = lx[i] - mx;
    const double dy = ly[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (!(sxx > 0.0)) throw InvalidInput("power-law fit needs distinct scales");

  ScalingFit fit;
  fit.exponent = sxy / sxx;
  fit.intercept = my - fit.exponent * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double r = ly[i] - (fit.intercept + fit.exponent * lx[i]);
    ss_res += r * r;
  }
  fit.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
  fit.s_lo = range.lo;
  fit.s_hi = range.hi;
  fit.n_points = lx.size();
  return fit;
}

ScalingFit estimate_hurst(const TimeSeries& series, const DetrendConfig& cfg) {
  const auto sets = dma_fluctuations(series, cfg);
  std::vector<ScalePoint> points;
  points.reserve(sets.size());
  for (const auto& fs : sets) {
    if (!(fs.f_x_q > 0.0)) {
      throw DegenerateFluctuation("degenerate fluctuation at scale " + std::to_string(fs.scale));
    }
    points.push_back({fs.scale, std::pow(fs.f_x_q, 1.0 / cfg.q)});
  }
  return fit_power_law(points, {cfg.scale_grid.front(), cfg.scale_grid.back()});
}

CoherencyEstimate coherency_from_profile(const CorrelationProfile& profile, FitRange range) {
  std::vector<ScalePoint> points;
  points.reserve(profile.points.size());
  for (const auto& p : profile.points) {
    if (p.scale < range.lo || p.scale > range.hi) continue;
    if (p.rho == 0.0) throw DegenerateFluctuation("zero coherency in fit range");
    points.push_back({p.scale, p.rho * p.rho});
  }
  CoherencyEstimate est;
  est.fit = fit_power_law(points, range);
  est.h_rho = est.fit.exponent / (2.0 * profile.q);
  est.per_scale_rho = profile;
  return est;
}

CoherencyEstimate estimate_h_rho(const AlignedPair& pair, const DetrendConfig& cfg,
                                 Method method) {
  auto profile = correlation_profile(pair, cfg, method);
  return coherency_from_profile(profile, {cfg.scale_grid.front(), cfg.scale_grid.back()});
}

FitRange dmca_fit_range(std::size_t s_max) noexcept { return {kDmcaFitLow, s_max}; }

FitRange dcca_fit_range(std::size_t n_min, std::size_t length) noexcept {
  return {n_min, length / 5};
}

std::vector<std::size_t> fit_scales(FitRange range, std::size_t count) {
  return log_spaced_scales(range.lo, range.hi, count);
}

}  // namespace fxc
