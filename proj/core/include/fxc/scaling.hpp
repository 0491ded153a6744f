#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fxc/fluctuation.hpp"
#include "fxc/series.hpp"

namespace fxc {

struct FitRange {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

struct ScalePoint {
  std::size_t scale = 0;
  double value = 0.0;
};

/// Ordinary least squares of ln(value) on ln(scale) over the points whose
/// scale lies in the fit range.
struct ScalingFit {
  double exponent = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t s_lo = 0;
  std::size_t s_hi = 0;
  std::size_t n_points = 0;
};

[[nodiscard]] ScalingFit fit_power_law(std::span<const ScalePoint> points, FitRange range);

/// Power-law coherency estimate: h_rho = slope of ln rho^2 on ln s over 2q.
struct CoherencyEstimate {
  double h_rho = 0.0;
  CorrelationProfile per_scale_rho;
  ScalingFit fit;
};

/// Generalized Hurst exponent from (F^q(s))^(1/q) over every scale of the grid.
[[nodiscard]] ScalingFit estimate_hurst(const TimeSeries& series, const DetrendConfig& cfg);

/// Regresses ln rho^2 on ln s across every scale of cfg.scale_grid.
[[nodiscard]] CoherencyEstimate estimate_h_rho(const AlignedPair& pair, const DetrendConfig& cfg,
                                               Method method);

/// Same regression for an already computed profile, restricted to a range.
[[nodiscard]] CoherencyEstimate coherency_from_profile(const CorrelationProfile& profile,
                                                       FitRange range);

/// Number of log-spaced scales placed inside a fit range.
inline constexpr std::size_t kFitPoints = 20;

/// Lower end of the DMCA fit range when only its upper end s_max is swept.
inline constexpr std::size_t kDmcaFitLow = 10;

/// DMCA runs fit from 10 to s_max, DCCA runs fit from n_min to N/5.
[[nodiscard]] FitRange dmca_fit_range(std::size_t s_max) noexcept;
[[nodiscard]] FitRange dcca_fit_range(std::size_t n_min, std::size_t length) noexcept;

[[nodiscard]] std::vector<std::size_t> fit_scales(FitRange range, std::size_t count = kFitPoints);

}  // namespace fxc
