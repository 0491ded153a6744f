#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fxc/fluctuation.hpp"

namespace fxc {

/// Minimum-variance weight and hedge ratio at one (scale, q). In a pair the
/// first series is the hedge asset g and the second the counterpart c; the
/// fluctuation functions enter at order q without taking roots.
struct PortfolioMetrics {
  std::size_t scale = 0;
  double q = 2.0;
  double w_g = 0.0;
  double w_g_raw = 0.0;
  double beta = 0.0;

  [[nodiscard]] double counterpart_weight() const noexcept { return 1.0 - w_g; }
};

struct PortfolioWeight {
  double raw = 0.0;
  double clipped = 0.0;
};

[[nodiscard]] double clip_weight(double w) noexcept;

/// w_g = (F_c - F_gc) / (F_g - 2 F_gc + F_c), clipped to [0, 1].
[[nodiscard]] PortfolioWeight optimal_weight(const FluctuationSet& fs);

/// beta = F_gc / F_g.
[[nodiscard]] double hedge_ratio(const FluctuationSet& fs);

[[nodiscard]] std::vector<PortfolioMetrics> portfolio_scan(const AlignedPair& pair,
                                                           const DetrendConfig& cfg,
                                                           std::span<const double> qs);

/// Orders 2 and 4.
[[nodiscard]] std::vector<PortfolioMetrics> portfolio_scan(const AlignedPair& pair,
                                                           const DetrendConfig& cfg);

}  // namespace fxc
