#include "fxc/portfolio.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "fxc/error.hpp"

namespace fxc {

double clip_weight(double w) noexcept { return std::clamp(w, 0.0, 1.0); }

PortfolioWeight optimal_weight(const FluctuationSet& fs) {
  const double f_g = fs.f_x_q;
  const double f_c = fs.f_y_q;
  const double f_gc = fs.f_xy_q;
  const double den = f_g - 2.0 * f_gc + f_c;
  // Relative test: perfect substitutes cancel only up to rounding.
  if (!(std::abs(den) > 1e-12 * (std::abs(f_g) + std::abs(f_c)))) {
    throw DegenerateFluctuation("degenerate portfolio variance at scale " + std::to_string(fs.scale));
  }
  const double raw = (f_c - f_gc) / den;
  return {raw, clip_weight(raw)};
}

double hedge_ratio(const FluctuationSet& fs) {
  if (!(fs.f_x_q > 0.0)) {
    throw DegenerateFluctuation("zero hedge-asset fluctuation at scale " + std::to_string(fs.scale));
  }
  return fs.f_xy_q / fs.f_x_q;
}

std::vector<PortfolioMetrics> portfolio_scan(const AlignedPair& pair, const DetrendConfig& cfg,
                                             std::span<const double> qs) {
  DetrendConfig checked = cfg;
  for (const double q : qs) {
    checked.q = q;
    checked.validate(pair.size());
  }
  const auto px = cumulative_profile(pair.x().values());
  const auto py = cumulative_profile(pair.y().values());
  std::vector<PortfolioMetrics> out;
  out.reserve(cfg.scale_grid.size() * qs.size());
  for (const double q : qs) {
    for (const auto s : cfg.scale_grid) {
      const auto fs = aggregate(dma_segment_statistics(px, py, s, cfg.theta), q);
      const auto w = optimal_weight(fs);
      out.push_back({s, q, w.clipped, w.raw, hedge_ratio(fs)});
    }
  }
  return out;
}

std::vector<PortfolioMetrics> portfolio_scan(const AlignedPair& pair, const DetrendConfig& cfg) {
  static constexpr std::array<double, 2> kOrders{2.0, 4.0};
  return portfolio_scan(pair, cfg, kOrders);
}

}  // namespace fxc
