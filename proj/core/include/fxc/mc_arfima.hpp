#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "fxc/series.hpp"

namespace fxc {

/// Mixed-correlated ARFIMA(0, d, 0) pair:
///
///   x_t = alpha * sum_n a_n(d1) e1_{t-n} + beta  * sum_n a_n(d2) e2_{t-n}
///   y_t = gamma * sum_n a_n(d3) e3_{t-n} + delta * sum_n a_n(d4) e4_{t-n}
///
/// with sums truncated at n = truncation. The four Gaussian innovation
/// streams are serially uncorrelated; only e2 and e3 are contemporaneously
/// correlated (cross_corr). Implied exponents: H_x = d1 + 0.5,
/// H_y = d4 + 0.5, H_xy = 0.5 + (d2 + d3) / 2.
struct McArfimaSpec {
  double d1 = 0.4;
  double d2 = 0.2;
  double d3 = 0.2;
  double d4 = 0.4;
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;
  double delta = 1.0;
  std::array<double, 4> innovation_sd{1.0, 1.0, 1.0, 1.0};
  double cross_corr = 0.9;
  std::size_t length = 5000;
  std::size_t truncation = 10000;
  std::uint64_t seed = 0;

  void validate() const;

  [[nodiscard]] double hurst_x() const noexcept { return d1 + 0.5; }
  [[nodiscard]] double hurst_y() const noexcept { return d4 + 0.5; }
  [[nodiscard]] double hurst_xy() const noexcept { return 0.5 + 0.5 * (d2 + d3); }
  /// H_xy - (H_x + H_y) / 2.
  [[nodiscard]] double coherency() const noexcept {
    return hurst_xy() - 0.5 * (hurst_x() + hurst_y());
  }
};

struct BivariateSample {
  TimeSeries x;
  TimeSeries y;
  McArfimaSpec spec;
};

/// a_0 = 1, a_n = a_{n-1} (n - 1 + d) / n; equals Gamma(n+d) / (Gamma(n+1) Gamma(d)).
[[nodiscard]] std::vector<double> arfima_weights(double d, std::size_t n_max);

/// Four innovation streams of `count` draws each, seeded from spec.seed.
[[nodiscard]] std::array<std::vector<double>, 4> correlated_innovations(const McArfimaSpec& spec,
                                                                        std::size_t count);

/// Deterministic in spec.seed. Uses spec.truncation pre-sample innovations
/// so every output point has a full history.
[[nodiscard]] BivariateSample generate(const McArfimaSpec& spec);

/// SplitMix64 finalizer, used to derive independent stream seeds.
[[nodiscard]] std::uint64_t mix_seed(std::uint64_t seed) noexcept;

}  // namespace fxc
