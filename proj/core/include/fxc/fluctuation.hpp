#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fxc/series.hpp"

namespace fxc {

enum class Method { q_dmca, q_dcca, dmca };

[[nodiscard]] std::string_view to_string(Method method) noexcept;
[[nodiscard]] Method parse_method(std::string_view text);

/// Detrending parameters shared by the moving-average estimators.
///
/// theta positions the moving-average window (0 backward, 0.5 centred,
/// 1 forward). Every scale must satisfy 4 <= s <= N/4 for the analyzed
/// series and the grid must be strictly increasing; q is nonzero.
struct DetrendConfig {
  double theta = 0.5;
  std::vector<std::size_t> scale_grid;
  double q = 2.0;

  void validate(std::size_t series_length) const;
};

/// Moving average of a profile, defined only where the full window fits.
/// values[i] is the average centred (per theta) on profile index first + i
/// (zero-based).
struct MovingAverage {
  std::size_t window = 0;
  double theta = 0.5;
  std::size_t first = 0;
  std::vector<double> values;

  [[nodiscard]] std::size_t last() const noexcept { return first + values.size() - 1; }
};

/// Window covering profile[t - lag_back] ... profile[t + lag_forward].
struct WindowOffsets {
  std::size_t lag_back = 0;
  std::size_t lag_forward = 0;
};
[[nodiscard]] WindowOffsets window_offsets(std::size_t window, double theta);

[[nodiscard]] MovingAverage moving_average(std::span<const double> profile, std::size_t window,
                                           double theta);

/// Number of non-overlapping segments floor(N/s - 1) for a profile of length N.
[[nodiscard]] std::size_t dma_segment_count(std::size_t series_length, std::size_t scale) noexcept;

/// Residual profile - moving average over the valid range, cut into
/// dma_segment_count(profile.size(), s) segments of length s. Residual points
/// past the last full segment are dropped.
[[nodiscard]] std::vector<std::vector<double>> detrended_segments(std::span<const double> profile,
                                                                  const MovingAverage& ma,
                                                                  std::size_t scale);

[[nodiscard]] double segment_rms(std::span<const double> segment);
[[nodiscard]] double segment_cross(std::span<const double> seg_x, std::span<const double> seg_y);

/// Per-segment second moments of a bivariate detrended residual at one scale:
/// f_x^2, f_y^2 and the signed detrended covariance F_v.
struct SegmentStatistics {
  struct Entry {
    double var_x = 0.0;
    double var_y = 0.0;
    double cov = 0.0;
  };
  std::size_t scale = 0;
  std::vector<Entry> segments;
};

[[nodiscard]] SegmentStatistics dma_segment_statistics(std::span<const double> profile_x,
                                                       std::span<const double> profile_y,
                                                       std::size_t scale, double theta);

/// Box-splitting variant: floor(N/s) boxes from the start and again from
/// the end, each detrended by its own least-squares line.
[[nodiscard]] SegmentStatistics dcca_segment_statistics(std::span<const double> profile_x,
                                                        std::span<const double> profile_y,
                                                        std::size_t scale);

/// q-th order fluctuation functions at one scale. f_xy_q keeps the sign of
/// each segment covariance. n_skipped counts segments dropped for q < 0
/// because one of their fluctuations vanished.
struct FluctuationSet {
  std::size_t scale = 0;
  double q = 2.0;
  double f_x_q = 0.0;
  double f_y_q = 0.0;
  double f_xy_q = 0.0;
  std::size_t n_segments = 0;
  std::size_t n_skipped = 0;
};

[[nodiscard]] FluctuationSet aggregate(const SegmentStatistics& stats, double q);

[[nodiscard]] std::vector<FluctuationSet> q_fluctuations(const AlignedPair& pair,
                                                         const DetrendConfig& cfg);
[[nodiscard]] std::vector<FluctuationSet> q_fluctuations_dcca(const AlignedPair& pair,
                                                              std::span<const std::size_t> scale_grid,
                                                              double q);

struct RhoValue {
  double rho = 0.0;
  bool capped = false;
};

/// F_xy^q / sqrt(F_x^q F_y^q); a ratio above 1 in magnitude is replaced by
/// its reciprocal and flagged. Throws DegenerateFluctuation on a zero
/// denominator. Applies equally to DMA and DCCA fluctuation sets.
[[nodiscard]] RhoValue rho_q_dmca(const FluctuationSet& fs);

/// Whole-sample DMCA coefficient with moving-average window s.
[[nodiscard]] double rho_dmca_classic(const AlignedPair& pair, std::size_t scale, double theta);

struct ProfilePoint {
  std::size_t scale = 0;
  double rho = 0.0;
  bool capped = false;
};

struct CorrelationProfile {
  Method method = Method::q_dmca;
  double q = 2.0;
  std::vector<ProfilePoint> points;
};

/// rho(s) for every scale of cfg.scale_grid. Method::dmca requires q == 2.
[[nodiscard]] CorrelationProfile correlation_profile(const AlignedPair& pair,
                                                     const DetrendConfig& cfg, Method method);

/// Profiles for several orders sharing one pass over the segments.
[[nodiscard]] std::vector<CorrelationProfile> correlation_profiles(
    const AlignedPair& pair, double theta, std::span<const std::size_t> scale_grid,
    std::span<const double> qs, Method method);

/// Univariate q-th order DMA fluctuation F^q(s) for each scale.
[[nodiscard]] std::vector<FluctuationSet> dma_fluctuations(const TimeSeries& series,
                                                           const DetrendConfig& cfg);

}  // namespace fxc
