#include "fxc/fluctuation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fxc/error.hpp"
#include "noise_floor.hpp"

namespace fxc {

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::q_dmca: return "q-DMCA";
    case Method::q_dcca: return "q-DCCA";
    case Method::dmca: return "DMCA";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  if (text == "q-DMCA" || text == "qdmca" || text == "dmca-q") return Method::q_dmca;
  if (text == "q-DCCA" || text == "qdcca" || text == "dcca") return Method::q_dcca;
  if (text == "DMCA" || text == "dmca") return Method::dmca;
  throw InvalidInput("unknown method '" + std::string(text) + "'");
}

void DetrendConfig::validate(std::size_t series_length) const {
  if (!(theta >= 0.0 && theta <= 1.0)) throw InvalidInput("theta must lie in [0, 1]");
  if (q == 0.0 || !std::isfinite(q)) throw InvalidInput("q must be a finite nonzero number");
  if (scale_grid.empty()) throw InvalidInput("scale grid is empty");
  for (std::size_t i = 0; i < scale_grid.size(); ++i) {
    const auto s = scale_grid[i];
    if (i > 0 && s <= scale_grid[i - 1]) throw InvalidInput("scale grid must be strictly increasing");
    if (s < 4 || 4 * s > series_length) {
      throw InvalidInput("scale " + std::to_string(s) + " outside [4, N/4] for N = " +
                         std::to_string(series_length));
    }
  }
}

WindowOffsets window_offsets(std::size_t window, double theta) {
  const auto span = static_cast<double>(window - 1);
  // The epsilon keeps products such as 10 * 0.3 from flooring to 2.
  const auto forward = static_cast<std::size_t>(std::floor(span * theta + 1e-9));
  // floor(a) + ceil(n - 1 - a) == n - 1 for integer n - 1.
  return {window - 1 - forward, forward};
}

MovingAverage moving_average(std::span<const double> profile, std::size_t window, double theta) {
  if (!(theta >= 0.0 && theta <= 1.0)) throw InvalidInput("theta must lie in [0, 1]");
  if (window < 2) throw InvalidInput("moving-average window must be at least 2");
  if (window > profile.size()) {
    throw InvalidInput("moving-average window " + std::to_string(window) +
                       " exceeds series length " + std::to_string(profile.size()));
  }
  const auto off = window_offsets(window, theta);
  const std::size_t n = profile.size();

  std::vector<long double> prefix(n + 1, 0.0L);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + profile[i];

  MovingAverage ma;
  ma.window = window;
  ma.theta = theta;
  ma.first = off.lag_back;
  ma.values.resize(n - window + 1);
  const auto inv = 1.0L / static_cast<long double>(window);
  for (std::size_t i = 0; i < ma.values.size(); ++i) {
    const std::size_t t = ma.first + i;
    ma.values[i] = static_cast<double>((prefix[t + off.lag_forward + 1] - prefix[t - off.lag_back]) * inv);
  }
  return ma;
}

std::size_t dma_segment_count(std::size_t series_length, std::size_t scale) noexcept {
  if (scale == 0) return 0;
  const auto whole = series_length / scale;
  return whole >= 1 ? whole - 1 : 0;
}

std::vector<std::vector<double>> detrended_segments(std::span<const double> profile,
                                                    const MovingAverage& ma, std::size_t scale) {
  const auto count = dma_segment_count(profile.size(), scale);
  if (count < 1) {
    throw InvalidInput("scale " + std::to_string(scale) + " leaves no full segment for N = " +
                       std::to_string(profile.size()));
  }
  if (ma.values.size() < count * scale) throw InvalidInput("moving average shorter than the segments");
  std::vector<std::vector<double>> segments(count, std::vector<double>(scale));
  for (std::size_t v = 0; v < count; ++v) {
    for (std::size_t i = 0; i < scale; ++i) {
      const auto k = v * scale + i;
      segments[v][i] = profile[ma.first + k] - ma.values[k];
    }
  }
  return segments;
}

double segment_rms(std::span<const double> segment) {
  if (segment.empty()) throw InvalidInput("segment_rms of an empty segment");
  double acc = 0.0;
  for (double e : segment) acc += e * e;
  return std::sqrt(acc / static_cast<double>(segment.size()));
}

double segment_cross(std::span<const double> seg_x, std::span<const double> seg_y) {
  if (seg_x.size() != seg_y.size() || seg_x.empty()) {
    throw InvalidInput("segment_cross needs two non-empty segments of equal length");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < seg_x.size(); ++i) acc += seg_x[i] * seg_y[i];
  return acc / static_cast<double>(seg_x.size());
}

SegmentStatistics dma_segment_statistics(std::span<const double> profile_x,
                                         std::span<const double> profile_y, std::size_t scale,
                                         double theta) {
  if (profile_x.size() != profile_y.size()) throw InvalidInput("profiles differ in length");
  const auto count = dma_segment_count(profile_x.size(), scale);
  if (count < 1) {
    throw InvalidInput("scale " + std::to_string(scale) + " leaves no full segment for N = " +
                       std::to_string(profile_x.size()));
  }
  const auto ma_x = moving_average(profile_x, scale, theta);
  const auto ma_y = moving_average(profile_y, scale, theta);
  const double floor_x = detail::noise_floor(profile_x);
  const double floor_y = detail::noise_floor(profile_y);

  SegmentStatistics out;
  out.scale = scale;
  out.segments.resize(count);
  const auto inv = 1.0 / static_cast<double>(scale);
  for (std::size_t v = 0; v < count; ++v) {
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < scale; ++i) {
      const auto k = v * scale + i;
      const double ex = profile_x[ma_x.first + k] - ma_x.values[k];
      const double ey = profile_y[ma_y.first + k] - ma_y.values[k];
      sxx += ex * ex;
      syy += ey * ey;
      sxy += ex * ey;
    }
    out.segments[v] = detail::snap({sxx * inv, syy * inv, sxy * inv}, floor_x, floor_y);
  }
  return out;
}

FluctuationSet aggregate(const SegmentStatistics& stats, double q) {
  if (q == 0.0) throw InvalidInput("q must be nonzero");
  FluctuationSet fs;
  fs.scale = stats.scale;
  fs.q = q;
  fs.n_segments = stats.segments.size();
  const double half = q / 2.0;
  double sx = 0.0, sy = 0.0, sxy = 0.0;
  for (const auto& e : stats.segments) {
    if (q < 0.0 && (e.var_x == 0.0 || e.var_y == 0.0 || e.cov == 0.0)) {
      ++fs.n_skipped;
      continue;
    }
    sx += std::pow(e.var_x, half);
    sy += std::pow(e.var_y, half);
    const double mag = std::pow(std::abs(e.cov), half);
    sxy += e.cov < 0.0 ? -mag : (e.cov > 0.0 ? mag : 0.0);
  }
  const auto used = fs.n_segments - fs.n_skipped;
  if (used > 0) {
    const auto inv = 1.0 / static_cast<double>(used);
    fs.f_x_q = sx * inv;
    fs.f_y_q = sy * inv;
    fs.f_xy_q = sxy * inv;
  }
  return fs;
}

namespace {

struct Profiles {
  std::vector<double> x;
  std::vector<double> y;
};

Profiles profiles_of(const AlignedPair& pair) {
  return {cumulative_profile(pair.x().values()), cumulative_profile(pair.y().values())};
}

}  // namespace

std::vector<FluctuationSet> q_fluctuations(const AlignedPair& pair, const DetrendConfig& cfg) {
  cfg.validate(pair.size());
  const auto p = profiles_of(pair);
  std::vector<FluctuationSet> out;
  out.reserve(cfg.scale_grid.size());
  for (const auto s : cfg.scale_grid) {
    out.push_back(aggregate(dma_segment_statistics(p.x, p.y, s, cfg.theta), cfg.q));
  }
  return out;
}

std::vector<FluctuationSet> q_fluctuations_dcca(const AlignedPair& pair,
                                                std::span<const std::size_t> scale_grid, double q) {
  DetrendConfig cfg;
  cfg.scale_grid.assign(scale_grid.begin(), scale_grid.end());
  cfg.q = q;
  cfg.validate(pair.size());
  const auto p = profiles_of(pair);
  std::vector<FluctuationSet> out;
  out.reserve(scale_grid.size());
  for (const auto s : scale_grid) out.push_back(aggregate(dcca_segment_statistics(p.x, p.y, s), q));
  return out;
}

std::vector<FluctuationSet> dma_fluctuations(const TimeSeries& series, const DetrendConfig& cfg) {
  cfg.validate(series.size());
  const auto profile = cumulative_profile(series.values());
  std::vector<FluctuationSet> out;
  out.reserve(cfg.scale_grid.size());
  for (const auto s : cfg.scale_grid) {
    out.push_back(aggregate(dma_segment_statistics(profile, profile, s, cfg.theta), cfg.q));
  }
  return out;
}

RhoValue rho_q_dmca(const FluctuationSet& fs) {
  if (fs.n_segments == fs.n_skipped || !(fs.f_x_q > 0.0) || !(fs.f_y_q > 0.0)) {
    throw DegenerateFluctuation("degenerate fluctuation at scale " + std::to_string(fs.scale));
  }
  const double raw = fs.f_xy_q / std::sqrt(fs.f_x_q * fs.f_y_q);
  if (std::abs(raw) > 1.0) return {1.0 / raw, true};
  return {raw, false};
}

double rho_dmca_classic(const AlignedPair& pair, std::size_t scale, double theta) {
  DetrendConfig cfg;
  cfg.theta = theta;
  cfg.scale_grid = {scale};
  cfg.validate(pair.size());
  const auto p = profiles_of(pair);
  const auto ma_x = moving_average(p.x, scale, theta);
  const auto ma_y = moving_average(p.y, scale, theta);
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < ma_x.values.size(); ++k) {
    const double ex = p.x[ma_x.first + k] - ma_x.values[k];
    const double ey = p.y[ma_y.first + k] - ma_y.values[k];
    sxx += ex * ex;
    syy += ey * ey;
    sxy += ex * ey;
  }
  const auto inv = 1.0 / static_cast<double>(ma_x.values.size());
  const auto e = detail::snap({sxx * inv, syy * inv, sxy * inv}, detail::noise_floor(p.x),
                              detail::noise_floor(p.y));
  if (!(e.var_x > 0.0) || !(e.var_y > 0.0)) {
    throw DegenerateFluctuation("degenerate fluctuation at scale " + std::to_string(scale));
  }
  return e.cov / std::sqrt(e.var_x * e.var_y);
}

std::vector<CorrelationProfile> correlation_profiles(const AlignedPair& pair, double theta,
                                                     std::span<const std::size_t> scale_grid,
                                                     std::span<const double> qs, Method method) {
  if (qs.empty()) throw InvalidInput("no fluctuation orders requested");
  DetrendConfig cfg;
  cfg.theta = theta;
  cfg.scale_grid.assign(scale_grid.begin(), scale_grid.end());
  for (const double q : qs) {
    cfg.q = q;
    cfg.validate(pair.size());
    if (method == Method::dmca && q != 2.0) {
      throw InvalidInput("the classic DMCA coefficient is defined for q = 2 only");
    }
  }

  std::vector<CorrelationProfile> out(qs.size());
  for (std::size_t j = 0; j < qs.size(); ++j) {
    out[j].method = method;
    out[j].q = qs[j];
    out[j].points.reserve(scale_grid.size());
  }
  if (method == Method::dmca) {
    for (const auto s : scale_grid) {
      const double rho = rho_dmca_classic(pair, s, theta);
      for (auto& prof : out) prof.points.push_back({s, rho, false});
    }
    return out;
  }

  const auto p = profiles_of(pair);
  for (const auto s : scale_grid) {
    const auto stats = method == Method::q_dmca ? dma_segment_statistics(p.x, p.y, s, theta)
                                                : dcca_segment_statistics(p.x, p.y, s);
    for (std::size_t j = 0; j < qs.size(); ++j) {
      const auto r = rho_q_dmca(aggregate(stats, qs[j]));
      out[j].points.push_back({s, r.rho, r.capped});
    }
  }
  return out;
}

CorrelationProfile correlation_profile(const AlignedPair& pair, const DetrendConfig& cfg,
                                       Method method) {
  const double q = cfg.q;
  return correlation_profiles(pair, cfg.theta, cfg.scale_grid, std::span<const double>(&q, 1), method)
      .front();
}

}  // namespace fxc
