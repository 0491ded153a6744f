#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fxc/fluctuation.hpp"
#include "fxc/series.hpp"

namespace fxc {

struct IaaftConfig {
  std::size_t max_iterations = 1000;
  /// Stop when the relative change of the spectral mismatch falls below this.
  double convergence_tol = 1e-8;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Iterative amplitude adjusted Fourier transform surrogate: same multiset of
/// values as the input, approximately the same amplitude spectrum, random
/// phases. The last step is always the rank remapping, so
/// sorted(surrogate) == sorted(x) exactly.
[[nodiscard]] TimeSeries iaaft_surrogate(const TimeSeries& x, const IaaftConfig& cfg);

/// Relative L2 distance between the power spectra of a and b (b is the reference).
[[nodiscard]] double power_spectrum_mismatch(std::span<const double> a, std::span<const double> b);

enum class Strength { strong, weak, none };
/// q = 2 measures the hedge property, q = 4 the safe-haven property.
enum class Role { hedge, safe_haven, co_movement };

struct Classification {
  Strength strength = Strength::none;
  Role role = Role::co_movement;

  [[nodiscard]] std::string label() const;
};

[[nodiscard]] std::string_view to_string(Strength s) noexcept;
[[nodiscard]] std::string_view to_string(Role r) noexcept;
[[nodiscard]] Role role_for_order(double q) noexcept;

struct SurrogateTestReport {
  std::size_t scale = 0;
  double q = 2.0;
  double observed_rho = 0.0;
  double surrogate_mean = 0.0;
  std::vector<double> surrogate_values;
  /// (#{|rho_s - mean| >= |rho - mean|} + 1) / (n + 1).
  double p_value = 1.0;
  Classification classification;
  /// Surrogates dropped after exhausting their regeneration retries.
  std::size_t n_discarded = 0;
};

struct SurrogateTestConfig {
  double theta = 0.5;
  std::vector<std::size_t> scales;
  std::vector<double> qs{2.0, 4.0};
  std::size_t n_surrogates = 1000;
  IaaftConfig iaaft;
  double alpha = 0.05;
  std::size_t threads = 0;
};

inline constexpr std::size_t kMinSurrogates = 100;
inline constexpr std::size_t kSurrogateRetries = 10;

/// Each surrogate pair surrogates x and y independently, which destroys any
/// cross-correlation; one ensemble serves every (scale, q). Surrogate seeds
/// depend on the series content, so swapping x and y yields the same
/// reports.
[[nodiscard]] std::vector<SurrogateTestReport> surrogate_test(const AlignedPair& pair,
                                                              const SurrogateTestConfig& cfg);

/// Single-order form over cfg.scale_grid at cfg.q, significance level 0.05.
[[nodiscard]] std::vector<SurrogateTestReport> surrogate_test(const AlignedPair& pair,
                                                              const DetrendConfig& cfg,
                                                              std::size_t n_surrogates,
                                                              const IaaftConfig& iaaft);

/// Two-tailed add-one p-value of an observation against an ensemble about
/// the ensemble mean.
[[nodiscard]] double two_tailed_p_value(double observed, std::span<const double> ensemble);

/// strong: p <= alpha and rho < 0; weak: p > alpha; none: p <= alpha and rho >= 0.
[[nodiscard]] Classification classify(const SurrogateTestReport& report, double alpha);

/// "***", "**", "*" for p at or below 1%, 5%, 10%.
[[nodiscard]] std::string significance_stars(double p_value);

}  // namespace fxc
