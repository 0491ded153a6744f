#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fxc/fluctuation.hpp"
#include "fxc/mc_arfima.hpp"
#include "fxc/scaling.hpp"

namespace fxc {

/// Monte Carlo comparison of the q-DMCA and q-DCCA coherency estimators on
/// the canonical MC-ARFIMA pair (d1 = d4 = 0.4, d2 = d3 = 0.2, H_rho = -0.2).
///
/// DCCA cells are indexed by n_min (fit from n_min to N/5), DMCA cells by
/// s_max (fit from 10 to s_max). Cells whose fit range cannot hold three
/// distinct scales for a given N are not computed.
struct BenchmarkConfig {
  std::vector<std::size_t> lengths{500, 1000, 5000};
  std::vector<double> cross_corrs{0.1, 0.5, 0.9};
  std::vector<double> qs{2.0, 4.0};
  std::size_t replications = 200;
  std::vector<std::size_t> dcca_n_min{10, 20, 50, 100};
  std::vector<std::size_t> dmca_s_max{20, 50, 100};
  std::uint64_t master_seed = 20190312;
  double theta = 0.5;
  std::size_t truncation = 10000;
  std::size_t fit_points = kFitPoints;
  std::size_t threads = 0;

  void validate() const;
  /// Process parameters of replication r for a cell: canonical orders, seed master_seed + r.
  [[nodiscard]] McArfimaSpec sample_spec(std::size_t length, double cross_corr,
                                         std::size_t replication) const;
};

struct CellKey {
  Method method = Method::q_dmca;
  std::size_t length = 0;
  double cross_corr = 0.0;
  double q = 2.0;
  std::size_t range_param = 0;
  FitRange fit_range;
};

/// bias = mean - true value; sd is the population standard deviation over
/// the n_effective non-degenerate replications; mse = bias^2 + sd^2.
struct EstimatorReport {
  CellKey key;
  double true_value = -0.2;
  double mean_estimate = 0.0;
  double bias = 0.0;
  double sd = 0.0;
  double mse = 0.0;
  std::size_t n_effective = 0;
  std::size_t n_degenerate = 0;
};

using ProgressFn = std::function<void(const std::string&)>;

[[nodiscard]] std::vector<EstimatorReport> run_benchmark(const BenchmarkConfig& cfg,
                                                         const ProgressFn& progress = {});

/// Mean estimate per length for both methods, every q and cross_corr of cfg.
/// Both methods fit from the smallest n_min (10 if none is given) to N/5, so
/// the fit window grows with the sample.
struct StabilityPoint {
  Method method = Method::q_dmca;
  double q = 2.0;
  double cross_corr = 0.0;
  std::size_t length = 0;
  double mean_estimate = 0.0;
  double sd = 0.0;
  std::size_t n_effective = 0;
};

[[nodiscard]] std::vector<StabilityPoint> stability_sweep(std::span<const std::size_t> lengths,
                                                          const BenchmarkConfig& cfg,
                                                          const ProgressFn& progress = {});

/// Reduces raw estimates of one cell; nullopt entries count as degenerate.
[[nodiscard]] EstimatorReport summarize(const CellKey& key, double true_value,
                                        std::span<const std::optional<double>> estimates);

}  // namespace fxc
