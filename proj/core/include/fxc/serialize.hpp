#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "fxc/fluctuation.hpp"
#include "fxc/harness.hpp"
#include "fxc/mc_arfima.hpp"
#include "fxc/portfolio.hpp"
#include "fxc/scaling.hpp"
#include "fxc/series.hpp"
#include "fxc/surrogate.hpp"

namespace fxc {

/// Shortest decimal text that parses back to the same double.
[[nodiscard]] std::string format_double(double v);
/// Fixed notation with the given number of decimals.
[[nodiscard]] std::string format_fixed(double v, int decimals);

void to_json(nlohmann::json& j, const DescriptiveStats& s);
void to_json(nlohmann::json& j, const CorrelationProfile& p);
void to_json(nlohmann::json& j, const FluctuationSet& fs);
void to_json(nlohmann::json& j, const ScalingFit& f);
void to_json(nlohmann::json& j, const CoherencyEstimate& e);
void to_json(nlohmann::json& j, const McArfimaSpec& s);
void from_json(const nlohmann::json& j, McArfimaSpec& s);
void to_json(nlohmann::json& j, const CellKey& k);
void to_json(nlohmann::json& j, const EstimatorReport& r);
void to_json(nlohmann::json& j, const StabilityPoint& p);
void to_json(nlohmann::json& j, const SurrogateTestReport& r);
void to_json(nlohmann::json& j, const PortfolioMetrics& m);

/// Columns: scale,q,method,rho,capped.
void write_profiles_csv(std::ostream& os, std::span<const CorrelationProfile> profiles);

/// One series per column with a header row.
void write_series_csv(std::ostream& os, std::span<const TimeSeries> series);

/// Layout of the estimator tables for one (method, q): a row per
/// (N, range parameter), a bias/sd/mse column group per cross_corr.
void write_benchmark_table_csv(std::ostream& os, std::span<const EstimatorReport> reports,
                               Method method, double q);

void write_stability_csv(std::ostream& os, std::span<const StabilityPoint> points);

/// A row per scale: statistic with significance stars, p-value and class,
/// for the reports of order q.
void write_surrogate_table_csv(std::ostream& os, std::span<const SurrogateTestReport> reports,
                               double q, const std::string& pair_label);

/// Rows w_g and beta, a column per scale, four decimals.
void write_portfolio_table_csv(std::ostream& os, std::span<const PortfolioMetrics> metrics, double q,
                               const std::string& pair_label);

}  // namespace fxc
