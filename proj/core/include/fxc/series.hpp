#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace fxc {

/// Ordered real-valued observations with an optional strictly increasing
/// timestamp column (epoch seconds). Every value is finite.
class TimeSeries {
 public:
  TimeSeries() = default;
  explicit TimeSeries(std::vector<double> values, std::string label = {},
                      std::optional<std::vector<std::int64_t>> timestamps = std::nullopt);

  [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] bool empty() const noexcept { return values_.empty(); }
  [[nodiscard]] double operator[](std::size_t i) const noexcept { return values_[i]; }
  [[nodiscard]] const std::string& label() const noexcept { return label_; }
  [[nodiscard]] const std::optional<std::vector<std::int64_t>>& timestamps() const noexcept {
    return timestamps_;
  }

  [[nodiscard]] TimeSeries with_label(std::string label) const;

 private:
  std::vector<double> values_;
  std::string label_;
  std::optional<std::vector<std::int64_t>> timestamps_;
};

/// Two series of identical length N >= 20 observed on the same clock.
class AlignedPair {
 public:
  static constexpr std::size_t kMinLength = 20;

  AlignedPair(TimeSeries x, TimeSeries y);

  [[nodiscard]] const TimeSeries& x() const noexcept { return x_; }
  [[nodiscard]] const TimeSeries& y() const noexcept { return y_; }
  [[nodiscard]] std::size_t size() const noexcept { return x_.size(); }
  [[nodiscard]] AlignedPair swapped() const { return AlignedPair(y_, x_); }

 private:
  TimeSeries x_;
  TimeSeries y_;
};

/// Moment statistics of a return series. Mean uses 1/N, std_dev uses
/// 1/(N-1); skewness and kurtosis are biased standardized moments, with
/// kurtosis reported raw (a Gaussian gives 3). The optional fields are empty
/// for a zero-variance series.
struct DescriptiveStats {
  std::size_t count = 0;
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double std_dev = 0.0;
  std::optional<double> skewness;
  std::optional<double> kurtosis;
  std::optional<double> jarque_bera_statistic;
  std::optional<double> jarque_bera_p_value;
};

/// Column selector: a header name or a zero-based index.
using ColumnRef = std::variant<std::string, std::size_t>;

/// Reads one numeric column from comma-separated text. A first row whose
/// cells are all non-numeric is taken as the header; blank lines and lines
/// starting with '#' are skipped. Errors name the offending line.
[[nodiscard]] TimeSeries read_csv(std::istream& in, const ColumnRef& column,
                                  const std::optional<ColumnRef>& timestamp_column = std::nullopt,
                                  const std::string& source_name = "<stream>");

[[nodiscard]] TimeSeries load_csv(const std::filesystem::path& path, const ColumnRef& column,
                                  const std::optional<ColumnRef>& timestamp_column = std::nullopt);

/// r_t = ln(p_{t+1} / p_t); output has one element fewer than the input.
[[nodiscard]] TimeSeries log_returns(const TimeSeries& prices);

[[nodiscard]] DescriptiveStats describe(const TimeSeries& returns);

/// Running sum X_t = x_1 + ... + x_t.
[[nodiscard]] TimeSeries cumulative_profile(const TimeSeries& x);
[[nodiscard]] std::vector<double> cumulative_profile(std::span<const double> x);

}  // namespace fxc
