#include "fxc/series.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <string_view>

#include "fxc/error.hpp"

namespace fxc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_cells(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.push_back(trim(line.substr(start)));
      break;
    }
    cells.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return cells;
}

// Parses the whole cell as a double. Accepts "nan"/"inf" spellings so that
// the caller can reject them with a precise message.
std::optional<double> parse_number(std::string_view cell) {
  if (cell.empty()) return std::nullopt;
  if (cell.front() == '+') cell.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc{} || ptr != cell.data() + cell.size()) return std::nullopt;
  return value;
}

std::optional<std::int64_t> parse_integer(std::string_view cell) {
  if (cell.empty()) return std::nullopt;
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc{} || ptr != cell.data() + cell.size()) return std::nullopt;
  return value;
}

std::size_t resolve_column(const ColumnRef& ref, const std::vector<std::string>& header,
                           const std::string& source) {
  if (const auto* index = std::get_if<std::size_t>(&ref)) return *index;
  const auto& name = std::get<std::string>(ref);
  if (header.empty()) {
    throw InvalidInput(source + ": column '" + name + "' requested but the file has no header row");
  }
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw InvalidInput(source + ": no column named '" + name + "'");
  return static_cast<std::size_t>(it - header.begin());
}

}  // namespace

TimeSeries::TimeSeries(std::vector<double> values, std::string label,
                       std::optional<std::vector<std::int64_t>> timestamps)
    : values_(std::move(values)), label_(std::move(label)), timestamps_(std::move(timestamps)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw InvalidInput("series '" + label_ + "': non-finite value at index " + std::to_string(i));
    }
  }
  if (timestamps_) {
    if (timestamps_->size() != values_.size()) {
      throw InvalidInput("series '" + label_ + "': timestamp count differs from value count");
    }
    for (std::size_t i = 1; i < timestamps_->size(); ++i) {
      if ((*timestamps_)[i] <= (*timestamps_)[i - 1]) {
        throw InvalidInput("series '" + label_ + "': timestamps not strictly increasing at index " +
                           std::to_string(i));
      }
    }
  }
}

TimeSeries TimeSeries::with_label(std::string label) const {
  TimeSeries copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

AlignedPair::AlignedPair(TimeSeries x, TimeSeries y) : x_(std::move(x)), y_(std::move(y)) {
  if (x_.size() != y_.size()) {
    throw InvalidInput("pair lengths differ: " + std::to_string(x_.size()) + " vs " +
                       std::to_string(y_.size()));
  }
  if (x_.size() < kMinLength) {
    throw InvalidInput("pair length " + std::to_string(x_.size()) + " is below the minimum of " +
                       std::to_string(kMinLength));
  }
  if (x_.timestamps() && y_.timestamps() && *x_.timestamps() != *y_.timestamps()) {
    throw InvalidInput("pair timestamps do not match exactly");
  }
}

TimeSeries read_csv(std::istream& in, const ColumnRef& column,
                    const std::optional<ColumnRef>& timestamp_column,
                    const std::string& source_name) {
  std::vector<std::string> header;
  std::vector<double> values;
  std::vector<std::int64_t> stamps;
  std::optional<std::size_t> value_col;
  std::optional<std::size_t> stamp_col;
  bool first_row = true;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    const auto cells = split_cells(view);

    if (first_row) {
      first_row = false;
      const bool all_text = std::none_of(cells.begin(), cells.end(),
                                         [](std::string_view c) { return parse_number(c).has_value(); });
      if (all_text) {
        for (const auto c : cells) header.emplace_back(c);
        value_col = resolve_column(column, header, source_name);
        if (timestamp_column) stamp_col = resolve_column(*timestamp_column, header, source_name);
        continue;
      }
      value_col = resolve_column(column, header, source_name);
      if (timestamp_column) stamp_col = resolve_column(*timestamp_column, header, source_name);
    }

    const auto row = source_name + " line " + std::to_string(line_no);
    if (*value_col >= cells.size()) {
      throw InvalidInput(row + ": missing column " + std::to_string(*value_col));
    }
    const auto value = parse_number(cells[*value_col]);
    if (!value || !std::isfinite(*value)) {
      throw InvalidInput(row + ": non-numeric cell '" + std::string(cells[*value_col]) + "'");
    }
    values.push_back(*value);
    if (stamp_col) {
      if (*stamp_col >= cells.size()) {
        throw InvalidInput(row + ": missing timestamp column " + std::to_string(*stamp_col));
      }
      const auto stamp = parse_integer(cells[*stamp_col]);
      if (!stamp) {
        throw InvalidInput(row + ": invalid timestamp '" + std::string(cells[*stamp_col]) + "'");
      }
      stamps.push_back(*stamp);
    }
  }

  if (values.size() < 2) {
    throw InvalidInput(source_name + ": fewer than 2 data rows");
  }
  std::string label = std::holds_alternative<std::string>(column)
                          ? std::get<std::string>(column)
                          : (value_col && *value_col < header.size() ? header[*value_col]
                                                                     : "column" + std::to_string(*value_col));
  std::optional<std::vector<std::int64_t>> ts;
  if (stamp_col) ts = std::move(stamps);
  return TimeSeries(std::move(values), std::move(label), std::move(ts));
}

TimeSeries load_csv(const std::filesystem::path& path, const ColumnRef& column,
                    const std::optional<ColumnRef>& timestamp_column) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path.string() + "'");
  return read_csv(in, column, timestamp_column, path.string());
}

TimeSeries log_returns(const TimeSeries& prices) {
  const auto p = prices.values();
  if (p.size() < 2) throw InvalidInput("log_returns needs at least 2 prices");
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] > 0.0)) {
      throw InvalidInput("series '" + prices.label() + "': non-positive price " + std::to_string(p[i]) +
                         " at index " + std::to_string(i) + " (data row " + std::to_string(i + 1) + ")");
    }
  }
  std::vector<double> r(p.size() - 1);
  for (std::size_t t = 0; t + 1 < p.size(); ++t) r[t] = std::log(p[t + 1] / p[t]);

  std::optional<std::vector<std::int64_t>> ts;
  if (prices.timestamps()) ts.emplace(prices.timestamps()->begin() + 1, prices.timestamps()->end());
  return TimeSeries(std::move(r), prices.label(), std::move(ts));
}

DescriptiveStats describe(const TimeSeries& returns) {
  const auto x = returns.values();
  const auto n = x.size();
  if (n < 8) throw InvalidInput("describe needs at least 8 observations");

  DescriptiveStats out;
  out.count = n;
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  out.min = *lo;
  out.max = *hi;

  double sum = 0.0;
  for (double v : x) sum += v;
  const double mean = sum / static_cast<double>(n);
  // Rounding can push the mean a hair outside [min, max] for near-constant data.
  out.mean = std::clamp(mean, out.min, out.max);

  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double v : x) {
    const double d = v - mean;
    const double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  const double dn = static_cast<double>(n);
  out.std_dev = std::sqrt(m2 / (dn - 1.0));
  if (out.max == out.min) return out;

  m2 /= dn;
  m3 /= dn;
  m4 /= dn;
  const double skew = m3 / std::pow(m2, 1.5);
  const double kurt = m4 / (m2 * m2);
  const double jb = dn * (skew * skew / 6.0 + (kurt - 3.0) * (kurt - 3.0) / 24.0);
  out.skewness = skew;
  out.kurtosis = kurt;
  out.jarque_bera_statistic = jb;
  // Survival function of chi-square with 2 degrees of freedom.
  out.jarque_bera_p_value = std::exp(-0.5 * jb);
  return out;
}

std::vector<double> cumulative_profile(std::span<const double> x) {
  std::vector<double> out(x.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc += x[i];
    out[i] = acc;
  }
  return out;
}

TimeSeries cumulative_profile(const TimeSeries& x) {
  if (x.empty()) throw InvalidInput("cumulative_profile of an empty series");
  return TimeSeries(cumulative_profile(x.values()), x.label(), x.timestamps());
}

}  // namespace fxc
