#include "fxc/serialize.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <set>

namespace fxc {

using nlohmann::json;

namespace {

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string format_fixed(double v, int decimals) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, decimals);
  std::string s(buf, ptr);
  // -0.0000 reads as a sign claim the value does not support.
  if (s.starts_with('-') && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

void to_json(json& j, const DescriptiveStats& s) {
  j = json{{"count", s.count},
           {"min", s.min},
           {"max", s.max},
           {"mean", s.mean},
           {"std_dev", s.std_dev},
           {"skewness", optional_number(s.skewness)},
           {"kurtosis", optional_number(s.kurtosis)},
           {"jarque_bera_statistic", optional_number(s.jarque_bera_statistic)},
           {"jarque_bera_p_value", optional_number(s.jarque_bera_p_value)}};
}

void to_json(json& j, const CorrelationProfile& p) {
  json points = json::array();
  for (const auto& pt : p.points) {
    points.push_back({{"scale", pt.scale}, {"rho", pt.rho}, {"capped", pt.capped}});
  }
  j = json{{"method", std::string(to_string(p.method))}, {"q", p.q}, {"points", std::move(points)}};
}

void to_json(json& j, const FluctuationSet& fs) {
  j = json{{"scale", fs.scale},   {"q", fs.q},
           {"f_x_q", fs.f_x_q},   {"f_y_q", fs.f_y_q},
           {"f_xy_q", fs.f_xy_q}, {"n_segments", fs.n_segments},
           {"n_skipped", fs.n_skipped}};
}

void to_json(json& j, const ScalingFit& f) {
  j = json{{"exponent", f.exponent}, {"intercept", f.intercept}, {"r_squared", f.r_squared},
           {"s_lo", f.s_lo},         {"s_hi", f.s_hi},           {"n_points", f.n_points}};
}

void to_json(json& j, const CoherencyEstimate& e) {
  j = json{{"h_rho", e.h_rho}, {"fit", e.fit}, {"per_scale_rho", e.per_scale_rho}};
}

void to_json(json& j, const McArfimaSpec& s) {
  j = json{{"d1", s.d1},
           {"d2", s.d2},
           {"d3", s.d3},
           {"d4", s.d4},
           {"alpha", s.alpha},
           {"beta", s.beta},
           {"gamma", s.gamma},
           {"delta", s.delta},
           {"innovation_sd", s.innovation_sd},
           {"cross_corr", s.cross_corr},
           {"length", s.length},
           {"truncation", s.truncation},
           {"seed", s.seed}};
}

void from_json(const json& j, McArfimaSpec& s) {
  McArfimaSpec d;
  s.d1 = j.value("d1", d.d1);
  s.d2 = j.value("d2", d.d2);
  s.d3 = j.value("d3", d.d3);
  s.d4 = j.value("d4", d.d4);
  s.alpha = j.value("alpha", d.alpha);
  s.beta = j.value("beta", d.beta);
  s.gamma = j.value("gamma", d.gamma);
  s.delta = j.value("delta", d.delta);
  s.innovation_sd = j.value("innovation_sd", d.innovation_sd);
  s.cross_corr = j.value("cross_corr", d.cross_corr);
  s.length = j.value("length", d.length);
  s.truncation = j.value("truncation", d.truncation);
  s.seed = j.value("seed", d.seed);
}

void to_json(json& j, const CellKey& k) {
  j = json{{"method", std::string(to_string(k.method))},
           {"length", k.length},
           {"cross_corr", k.cross_corr},
           {"q", k.q},
           {"range_param", k.range_param},
           {"range_param_name", k.method == Method::q_dcca ? "n_min" : "s_max"},
           {"s_lo", k.fit_range.lo},
           {"s_hi", k.fit_range.hi}};
}

void to_json(json& j, const EstimatorReport& r) {
  j = json{{"cell", r.key},
           {"true_value", r.true_value},
           {"mean_estimate", finite_or_null(r.mean_estimate)},
           {"bias", finite_or_null(r.bias)},
           {"sd", finite_or_null(r.sd)},
           {"mse", finite_or_null(r.mse)},
           {"n_effective", r.n_effective},
           {"n_degenerate", r.n_degenerate}};
}

void to_json(json& j, const StabilityPoint& p) {
  j = json{{"method", std::string(to_string(p.method))},
           {"q", p.q},
           {"cross_corr", p.cross_corr},
           {"length", p.length},
           {"mean_estimate", finite_or_null(p.mean_estimate)},
           {"sd", finite_or_null(p.sd)},
           {"n_effective", p.n_effective}};
}

void to_json(json& j, const SurrogateTestReport& r) {
  j = json{{"scale", r.scale},
           {"q", r.q},
           {"observed_rho", r.observed_rho},
           {"surrogate_mean", r.surrogate_mean},
           {"p_value", r.p_value},
           {"stars", significance_stars(r.p_value)},
           {"classification", r.classification.label()},
           {"strength", std::string(to_string(r.classification.strength))},
           {"role", std::string(to_string(r.classification.role))},
           {"n_surrogates", r.surrogate_values.size()},
           {"n_discarded", r.n_discarded},
           {"surrogate_values", r.surrogate_values}};
}

void to_json(json& j, const PortfolioMetrics& m) {
  j = json{{"scale", m.scale},
           {"q", m.q},
           {"w_g", m.w_g},
           {"w_g_raw", m.w_g_raw},
           {"counterpart_weight", m.counterpart_weight()},
           {"beta", m.beta}};
}

void write_profiles_csv(std::ostream& os, std::span<const CorrelationProfile> profiles) {
  os << "scale,q,method,rho,capped\n";
  for (const auto& p : profiles) {
    for (const auto& pt : p.points) {
      os << pt.scale << ',' << format_double(p.q) << ',' << to_string(p.method) << ','
         << format_double(pt.rho) << ',' << (pt.capped ? "true" : "false") << '\n';
    }
  }
}

void write_series_csv(std::ostream& os, std::span<const TimeSeries> series) {
  if (series.empty()) return;
  for (std::size_t c = 0; c < series.size(); ++c) {
    os << (c ? "," : "") << (series[c].label().empty() ? "v" + std::to_string(c) : series[c].label());
  }
  os << '\n';
  const auto rows = series.front().size();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < series.size(); ++c) {
      os << (c ? "," : "") << format_double(series[c][r]);
    }
    os << '\n';
  }
}

void write_benchmark_table_csv(std::ostream& os, std::span<const EstimatorReport> reports,
                               Method method, double q) {
  std::set<double> corrs;
  std::map<std::pair<std::size_t, std::size_t>, std::map<double, const EstimatorReport*>> rows;
  for (const auto& r : reports) {
    if (r.key.method != method || r.key.q != q) continue;
    corrs.insert(r.key.cross_corr);
    rows[{r.key.length, r.key.range_param}][r.key.cross_corr] = &r;
  }
  const char* param = method == Method::q_dcca ? "n_min" : "s_max";
  os << "N," << param;
  for (const double c : corrs) {
    const auto tag = format_double(c);
    os << ",bias_rho" << tag << ",sd_rho" << tag << ",mse_rho" << tag;
  }
  os << '\n';
  for (const auto& [key, by_corr] : rows) {
    os << key.first << ',' << key.second;
    for (const double c : corrs) {
      const auto it = by_corr.find(c);
      if (it == by_corr.end()) {
        os << ",,,";
      } else {
        os << ',' << format_fixed(it->second->bias, 4) << ',' << format_fixed(it->second->sd, 4) << ','
           << format_fixed(it->second->mse, 4);
      }
    }
    os << '\n';
  }
}

void write_stability_csv(std::ostream& os, std::span<const StabilityPoint> points) {
  os << "method,q,cross_corr,N,mean_estimate,sd,n_effective\n";
  for (const auto& p : points) {
    os << to_string(p.method) << ',' << format_double(p.q) << ',' << format_double(p.cross_corr) << ','
       << p.length << ',' << format_double(p.mean_estimate) << ',' << format_double(p.sd) << ','
       << p.n_effective << '\n';
  }
}

void write_surrogate_table_csv(std::ostream& os, std::span<const SurrogateTestReport> reports,
                               double q, const std::string& pair_label) {
  os << "s," << pair_label << " statistic," << pair_label << " p-value," << pair_label
     << " classification\n";
  for (const auto& r : reports) {
    if (r.q != q) continue;
    os << r.scale << ',' << format_fixed(r.observed_rho, 4) << significance_stars(r.p_value) << ','
       << format_fixed(r.p_value, 3) << ',' << r.classification.label() << '\n';
  }
}

void write_portfolio_table_csv(std::ostream& os, std::span<const PortfolioMetrics> metrics, double q,
                               const std::string& pair_label) {
  std::vector<const PortfolioMetrics*> row;
  for (const auto& m : metrics) {
    if (m.q == q) row.push_back(&m);
  }
  os << "pair,metric";
  for (const auto* m : row) os << ',' << m->scale;
  os << '\n' << pair_label << ",w_g";
  for (const auto* m : row) os << ',' << format_fixed(m->w_g, 4);
  os << '\n' << pair_label << ",beta";
  for (const auto* m : row) os << ',' << format_fixed(m->beta, 4);
  os << '\n';
}

}  // namespace fxc
