#include "fxc/harness.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "fxc/error.hpp"
#include "fxc/parallel.hpp"

namespace fxc {

namespace {

constexpr std::array<Method, 2> kMethods{Method::q_dcca, Method::q_dmca};

struct PlannedCell {
  CellKey key;
  std::vector<std::size_t> scales;
};

// Every cell that can be computed for one (length, cross_corr) group. With
// shared_range set, both methods are indexed by n_min and fit n_min..N/5.
std::vector<PlannedCell> plan_cells(const BenchmarkConfig& cfg, std::size_t length,
                                    double cross_corr, std::span<const std::size_t> n_mins,
                                    std::span<const std::size_t> s_maxes, bool shared_range = false) {
  std::vector<PlannedCell> cells;
  for (const auto method : kMethods) {
    for (const double q : cfg.qs) {
      const bool by_n_min = shared_range || method == Method::q_dcca;
      const auto params = by_n_min ? n_mins : s_maxes;
      for (const auto param : params) {
        const auto range = by_n_min ? dcca_fit_range(param, length) : dmca_fit_range(param);
        if (range.lo < 4 || range.hi < range.lo || 4 * range.hi > length) continue;
        auto scales = fit_scales(range, cfg.fit_points);
        if (scales.size() < 3) continue;
        cells.push_back({{method, length, cross_corr, q, param, range}, std::move(scales)});
      }
    }
  }
  return cells;
}

std::vector<std::size_t> union_of_scales(const std::vector<PlannedCell>& cells, Method method) {
  std::vector<std::size_t> all;
  for (const auto& c : cells) {
    if (c.key.method == method) all.insert(all.end(), c.scales.begin(), c.scales.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

// Estimates every planned cell on one simulated pair.
std::vector<std::optional<double>> estimate_cells(const AlignedPair& pair,
                                                  const std::vector<PlannedCell>& cells,
                                                  const BenchmarkConfig& cfg) {
  std::vector<std::optional<double>> out(cells.size());
  const auto px = cumulative_profile(pair.x().values());
  const auto py = cumulative_profile(pair.y().values());
  for (const auto method : kMethods) {
    const auto scales = union_of_scales(cells, method);
    if (scales.empty()) continue;
    std::vector<SegmentStatistics> stats;
    stats.reserve(scales.size());
    for (const auto s : scales) {
      stats.push_back(method == Method::q_dcca ? dcca_segment_statistics(px, py, s)
                                               : dma_segment_statistics(px, py, s, cfg.theta));
    }
    for (const double q : cfg.qs) {
      CorrelationProfile profile;
      profile.method = method;
      profile.q = q;
      bool degenerate = false;
      for (std::size_t i = 0; i < scales.size(); ++i) {
        try {
          const auto r = rho_q_dmca(aggregate(stats[i], q));
          profile.points.push_back({scales[i], r.rho, r.capped});
        } catch (const DegenerateFluctuation&) {
          degenerate = true;
          break;
        }
      }
      if (degenerate) continue;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        const auto& key = cells[c].key;
        if (key.method != method || key.q != q) continue;
        try {
          out[c] = coherency_from_profile(profile, key.fit_range).h_rho;
        } catch (const DegenerateFluctuation&) {
          out[c].reset();
        }
      }
    }
  }
  return out;
}

std::string describe_group(std::size_t length, double cross_corr, std::size_t reps) {
  std::ostringstream os;
  os << "N=" << length << " cross_corr=" << cross_corr << " replications=" << reps;
  return os.str();
}

// Runs all replications of one group; result[c][r] is cell c, replication r.
std::vector<std::vector<std::optional<double>>> run_group(const BenchmarkConfig& cfg,
                                                          std::size_t length, double cross_corr,
                                                          std::size_t replications,
                                                          const std::vector<PlannedCell>& cells) {
  std::vector<std::vector<std::optional<double>>> per_rep(replications);
  parallel_for(replications, cfg.threads, [&](std::size_t r) {
    const auto sample = generate(cfg.sample_spec(length, cross_corr, r));
    per_rep[r] = estimate_cells(AlignedPair(sample.x, sample.y), cells, cfg);
  });
  std::vector<std::vector<std::optional<double>>> by_cell(cells.size(),
                                                          std::vector<std::optional<double>>(replications));
  for (std::size_t r = 0; r < replications; ++r) {
    for (std::size_t c = 0; c < cells.size(); ++c) by_cell[c][r] = per_rep[r][c];
  }
  return by_cell;
}

}  // namespace

void BenchmarkConfig::validate() const {
  if (replications < 10) throw InvalidInput("replications must be at least 10");
  if (lengths.empty() || cross_corrs.empty() || qs.empty()) {
    throw InvalidInput("benchmark grid has an empty axis");
  }
  for (const double c : cross_corrs) {
    if (!(c >= -1.0 && c <= 1.0)) throw InvalidInput("cross_corr must lie in [-1, 1]");
  }
  for (const double q : qs) {
    if (q == 0.0 || !std::isfinite(q)) throw InvalidInput("q must be finite and nonzero");
  }
  if (dcca_n_min.empty() && dmca_s_max.empty()) throw InvalidInput("no range parameters given");
  if (!(theta >= 0.0 && theta <= 1.0)) throw InvalidInput("theta must lie in [0, 1]");
  if (fit_points < 3) throw InvalidInput("fit_points must be at least 3");
}

McArfimaSpec BenchmarkConfig::sample_spec(std::size_t length, double cross_corr,
                                          std::size_t replication) const {
  McArfimaSpec spec;
  spec.length = length;
  spec.cross_corr = cross_corr;
  spec.truncation = truncation;
  spec.seed = master_seed + replication;
  return spec;
}

EstimatorReport summarize(const CellKey& key, double true_value,
                          std::span<const std::optional<double>> estimates) {
  EstimatorReport rep;
  rep.key = key;
  rep.true_value = true_value;
  double sum = 0.0;
  for (const auto& e : estimates) {
    if (e) {
      sum += *e;
      ++rep.n_effective;
    } else {
      ++rep.n_degenerate;
    }
  }
  if (rep.n_effective == 0) {
    rep.mean_estimate = rep.bias = rep.sd = rep.mse = std::nan("");
    return rep;
  }
  const auto n = static_cast<double>(rep.n_effective);
  rep.mean_estimate = sum / n;
  double ss = 0.0;
  for (const auto& e : estimates) {
    if (e) ss += (*e - rep.mean_estimate) * (*e - rep.mean_estimate);
  }
  rep.bias = rep.mean_estimate - true_value;
  rep.sd = std::sqrt(ss / n);
  rep.mse = rep.bias * rep.bias + rep.sd * rep.sd;
  return rep;
}

std::vector<EstimatorReport> run_benchmark(const BenchmarkConfig& cfg, const ProgressFn& progress) {
  cfg.validate();
  const double truth = McArfimaSpec{}.coherency();
  std::vector<EstimatorReport> reports;
  for (const auto length : cfg.lengths) {
    for (const double cross_corr : cfg.cross_corrs) {
      const auto cells = plan_cells(cfg, length, cross_corr, cfg.dcca_n_min, cfg.dmca_s_max);
      if (cells.empty()) continue;
      if (progress) progress(describe_group(length, cross_corr, cfg.replications));
      const auto by_cell = run_group(cfg, length, cross_corr, cfg.replications, cells);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        reports.push_back(summarize(cells[c].key, truth, by_cell[c]));
      }
    }
  }
  return reports;
}

std::vector<StabilityPoint> stability_sweep(std::span<const std::size_t> lengths,
                                            const BenchmarkConfig& cfg, const ProgressFn& progress) {
  cfg.validate();
  const double truth = McArfimaSpec{}.coherency();
  const std::vector<std::size_t> n_min{
      cfg.dcca_n_min.empty() ? kDmcaFitLow
                             : *std::min_element(cfg.dcca_n_min.begin(), cfg.dcca_n_min.end())};

  std::vector<StabilityPoint> out;
  for (const auto length : lengths) {
    for (const double cross_corr : cfg.cross_corrs) {
      const auto cells = plan_cells(cfg, length, cross_corr, n_min, {}, true);
      if (cells.empty()) continue;
      if (progress) progress(describe_group(length, cross_corr, cfg.replications));
      const auto by_cell = run_group(cfg, length, cross_corr, cfg.replications, cells);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        const auto rep = summarize(cells[c].key, truth, by_cell[c]);
        out.push_back({rep.key.method, rep.key.q, cross_corr, length, rep.mean_estimate, rep.sd,
                       rep.n_effective});
      }
    }
  }
  return out;
}

}  // namespace fxc
