#include "fxc/surrogate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstring>
#include <memory>
#include <numeric>
#include <random>

#include "fft.hpp"
#include "fxc/error.hpp"
#include "fxc/mc_arfima.hpp"
#include "fxc/parallel.hpp"

namespace fxc {

namespace {

std::uint64_t content_hash(std::span<const double> values) {
  // FNV-1a over the bit patterns.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const double v : values) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof bits);
    for (int b = 0; b < 8; ++b) {
      h ^= (bits >> (8 * b)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

double amplitude_mismatch(std::span<const std::complex<double>> spec,
                          std::span<const double> target) {
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < target.size(); ++k) {
    const double d = std::sqrt(std::norm(spec[k])) - target[k];
    num += d * d;
    den += target[k] * target[k];
  }
  return den > 0.0 ? std::sqrt(num / den) : 0.0;
}

// The same length is transformed thousands of times per test, so each
// thread keeps its last plan.
detail::RealFft& cached_fft(std::size_t n) {
  thread_local std::unique_ptr<detail::RealFft> fft;
  if (!fft || fft->size() != n) fft = std::make_unique<detail::RealFft>(n);
  return *fft;
}

}  // namespace

void IaaftConfig::validate() const {
  if (max_iterations < 1) throw InvalidInput("IAAFT needs at least one iteration");
  if (!(convergence_tol >= 0.0)) throw InvalidInput("IAAFT tolerance must be nonnegative");
}

TimeSeries iaaft_surrogate(const TimeSeries& x, const IaaftConfig& cfg) {
  cfg.validate();
  const std::size_t n = x.size();
  if (n < 32) throw InvalidInput("IAAFT needs at least 32 observations");
  const auto original = x.values();

  std::vector<double> sorted(original.begin(), original.end());
  std::sort(sorted.begin(), sorted.end());

  auto& fft = cached_fft(n);
  const std::size_t bins = fft.spectrum_size();
  std::vector<std::complex<double>> spec(bins);
  fft.forward(original, spec);
  std::vector<double> amplitude(bins);
  for (std::size_t k = 0; k < bins; ++k) amplitude[k] = std::abs(spec[k]);

  std::mt19937_64 rng(mix_seed(cfg.seed));
  std::vector<double> current(original.begin(), original.end());
  std::shuffle(current.begin(), current.end(), rng);

  std::vector<std::size_t> order(n), previous_order;
  std::vector<double> filtered(n);
  std::vector<std::pair<double, std::size_t>> keyed(n);
  double previous_mismatch = -1.0;
  for (std::size_t it = 0; it < cfg.max_iterations; ++it) {
    fft.forward(current, spec);
    const double mismatch = amplitude_mismatch(spec, amplitude);
    if (previous_mismatch >= 0.0) {
      const double change = std::abs(previous_mismatch - mismatch);
      if (change <= cfg.convergence_tol * std::max(previous_mismatch, 1e-300)) break;
    }
    previous_mismatch = mismatch;

    for (std::size_t k = 0; k < bins; ++k) {
      const double mag = std::sqrt(std::norm(spec[k]));
      spec[k] = mag > 0.0 ? spec[k] * (amplitude[k] / mag) : std::complex<double>(amplitude[k], 0.0);
    }
    fft.inverse(spec, filtered);

    // Ties are broken by position.
    for (std::size_t i = 0; i < n; ++i) keyed[i] = {filtered[i], i};
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t r = 0; r < n; ++r) {
      order[r] = keyed[r].second;
      current[order[r]] = sorted[r];
    }
    // Identical ranks mean the next iteration reproduces this one.
    if (order == previous_order) break;
    previous_order.swap(order);
    order.resize(n);
  }
  return TimeSeries(std::move(current), x.label() + "_surrogate");
}

double power_spectrum_mismatch(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.empty()) throw InvalidInput("spectra need equal non-empty inputs");
  detail::RealFft fft(a.size());
  std::vector<std::complex<double>> sa(fft.spectrum_size()), sb(fft.spectrum_size());
  fft.forward(a, sa);
  fft.forward(b, sb);
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < sa.size(); ++k) {
    const double pa = std::norm(sa[k]);
    const double pb = std::norm(sb[k]);
    num += (pa - pb) * (pa - pb);
    den += pb * pb;
  }
  return den > 0.0 ? std::sqrt(num / den) : 0.0;
}

std::string_view to_string(Strength s) noexcept {
  switch (s) {
    case Strength::strong: return "strong";
    case Strength::weak: return "weak";
    case Strength::none: return "none";
  }
  return "?";
}

std::string_view to_string(Role r) noexcept {
  switch (r) {
    case Role::hedge: return "hedge";
    case Role::safe_haven: return "safe-haven";
    case Role::co_movement: return "co-movement";
  }
  return "?";
}

Role role_for_order(double q) noexcept {
  if (q == 2.0) return Role::hedge;
  if (q == 4.0) return Role::safe_haven;
  return Role::co_movement;
}

std::string Classification::label() const {
  return std::string(to_string(strength)) + " " + std::string(to_string(role));
}

double two_tailed_p_value(double observed, std::span<const double> ensemble) {
  if (ensemble.empty()) throw InvalidInput("empty surrogate ensemble");
  const double mean =
      std::accumulate(ensemble.begin(), ensemble.end(), 0.0) / static_cast<double>(ensemble.size());
  const double distance = std::abs(observed - mean);
  const auto extreme = std::count_if(ensemble.begin(), ensemble.end(),
                                     [&](double v) { return std::abs(v - mean) >= distance; });
  return static_cast<double>(extreme + 1) / static_cast<double>(ensemble.size() + 1);
}

Classification classify(const SurrogateTestReport& report, double alpha) {
  Classification c;
  c.role = role_for_order(report.q);
  if (report.p_value > alpha) {
    c.strength = Strength::weak;
  } else {
    c.strength = report.observed_rho < 0.0 ? Strength::strong : Strength::none;
  }
  return c;
}

std::string significance_stars(double p_value) {
  if (p_value <= 0.01) return "***";
  if (p_value <= 0.05) return "**";
  if (p_value <= 0.10) return "*";
  return "";
}

std::vector<SurrogateTestReport> surrogate_test(const AlignedPair& pair,
                                                const SurrogateTestConfig& cfg) {
  if (cfg.n_surrogates < kMinSurrogates) {
    throw InvalidInput("at least " + std::to_string(kMinSurrogates) + " surrogates are required");
  }
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) throw InvalidInput("alpha must lie in (0, 1)");
  cfg.iaaft.validate();
  const auto observed = correlation_profiles(pair, cfg.theta, cfg.scales, cfg.qs, Method::q_dmca);

  const auto key_x = content_hash(pair.x().values());
  const auto key_y = content_hash(pair.y().values());
  const std::size_t n_scales = cfg.scales.size();
  const std::size_t n_qs = cfg.qs.size();

  // rho[i] holds q-major, scale-minor values of surrogate pair i, or is empty
  // when the pair stayed degenerate through every retry.
  std::vector<std::vector<double>> rho(cfg.n_surrogates);
  parallel_for(cfg.n_surrogates, cfg.threads, [&](std::size_t i) {
    for (std::size_t attempt = 0; attempt <= kSurrogateRetries; ++attempt) {
      const auto stream = mix_seed(cfg.iaaft.seed + i * (kSurrogateRetries + 1) + attempt);
      IaaftConfig cx = cfg.iaaft, cy = cfg.iaaft;
      cx.seed = stream ^ key_x;
      // Identical inputs still need independent surrogates.
      cy.seed = key_x == key_y ? mix_seed(cx.seed) : stream ^ key_y;
      try {
        const AlignedPair sp(iaaft_surrogate(pair.x(), cx), iaaft_surrogate(pair.y(), cy));
        const auto profiles = correlation_profiles(sp, cfg.theta, cfg.scales, cfg.qs, Method::q_dmca);
        std::vector<double> values;
        values.reserve(n_scales * n_qs);
        for (const auto& prof : profiles) {
          for (const auto& p : prof.points) values.push_back(p.rho);
        }
        rho[i] = std::move(values);
        return;
      } catch (const DegenerateFluctuation&) {
      }
    }
  });

  std::vector<SurrogateTestReport> reports;
  reports.reserve(n_scales * n_qs);
  for (std::size_t j = 0; j < n_qs; ++j) {
    for (std::size_t k = 0; k < n_scales; ++k) {
      SurrogateTestReport rep;
      rep.scale = cfg.scales[k];
      rep.q = cfg.qs[j];
      rep.observed_rho = observed[j].points[k].rho;
      for (const auto& values : rho) {
        if (values.empty()) {
          ++rep.n_discarded;
        } else {
          rep.surrogate_values.push_back(values[j * n_scales + k]);
        }
      }
      if (rep.surrogate_values.empty()) {
        throw DegenerateFluctuation("every surrogate was degenerate at scale " +
                                    std::to_string(rep.scale));
      }
      rep.surrogate_mean = std::accumulate(rep.surrogate_values.begin(), rep.surrogate_values.end(), 0.0) /
                           static_cast<double>(rep.surrogate_values.size());
      rep.p_value = two_tailed_p_value(rep.observed_rho, rep.surrogate_values);
      rep.classification = classify(rep, cfg.alpha);
      reports.push_back(std::move(rep));
    }
  }
  return reports;
}

std::vector<SurrogateTestReport> surrogate_test(const AlignedPair& pair, const DetrendConfig& cfg,
                                                std::size_t n_surrogates, const IaaftConfig& iaaft) {
  SurrogateTestConfig full;
  full.theta = cfg.theta;
  full.scales = cfg.scale_grid;
  full.qs = {cfg.q};
  full.n_surrogates = n_surrogates;
  full.iaaft = iaaft;
  return surrogate_test(pair, full);
}

}  // namespace fxc
