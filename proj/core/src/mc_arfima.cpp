#include "fxc/mc_arfima.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <string>

#include "fft.hpp"
#include "fxc/error.hpp"

namespace fxc {

namespace {

bool fractional_order_ok(double d) { return d > -0.5 && d < 0.5 && d != 0.0; }

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed) noexcept {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void McArfimaSpec::validate() const {
  const std::array<double, 4> ds{d1, d2, d3, d4};
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (!fractional_order_ok(ds[i])) {
      throw InvalidInput("d" + std::to_string(i + 1) + " = " + std::to_string(ds[i]) +
                         " must lie in (-0.5, 0.5) and be nonzero");
    }
  }
  for (const double sd : innovation_sd) {
    if (!(sd > 0.0) || !std::isfinite(sd)) throw InvalidInput("innovation sd must be positive");
  }
  for (const double w : {alpha, beta, gamma, delta}) {
    if (!std::isfinite(w)) throw InvalidInput("mixing weights must be finite");
  }
  if (!(cross_corr >= -1.0 && cross_corr <= 1.0)) throw InvalidInput("cross_corr must lie in [-1, 1]");
  if (truncation < 100) throw InvalidInput("truncation must be at least 100");
  if (length < 1) throw InvalidInput("length must be positive");
}

std::vector<double> arfima_weights(double d, std::size_t n_max) {
  if (!fractional_order_ok(d)) {
    throw InvalidInput("fractional order " + std::to_string(d) + " outside (-0.5, 0.5) \\ {0}");
  }
  if (n_max < 1) throw InvalidInput("n_max must be at least 1");
  std::vector<double> a(n_max + 1);
  a[0] = 1.0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto dn = static_cast<double>(n);
    a[n] = a[n - 1] * (dn - 1.0 + d) / dn;
  }
  return a;
}

std::array<std::vector<double>, 4> correlated_innovations(const McArfimaSpec& spec,
                                                          std::size_t count) {
  if (!(spec.cross_corr >= -1.0 && spec.cross_corr <= 1.0)) {
    throw InvalidInput("cross_corr must lie in [-1, 1]");
  }
  std::mt19937_64 rng(mix_seed(spec.seed));
  std::normal_distribution<double> normal(0.0, 1.0);
  const double c = spec.cross_corr;
  const double c_perp = std::sqrt(1.0 - c * c);
  const auto& sd = spec.innovation_sd;

  std::array<std::vector<double>, 4> e;
  for (auto& s : e) s.resize(count);
  for (std::size_t t = 0; t < count; ++t) {
    const double z1 = normal(rng);
    const double z2 = normal(rng);
    const double z3 = normal(rng);
    const double z4 = normal(rng);
    e[0][t] = sd[0] * z1;
    e[1][t] = sd[1] * z2;
    e[2][t] = sd[2] * (c * z2 + c_perp * z3);
    e[3][t] = sd[3] * z4;
  }
  return e;
}

BivariateSample generate(const McArfimaSpec& spec) {
  spec.validate();
  const std::size_t n_max = spec.truncation;
  const std::size_t total = n_max + spec.length;
  const auto innovations = correlated_innovations(spec, total);

  // Circular convolution of length >= n_max + N leaves outputs n_max.. free
  // of wrap-around.
  detail::RealFft fft(detail::fast_fft_size(total));
  const std::size_t m = fft.size();
  const std::size_t bins = fft.spectrum_size();

  std::vector<double> buffer(m);
  auto spectrum_of = [&](std::span<const double> v) {
    std::fill(buffer.begin(), buffer.end(), 0.0);
    std::copy(v.begin(), v.end(), buffer.begin());
    std::vector<std::complex<double>> spec_out(bins);
    fft.forward(buffer, spec_out);
    return spec_out;
  };

  const std::array<double, 4> ds{spec.d1, spec.d2, spec.d3, spec.d4};
  std::array<std::vector<std::complex<double>>, 4> weight_spectra;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto cached = std::find(ds.begin(), ds.begin() + static_cast<std::ptrdiff_t>(i), ds[i]);
    if (cached != ds.begin() + static_cast<std::ptrdiff_t>(i)) {
      weight_spectra[i] = weight_spectra[static_cast<std::size_t>(cached - ds.begin())];
    } else {
      weight_spectra[i] = spectrum_of(arfima_weights(ds[i], n_max));
    }
  }

  auto mix = [&](std::size_t i, double wi, std::size_t j, double wj) {
    const auto ei = spectrum_of(innovations[i]);
    const auto ej = spectrum_of(innovations[j]);
    std::vector<std::complex<double>> combined(bins);
    for (std::size_t k = 0; k < bins; ++k) {
      combined[k] = wi * weight_spectra[i][k] * ei[k] + wj * weight_spectra[j][k] * ej[k];
    }
    fft.inverse(combined, buffer);
    return std::vector<double>(buffer.begin() + static_cast<std::ptrdiff_t>(n_max),
                               buffer.begin() + static_cast<std::ptrdiff_t>(total));
  };

  BivariateSample out;
  out.spec = spec;
  out.x = TimeSeries(mix(0, spec.alpha, 1, spec.beta), "x");
  out.y = TimeSeries(mix(2, spec.gamma, 3, spec.delta), "y");
  return out;
}

}  // namespace fxc
