#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fxc/series.hpp"

namespace fxt {

inline std::vector<double> gaussian(std::size_t n, std::uint64_t seed, double sd = 1.0) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd(0.0, sd);
  std::vector<double> v(n);
  for (auto& x : v) x = nd(rng);
  return v;
}

inline fxc::AlignedPair gaussian_pair(std::size_t n, std::uint64_t seed, double corr = 0.0) {
  auto a = gaussian(n, seed);
  auto b = gaussian(n, seed ^ 0x5bd1e995ULL);
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = corr * a[i] + std::sqrt(1.0 - corr * corr) * b[i];
  return fxc::AlignedPair(fxc::TimeSeries(a, "x"), fxc::TimeSeries(y, "y"));
}

inline std::vector<double> raw(const fxc::TimeSeries& s) {
  return {s.values().begin(), s.values().end()};
}

}  // namespace fxt
