#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace fxc::detail {

// Real-to-half-complex transform pair of a fixed length. Instances are not
// shareable across threads; plan creation is serialized internally.
class RealFft {
 public:
  explicit RealFft(std::size_t n);
  ~RealFft();
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] std::size_t spectrum_size() const noexcept { return n_ / 2 + 1; }

  void forward(std::span<const double> in, std::span<std::complex<double>> out);
  // Normalized: inverse(forward(x)) == x.
  void inverse(std::span<const std::complex<double>> in, std::span<double> out);

 private:
  std::size_t n_;
  double* real_ = nullptr;
  std::complex<double>* spec_ = nullptr;
  void* forward_plan_ = nullptr;
  void* inverse_plan_ = nullptr;
};

// Smallest m >= n whose prime factors are all in {2, 3, 5, 7}.
[[nodiscard]] std::size_t fast_fft_size(std::size_t n);

}  // namespace fxc::detail
