#include "oracles.hpp"

#include <cmath>
#include <complex>
#include <map>

namespace oracle {

std::vector<double> running_sum(const std::vector<double>& x) {
  std::vector<double> out(x.size());
  for (std::size_t t = 0; t < x.size(); ++t) {
    long double acc = 0.0L;
    for (std::size_t i = 0; i <= t; ++i) acc += x[i];
    out[t] = static_cast<double>(acc);
  }
  return out;
}

double moving_average_at(const std::vector<double>& X1, std::size_t n, double theta, std::size_t t) {
  const long lo = -static_cast<long>(std::floor((n - 1) * theta));
  const long hi = static_cast<long>(std::ceil((n - 1) * (1.0 - theta)));
  long double sum = 0.0L;
  for (long k = lo; k <= hi; ++k) sum += X1[static_cast<std::size_t>(static_cast<long>(t) - k)];
  return static_cast<double>(sum / n);
}

namespace {

std::vector<double> one_based(const std::vector<double>& v) {
  std::vector<double> out(v.size() + 1, 0.0);
  for (std::size_t i = 0; i < v.size(); ++i) out[i + 1] = v[i];
  return out;
}

// Residuals over the valid 1-based range n - floor((n-1)theta) .. N - floor((n-1)theta).
std::vector<double> dma_residuals(const std::vector<double>& x, std::size_t n, double theta) {
  const auto X1 = one_based(running_sum(x));
  const std::size_t N = x.size();
  const auto shift = static_cast<std::size_t>(std::floor((n - 1) * theta));
  std::vector<double> eps;
  for (std::size_t t = n - shift; t <= N - shift; ++t) eps.push_back(X1[t] - moving_average_at(X1, n, theta, t));
  return eps;
}

double sgn(double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

Fluct finish(const std::vector<double>& vx, const std::vector<double>& vy, const std::vector<double>& cov,
             double q) {
  Fluct f;
  f.n_segments = vx.size();
  for (std::size_t v = 0; v < vx.size(); ++v) {
    f.fx += std::pow(std::sqrt(vx[v]), q);
    f.fy += std::pow(std::sqrt(vy[v]), q);
    f.fxy += sgn(cov[v]) * std::pow(std::abs(cov[v]), q / 2.0);
  }
  f.fx /= vx.size();
  f.fy /= vy.size();
  f.fxy /= cov.size();
  f.rho = f.fxy / std::sqrt(f.fx * f.fy);
  if (std::abs(f.rho) > 1.0) f.rho = 1.0 / f.rho;
  return f;
}

}  // namespace

Fluct q_dmca(const std::vector<double>& x, const std::vector<double>& y, std::size_t s, double theta,
             double q) {
  const auto ex = dma_residuals(x, s, theta);
  const auto ey = dma_residuals(y, s, theta);
  const std::size_t N = x.size();
  const auto Ns = static_cast<std::size_t>(std::floor(static_cast<double>(N) / s - 1.0));
  std::vector<double> vx, vy, cov;
  for (std::size_t v = 1; v <= Ns; ++v) {
    double sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 1; i <= s; ++i) {
      const std::size_t k = (v - 1) * s + i - 1;
      sxx += ex[k] * ex[k];
      syy += ey[k] * ey[k];
      sxy += ex[k] * ey[k];
    }
    vx.push_back(sxx / s);
    vy.push_back(syy / s);
    cov.push_back(sxy / s);
  }
  return finish(vx, vy, cov, q);
}

namespace {

// Residuals of X[start .. start+s-1] about the line a + b t, t = 1..s, from
// the normal equations.
std::vector<double> line_residuals(const std::vector<double>& X, std::size_t start, std::size_t s) {
  long double st = 0, stt = 0, sx = 0, stx = 0;
  for (std::size_t i = 1; i <= s; ++i) {
    const long double t = i, v = X[start + i - 1];
    st += t;
    stt += t * t;
    sx += v;
    stx += t * v;
  }
  const long double det = s * stt - st * st;
  const long double b = (s * stx - st * sx) / det;
  const long double a = (sx - b * st) / s;
  std::vector<double> r(s);
  for (std::size_t i = 1; i <= s; ++i) r[i - 1] = static_cast<double>(X[start + i - 1] - (a + b * i));
  return r;
}

}  // namespace

Fluct q_dcca(const std::vector<double>& x, const std::vector<double>& y, std::size_t s, double q) {
  const auto X = running_sum(x);
  const auto Y = running_sum(y);
  const std::size_t N = x.size();
  const std::size_t boxes = N / s;
  std::vector<std::size_t> starts;
  for (std::size_t v = 0; v < boxes; ++v) starts.push_back(v * s);
  for (std::size_t v = 0; v < boxes; ++v) starts.push_back(N - (v + 1) * s);
  std::vector<double> vx, vy, cov;
  for (const auto st : starts) {
    const auto rx = line_residuals(X, st, s);
    const auto ry = line_residuals(Y, st, s);
    double sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < s; ++i) {
      sxx += rx[i] * rx[i];
      syy += ry[i] * ry[i];
      sxy += rx[i] * ry[i];
    }
    vx.push_back(sxx / s);
    vy.push_back(syy / s);
    cov.push_back(sxy / s);
  }
  return finish(vx, vy, cov, q);
}

double dmca_classic(const std::vector<double>& x, const std::vector<double>& y, std::size_t n,
                    double theta) {
  const auto ex = dma_residuals(x, n, theta);
  const auto ey = dma_residuals(y, n, theta);
  long double sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < ex.size(); ++i) {
    sxx += ex[i] * ex[i];
    syy += ey[i] * ey[i];
    sxy += ex[i] * ey[i];
  }
  return static_cast<double>(sxy / std::sqrt(sxx * syy));
}

double gamma_weight(double d, std::size_t n) {
  if (n < 100) return std::tgamma(n + d) / (std::tgamma(n + 1.0) * std::tgamma(d));
  return std::exp(std::lgamma(n + d) - std::lgamma(n + 1.0) - std::lgamma(d));
}

std::vector<double> direct_convolution(const std::vector<double>& w1, const std::vector<double>& e1,
                                       const std::vector<double>& w2, const std::vector<double>& e2,
                                       std::size_t n_max, std::size_t length) {
  std::vector<double> out(length);
  for (std::size_t t = 0; t < length; ++t) {
    long double acc = 0.0L;
    for (std::size_t k = 0; k <= n_max; ++k) {
      acc += static_cast<long double>(w1[k]) * e1[n_max + t - k];
      acc += static_cast<long double>(w2[k]) * e2[n_max + t - k];
    }
    out[t] = static_cast<double>(acc);
  }
  return out;
}

std::vector<double> power_spectrum(const std::vector<double>& x) {
  const std::size_t n = x.size();
  const double pi = std::acos(-1.0);
  std::vector<double> p(n / 2 + 1);
  for (std::size_t k = 0; k < p.size(); ++k) {
    long double re = 0, im = 0;
    for (std::size_t t = 0; t < n; ++t) {
      const double ang = -2.0 * pi * static_cast<double>((k * t) % n) / n;
      re += x[t] * std::cos(ang);
      im += x[t] * std::sin(ang);
    }
    p[k] = static_cast<double>(re * re + im * im);
  }
  return p;
}

double spectrum_mismatch(const std::vector<double>& a, const std::vector<double>& b) {
  const auto pa = power_spectrum(a);
  const auto pb = power_spectrum(b);
  long double num = 0, den = 0;
  for (std::size_t k = 0; k < pa.size(); ++k) {
    num += (pa[k] - pb[k]) * (pa[k] - pb[k]);
    den += pb[k] * pb[k];
  }
  return static_cast<double>(std::sqrt(num / den));
}

double dma_residual_variance(double d, std::size_t n) {
  // Autocovariance of ARFIMA(0, d, 0) with unit innovation variance.
  std::vector<double> g(2 * n + 2);
  g[0] = std::tgamma(1.0 - 2.0 * d) / std::pow(std::tgamma(1.0 - d), 2);
  for (std::size_t k = 1; k < g.size(); ++k) g[k] = g[k - 1] * (k - 1 + d) / (k - d);

  // The residual X_t - (1/n) sum_j X_{t+j} over j = -b .. f is a finite
  // filter h on increments x_{t+i}.
  const auto f = static_cast<long>((n - 1) / 2);
  const auto b = static_cast<long>(n - 1) - f;
  std::map<long, double> h;
  for (long i = 1; i <= f; ++i) h[i] = -static_cast<double>(f - i + 1) / n;
  for (long i = -b + 1; i <= 0; ++i) h[i] = static_cast<double>(i + b) / n;
  long double v = 0.0L;
  for (const auto& [i, hi] : h) {
    for (const auto& [j, hj] : h) v += hi * hj * g[static_cast<std::size_t>(std::labs(i - j))];
  }
  return static_cast<double>(v);
}

double expected_dma_coherency(double cross_corr, double d_long, double d_short, std::size_t n) {
  const double vl = dma_residual_variance(d_long, n);
  const double vs = dma_residual_variance(d_short, n);
  return cross_corr * vs / (vl + vs);
}

}  // namespace oracle
