#include "fxc/scale_grid.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "fxc/error.hpp"

namespace fxc {

namespace {

std::size_t parse_size(std::string_view token, std::string_view whole) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw InvalidInput("invalid scale grid '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

std::vector<std::size_t> log_spaced_scales(std::size_t lo, std::size_t hi, std::size_t count) {
  if (lo < 1 || hi < lo) throw InvalidInput("log_spaced_scales: need 1 <= lo <= hi");
  if (count < 1) throw InvalidInput("log_spaced_scales: count must be positive");
  std::vector<std::size_t> out;
  if (count == 1 || lo == hi) {
    out.push_back(lo);
    if (hi != lo && count > 1) out.push_back(hi);
    return out;
  }
  const double a = std::log(static_cast<double>(lo));
  const double b = std::log(static_cast<double>(hi));
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t s;
    if (i == 0) {
      s = lo;
    } else if (i + 1 == count) {
      s = hi;
    } else {
      const double t = static_cast<double>(i) / static_cast<double>(count - 1);
      s = static_cast<std::size_t>(std::llround(std::exp(a + t * (b - a))));
    }
    if (out.empty() || s > out.back()) out.push_back(s);
  }
  return out;
}

std::vector<std::size_t> parse_scale_grid(std::string_view text) {
  if (text.starts_with("log:")) {
    const auto body = text.substr(4);
    const auto c1 = body.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : body.find(':', c1 + 1);
    if (c2 == std::string_view::npos) throw InvalidInput("invalid scale grid '" + std::string(text) + "'");
    const auto lo = parse_size(body.substr(0, c1), text);
    const auto hi = parse_size(body.substr(c1 + 1, c2 - c1 - 1), text);
    const auto count = parse_size(body.substr(c2 + 1), text);
    return log_spaced_scales(lo, hi, count);
  }
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const auto s = parse_size(text.substr(start, comma - start), text);
    if (!out.empty() && s <= out.back()) {
      throw InvalidInput("scale grid must be strictly increasing: '" + std::string(text) + "'");
    }
    out.push_back(s);
    start = comma + 1;
  }
  if (out.empty()) throw InvalidInput("empty scale grid");
  return out;
}

}  // namespace fxc
