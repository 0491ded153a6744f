#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace fxc {

/// `count` logarithmically spaced integers from lo to hi inclusive, rounded
/// to the nearest integer and deduplicated (so possibly fewer than count).
[[nodiscard]] std::vector<std::size_t> log_spaced_scales(std::size_t lo, std::size_t hi,
                                                         std::size_t count);

/// Parses "log:LO:HI:COUNT" or an explicit comma-separated list "20,50,100".
/// The result is strictly increasing.
[[nodiscard]] std::vector<std::size_t> parse_scale_grid(std::string_view text);

/// Scale grid used by the empirical pipelines when none is given.
inline constexpr std::string_view kDefaultScaleGrid = "log:20:3162:10";

}  // namespace fxc
