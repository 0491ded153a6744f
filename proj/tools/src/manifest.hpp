#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace fxc::cli {

// Everything needed to reproduce a run. Output location and thread count are
// deliberately absent: neither changes a single output byte.
struct Manifest {
  std::string subcommand;
  std::string tool_version;
  std::uint64_t master_seed = 0;
  nlohmann::json config = nlohmann::json::object();
  // Array of {role, path, sha256}.
  nlohmann::json inputs = nlohmann::json::array();

  void add_input(const std::string& role, const std::filesystem::path& path);
  // Throws InvalidInput when an input file changed since the manifest was written.
  void verify_inputs() const;

  [[nodiscard]] nlohmann::json to_json() const;
  [[nodiscard]] static Manifest from_json(const nlohmann::json& j);
  // Canonical text written to manifest.json; its SHA-256 is the manifest digest.
  [[nodiscard]] std::string text() const;
  [[nodiscard]] std::string digest() const;
};

[[nodiscard]] std::string sha256_hex(const std::string& bytes);
[[nodiscard]] std::string sha256_file(const std::filesystem::path& path);

[[nodiscard]] Manifest load_manifest(const std::filesystem::path& path);

// --seed beats FRACTAL_XCORR_SEED, which beats the subcommand default.
[[nodiscard]] std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag,
                                         std::uint64_t fallback);

}  // namespace fxc::cli
