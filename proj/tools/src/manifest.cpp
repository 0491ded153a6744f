#include "manifest.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "fxc/error.hpp"

namespace fxc::cli {

namespace {

std::string to_hex(const unsigned char* data, unsigned int len) {
  std::ostringstream os;
  os << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i) os << std::setw(2) << static_cast<int>(data[i]);
  return os.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 computation failed");
  }
  return to_hex(md, len);
}

std::string sha256_file(const std::filesystem::path& path) { return sha256_hex(read_file(path)); }

void Manifest::add_input(const std::string& role, const std::filesystem::path& path) {
  inputs.push_back({{"role", role},
                    {"path", std::filesystem::absolute(path).lexically_normal().string()},
                    {"sha256", sha256_file(path)}});
}

void Manifest::verify_inputs() const {
  for (const auto& in : inputs) {
    const auto path = in.at("path").get<std::string>();
    if (sha256_file(path) != in.at("sha256").get<std::string>()) {
      throw InvalidInput("input '" + path + "' no longer matches the digest recorded in the manifest");
    }
  }
}

nlohmann::json Manifest::to_json() const {
  return {{"subcommand", subcommand},
          {"tool_version", tool_version},
          {"master_seed", master_seed},
          {"config", config},
          {"inputs", inputs}};
}

Manifest Manifest::from_json(const nlohmann::json& j) {
  Manifest m;
  try {
    m.subcommand = j.at("subcommand").get<std::string>();
    m.tool_version = j.at("tool_version").get<std::string>();
    m.master_seed = j.at("master_seed").get<std::uint64_t>();
    m.config = j.at("config");
    m.inputs = j.at("inputs");
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed manifest: ") + e.what());
  }
  return m;
}

std::string Manifest::text() const { return to_json().dump(2) + "\n"; }

std::string Manifest::digest() const { return sha256_hex(text()); }

Manifest load_manifest(const std::filesystem::path& path) {
  const auto body = read_file(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput("manifest '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return Manifest::from_json(j);
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag, std::uint64_t fallback) {
  if (flag) return *flag;
  if (const char* env = std::getenv("FRACTAL_XCORR_SEED"); env && *env) {
    const std::string_view text(env);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      throw InvalidInput("FRACTAL_XCORR_SEED is not an unsigned integer: '" + std::string(text) + "'");
    }
    return value;
  }
  return fallback;
}

}  // namespace fxc::cli
