#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>

#include "manifest.hpp"

namespace fxc::cli {

struct RunContext {
  std::filesystem::path out_dir = ".";
  std::size_t threads = 0;
  std::ostream* log = nullptr;
};

// Runs the subcommand named in the manifest and writes its result files,
// manifest.json included, into ctx.out_dir.
void execute(const Manifest& manifest, const RunContext& ctx);

}  // namespace fxc::cli
