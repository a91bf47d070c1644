#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "ddg/metrics.hpp"

namespace ddg {

enum class OutputFormat { kText, kJson };

// Knobs shared by every CLI command. Defaults come first, then the
// environment (DDG_SEED, DDG_WORKERS, DDG_CACHE_DIR, DDG_RETRY_BUDGET,
// DDG_BFS_BUDGET, DDG_DIAMETER_MODE, DDG_OUTPUT), then command-line flags.
struct RunConfig {
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::optional<DiameterMode> diameter_mode;
  std::uint32_t retry_budget = 64;
  std::uint64_t bfs_budget = 10'000;
  std::optional<std::filesystem::path> cache_dir;
  OutputFormat output = OutputFormat::kText;

  // Throws InvalidArgument on malformed values.
  static RunConfig from_env();
};

DiameterMode parse_diameter_mode(const std::string& name);  // "exact" or "bounded"

}  // namespace ddg
