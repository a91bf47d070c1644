#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "ddg/graph.hpp"
#include "ddg/moore.hpp"

namespace ddg {

// Bumped whenever a builder may produce a different graph for the same
// (family, q), so stale entries are never reused.
inline constexpr int kGeometryVersion = 1;

std::string sha256_hex(std::string_view data);

// Base graphs on disk as edge lists with a SHA-256 sidecar. Writes go
// through a temporary file and rename while holding an exclusive flock on
// the directory's lock file; reads hold a shared lock.
class GraphCache {
 public:
  explicit GraphCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path entry_path(const MooreSpec& spec) const;  // <dir>/gh-q7-v1.edges
  std::filesystem::path checksum_path(const MooreSpec& spec) const;

  // Empty when there is no entry; throws CacheCorrupt when the stored
  // checksum does not match the file.
  std::optional<Graph> load(const MooreSpec& spec) const;
  void store(const MooreSpec& spec, const Graph& g) const;

  // Loads, or builds and stores. `hit` reports which happened.
  Graph get_or_build(const MooreSpec& spec, bool* hit = nullptr) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace ddg
