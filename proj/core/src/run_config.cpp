#include "ddg/run_config.hpp"

#include <charconv>
#include <cstdlib>

#include "ddg/error.hpp"

namespace ddg {
namespace {

std::optional<std::string> env(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::string(v);
}

std::uint64_t env_number(const char* name, const std::string& text) {
  std::uint64_t v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw Error(ErrorCode::kInvalidArgument, std::string(name) + " must be a non-negative integer, got '" + text + "'");
  }
  return v;
}

}  // namespace

DiameterMode parse_diameter_mode(const std::string& name) {
  if (name == "exact") return DiameterMode::kExact;
  if (name == "bounded") return DiameterMode::kBounded;
  throw Error(ErrorCode::kInvalidArgument, "diameter mode must be exact or bounded, got '" + name + "'");
}

RunConfig RunConfig::from_env() {
  RunConfig c;
  if (auto v = env("DDG_SEED")) c.seed = env_number("DDG_SEED", *v);
  if (auto v = env("DDG_WORKERS")) {
    c.workers = static_cast<unsigned>(env_number("DDG_WORKERS", *v));
    if (c.workers == 0) throw Error(ErrorCode::kInvalidArgument, "DDG_WORKERS must be at least 1");
  }
  if (auto v = env("DDG_CACHE_DIR")) c.cache_dir = *v;
  if (auto v = env("DDG_RETRY_BUDGET")) c.retry_budget = static_cast<std::uint32_t>(env_number("DDG_RETRY_BUDGET", *v));
  if (auto v = env("DDG_BFS_BUDGET")) c.bfs_budget = env_number("DDG_BFS_BUDGET", *v);
  if (auto v = env("DDG_DIAMETER_MODE")) c.diameter_mode = parse_diameter_mode(*v);
  if (auto v = env("DDG_OUTPUT")) {
    if (*v == "json") {
      c.output = OutputFormat::kJson;
    } else if (*v == "text") {
      c.output = OutputFormat::kText;
    } else {
      throw Error(ErrorCode::kInvalidArgument, "DDG_OUTPUT must be text or json, got '" + *v + "'");
    }
  }
  return c;
}

}  // namespace ddg
