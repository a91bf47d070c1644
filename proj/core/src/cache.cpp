#include "ddg/cache.hpp"

#include <fcntl.h>
#include <openssl/evp.h>
#include <sys/file.h>
#include <unistd.h>

#include "ddg/error.hpp"
#include "ddg/formats.hpp"

namespace ddg {
namespace {

class DirLock {
 public:
  DirLock(const std::filesystem::path& dir, bool exclusive) {
    const std::string path = (dir / ".lock").string();
    fd_ = ::open(path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
    if (fd_ < 0) throw Error(ErrorCode::kIo, "cannot open lock file '" + path + "'");
    if (::flock(fd_, exclusive ? LOCK_EX : LOCK_SH) != 0) {
      ::close(fd_);
      throw Error(ErrorCode::kIo, "cannot lock '" + path + "'");
    }
  }
  ~DirLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  DirLock(const DirLock&) = delete;
  DirLock& operator=(const DirLock&) = delete;

 private:
  int fd_ = -1;
};

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  return s;
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::kIo, "SHA-256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

GraphCache::GraphCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create cache directory '" + dir_.string() + "': " + ec.message());
}

std::filesystem::path GraphCache::entry_path(const MooreSpec& spec) const {
  return dir_ / (to_string(spec.family) + "-q" + std::to_string(spec.q) + "-v" + std::to_string(kGeometryVersion) +
                 ".edges");
}

std::filesystem::path GraphCache::checksum_path(const MooreSpec& spec) const {
  auto p = entry_path(spec);
  p += ".sha256";
  return p;
}

std::optional<Graph> GraphCache::load(const MooreSpec& spec) const {
  DirLock lock(dir_, false);
  const auto entry = entry_path(spec);
  const auto sum = checksum_path(spec);
  if (!std::filesystem::exists(entry)) return std::nullopt;
  if (!std::filesystem::exists(sum)) throw Error(ErrorCode::kCacheCorrupt, "no checksum for '" + entry.string() + "'");
  const std::string text = read_text_file(entry);
  const std::string expected = trim(read_text_file(sum));
  if (sha256_hex(text) != expected) {
    throw Error(ErrorCode::kCacheCorrupt, "checksum mismatch for '" + entry.string() + "'");
  }
  return import_graph(text, GraphFormat::kEdgeList);
}

void GraphCache::store(const MooreSpec& spec, const Graph& g) const {
  const std::string text = export_graph(g, GraphFormat::kEdgeList);
  DirLock lock(dir_, true);
  const auto entry = entry_path(spec);
  const auto sum = checksum_path(spec);
  auto tmp_entry = entry;
  tmp_entry += ".tmp";
  auto tmp_sum = sum;
  tmp_sum += ".tmp";
  write_text_file(tmp_entry, text);
  write_text_file(tmp_sum, sha256_hex(text) + "\n");
  std::filesystem::rename(tmp_entry, entry);
  std::filesystem::rename(tmp_sum, sum);
}

Graph GraphCache::get_or_build(const MooreSpec& spec, bool* hit) const {
  if (auto g = load(spec)) {
    if (hit) *hit = true;
    return std::move(*g);
  }
  Graph g = build_moore(spec);
  store(spec, g);
  if (hit) *hit = false;
  return g;
}

}  // namespace ddg
