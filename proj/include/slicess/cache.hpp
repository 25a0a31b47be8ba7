#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "slicess/column.hpp"

namespace slicess {

constexpr const char* kCacheEnvironment = "SLICESS_CACHE_DIR";
constexpr int kCacheFormatVersion = 1;

// 64-bit FNV-1a; file names and table fingerprints must not depend on the
// standard library's std::hash.
std::uint64_t stable_digest(std::string_view text);

// One file per (spectrum, base, region, page). Files hold a version line, the
// key line and the page in records syntax. Writes go to a temporary file that
// is renamed into place.
class PageCache {
 public:
  explicit PageCache(std::filesystem::path directory) : dir_(std::move(directory)) {}
  // Directory from the environment override, else `fallback`.
  static PageCache from_environment(const std::filesystem::path& fallback);

  const std::filesystem::path& directory() const { return dir_; }
  static std::string key(const std::string& spectrum, const std::string& base, const Region& region,
                         const std::string& page);
  std::filesystem::path path_for(const std::string& key) const;

  std::optional<Page> load(const std::string& key) const;
  void store(const std::string& key, const Page& page) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace slicess
