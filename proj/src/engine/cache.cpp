#include "slicess/cache.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <unistd.h>

#include "slicess/error.hpp"
#include "slicess/records.hpp"

namespace slicess {

std::uint64_t stable_digest(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

PageCache PageCache::from_environment(const std::filesystem::path& fallback) {
  if (const char* dir = std::getenv(kCacheEnvironment); dir && *dir) return PageCache(dir);
  return PageCache(fallback);
}

std::string PageCache::key(const std::string& spectrum, const std::string& base, const Region& region,
                           const std::string& page) {
  return "spectrum=" + spectrum + " base=" + base + " region=" + region.to_string() + " page=" + page;
}

std::filesystem::path PageCache::path_for(const std::string& key) const {
  std::ostringstream name;
  name << "page-" << std::hex << std::setw(16) << std::setfill('0') << stable_digest(key) << ".records";
  return dir_ / name.str();
}

std::optional<Page> PageCache::load(const std::string& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  std::string version, stored_key;
  std::getline(in, version);
  std::getline(in, stored_key);
  if (version != "slicess-page-cache " + std::to_string(kCacheFormatVersion) || stored_key != key) return std::nullopt;
  std::stringstream body;
  body << in.rdbuf();
  try {
    return parse_records(body.str());
  } catch (const Error&) {
    return std::nullopt;
  }
}

void PageCache::store(const std::string& key, const Page& page) const {
  static std::atomic<unsigned> counter{0};
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw Error(ErrorKind::IO, "cannot create cache directory " + dir_.string());
  const auto final_path = path_for(key);
  const auto temp = final_path.string() + ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(temp);
    if (!out) throw Error(ErrorKind::IO, "cannot write " + temp);
    out << "slicess-page-cache " << kCacheFormatVersion << "\n" << key << "\n" << to_records(page);
    if (!out) throw Error(ErrorKind::IO, "short write to " + temp);
  }
  std::filesystem::rename(temp, final_path, ec);
  if (ec) throw Error(ErrorKind::IO, "cannot move " + temp + " into place");
}

}  // namespace slicess
