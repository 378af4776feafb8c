#pragma once

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include "lrfill/oeis/bfile.hpp"

namespace lrfill::oeis {

/// Environment variable naming the cache directory.
inline constexpr const char* kCacheEnv = "LRFILL_OEIS_CACHE";

class FetchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Returns the body of a GET, or throws FetchError.
using Transport = std::function<std::string(const std::string& url)>;

/// https://oeis.org/A026136/b026136.txt
inline std::string bfile_url(const std::string& id) {
  const auto nid = normalize_id(id);
  return "https://oeis.org/" + nid + "/b" + nid.substr(1) + ".txt";
}

struct FetchOptions {
  bool offline = false;
  unsigned retries = 0;  // extra attempts after the first
  std::chrono::milliseconds backoff{200};  // doubled after each failed attempt
};

/// Cache directory: explicit value, else the environment variable, else
/// ./oeis-cache.
inline std::filesystem::path resolve_cache_dir(const std::optional<std::filesystem::path>& explicit_dir = {}) {
  if (explicit_dir && !explicit_dir->empty()) return *explicit_dir;
  if (const char* env = std::getenv(kCacheEnv); env && *env) return env;
  return "oeis-cache";
}

/// One file per id (A026136.txt) under a directory; misses go to the
/// transport. Fetches of the same id are serialized.
class BFileCache {
 public:
  explicit BFileCache(std::filesystem::path dir, Transport transport = {}, FetchOptions options = {})
      : dir_(std::move(dir)), transport_(std::move(transport)), options_(options) {}

  [[nodiscard]] const std::filesystem::path& dir() const noexcept { return dir_; }
  [[nodiscard]] std::filesystem::path path_of(const std::string& id) const { return dir_ / (normalize_id(id) + ".txt"); }
  [[nodiscard]] bool cached(const std::string& id) const { return std::filesystem::exists(path_of(id)); }
  [[nodiscard]] std::size_t network_requests() const noexcept { return requests_; }

  /// Raw bytes of the b-file, from cache or a single GET (plus retries).
  std::string fetch_raw(const std::string& id) {
    const auto nid = normalize_id(id);
    std::scoped_lock lock(mutex_for(nid));
    const auto path = path_of(nid);
    if (std::filesystem::exists(path)) return read_file(path);
    if (options_.offline || !transport_) throw FetchError(nid + " unavailable offline (not in cache " + dir_.string() + ")");

    const auto url = bfile_url(nid);
    std::string body;
    auto delay = options_.backoff;
    for (unsigned attempt = 0;; ++attempt) {
      try {
        ++requests_;
        body = transport_(url);
        break;
      } catch (const FetchError& e) {
        if (attempt >= options_.retries) throw FetchError(nid + " unavailable offline: " + e.what());
        std::this_thread::sleep_for(delay);
        delay *= 2;
      }
    }
    std::filesystem::create_directories(dir_);
    const auto tmp = path.string() + ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary);
      out << body;
      if (!out) throw FetchError("cannot write cache file " + tmp);
    }
    std::filesystem::rename(tmp, path);
    return body;
  }

  BFile fetch(const std::string& id) {
    const auto nid = normalize_id(id);
    const bool hit = cached(nid);
    const auto raw = fetch_raw(nid);
    return parse_bfile(raw, nid, hit ? path_of(nid).string() : bfile_url(nid));
  }

 private:
  static std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw FetchError("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  std::mutex& mutex_for(const std::string& id) {
    std::scoped_lock lock(table_mutex_);
    auto& m = per_id_[id];
    if (!m) m = std::make_unique<std::mutex>();
    return *m;
  }

  std::filesystem::path dir_;
  Transport transport_;
  FetchOptions options_;
  std::mutex table_mutex_;
  std::map<std::string, std::unique_ptr<std::mutex>> per_id_;
  std::atomic<std::size_t> requests_{0};
};

/// Reads a b-file from disk.
inline BFile load_bfile(const std::filesystem::path& p, std::string id = {}) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw FetchError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (id.empty()) id = p.stem().string();
  return parse_bfile(ss.str(), std::move(id), p.string());
}

}  // namespace lrfill::oeis
