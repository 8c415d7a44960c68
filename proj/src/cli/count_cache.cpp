#include "gapsets/cli/count_cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "json.hpp"

namespace gapsets::cli {

using nlohmann::json;

CountCache::Key CountCache::key_of(const CensusQuery& q) {
  return {q.genus, q.depth.to_string(), q.multiplicity.value_or(0)};
}

CountCache CountCache::load(const std::string& path) {
  CountCache cache;
  std::ifstream in(path);
  if (!in) return cache;
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("cache " + path + ": " + e.what());
  }
  if (!doc.is_object() || doc.value("schema_version", -1) != kSchemaVersion) return cache;
  for (const auto& e : doc.at("entries")) {
    CensusQuery q;
    q.genus = e.at("g").get<std::uint32_t>();
    q.depth = DepthFilter::parse(e.at("depth").get<std::string>());
    if (!e.at("mult").is_null()) q.multiplicity = e.at("mult").get<std::uint32_t>();
    cache.store(q, e.at("count").get<std::uint64_t>(), e.value("timestamp", std::int64_t{0}));
  }
  return cache;
}

namespace {

class FileLock {
 public:
  explicit FileLock(const std::string& path) : fd_(::open(path.c_str(), O_RDWR | O_CREAT, 0644)) {
    if (fd_ < 0) throw std::runtime_error("cannot open lock file " + path);
    if (::flock(fd_, LOCK_EX | LOCK_NB) != 0) {
      ::close(fd_);
      throw CacheLockedError("cache is locked by another writer: " + path);
    }
  }
  ~FileLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_;
};

}  // namespace

void CountCache::save(const std::string& path) const {
  FileLock lock(path + ".lock");
  json entries = json::array();
  for (const auto& [key, entry] : entries_) {
    const auto& [g, depth, mult] = key;
    entries.push_back({{"g", g},
                       {"depth", depth},
                       {"mult", mult == 0 ? json(nullptr) : json(mult)},
                       {"count", entry.count},
                       {"timestamp", entry.timestamp}});
  }
  const json doc = {{"schema_version", kSchemaVersion}, {"entries", entries}};
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache " + tmp);
    out << doc.dump(1) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

std::optional<std::uint64_t> CountCache::lookup(const CensusQuery& q) const {
  const auto it = entries_.find(key_of(q));
  if (it == entries_.end()) return std::nullopt;
  return it->second.count;
}

void CountCache::store(const CensusQuery& q, std::uint64_t count, std::int64_t timestamp) {
  entries_[key_of(q)] = Entry{count, timestamp};
}

std::vector<CensusQuery> CountCache::queries() const {
  std::vector<CensusQuery> out;
  out.reserve(entries_.size());
  for (const auto& [key, entry] : entries_) {
    const auto& [g, depth, mult] = key;
    CensusQuery q{g, DepthFilter::parse(depth), std::nullopt};
    if (mult != 0) q.multiplicity = mult;
    out.push_back(q);
  }
  return out;
}

CountCache::SelfCheckReport CountCache::self_check(
    std::size_t samples, std::uint32_t max_genus, std::uint64_t seed,
    const std::function<std::uint64_t(const CensusQuery&)>& recompute) const {
  std::vector<CensusQuery> pool;
  for (const auto& q : queries())
    if (q.genus <= max_genus) pool.push_back(q);
  std::mt19937_64 rng(seed);
  std::shuffle(pool.begin(), pool.end(), rng);
  if (pool.size() > samples) pool.resize(samples);

  SelfCheckReport report;
  for (const auto& q : pool) {
    const std::uint64_t fresh = recompute(q);
    ++report.checked;
    if (fresh != *lookup(q)) report.mismatches.emplace_back(q, fresh);
  }
  return report;
}

}  // namespace gapsets::cli
