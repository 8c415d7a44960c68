#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "gapsets/census.hpp"

namespace gapsets::cli {

/// Persistent map from census queries to counts, stored as one JSON document:
///   {"schema_version":1,"entries":[{"g":10,"depth":"<=3","mult":null,"count":168,"timestamp":...}]}
/// `depth` is "any", "=q" or "<=q"; `mult` is an integer or null.
class CountCache {
 public:
  static constexpr int kSchemaVersion = 1;

  struct Entry {
    std::uint64_t count = 0;
    std::int64_t timestamp = 0;  // seconds since the Unix epoch
  };

  /// Loads `path`. A missing file, or a document with another schema
  /// version, yields an empty cache. Malformed JSON throws std::runtime_error.
  static CountCache load(const std::string& path);

  /// Writes atomically (temp file + rename) while holding an exclusive lock
  /// on "<path>.lock"; throws CacheLockedError if another writer holds it.
  void save(const std::string& path) const;

  std::optional<std::uint64_t> lookup(const CensusQuery& q) const;
  void store(const CensusQuery& q, std::uint64_t count, std::int64_t timestamp);
  std::size_t size() const { return entries_.size(); }
  std::vector<CensusQuery> queries() const;

  struct SelfCheckReport {
    std::size_t checked = 0;
    std::vector<std::pair<CensusQuery, std::uint64_t>> mismatches;  // query, recomputed value
  };

  /// Recomputes up to `samples` randomly chosen entries with genus <= max_genus
  /// and compares them against the cached counts.
  SelfCheckReport self_check(std::size_t samples, std::uint32_t max_genus, std::uint64_t seed,
                             const std::function<std::uint64_t(const CensusQuery&)>& recompute) const;

 private:
  using Key = std::tuple<std::uint32_t, std::string, std::uint32_t>;  // g, depth text, mult (0 = any)
  static Key key_of(const CensusQuery& q);
  std::map<Key, Entry> entries_;
};

class CacheLockedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gapsets::cli
