#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gapsets/gapset.hpp"
#include "gapsets/kunz.hpp"

namespace gapsets {

struct DepthFilter {
  enum class Kind { any, exact, at_most };
  Kind kind = Kind::any;
  std::uint32_t value = 0;

  static DepthFilter any() { return {}; }
  static DepthFilter exact(std::uint32_t q) { return {Kind::exact, q}; }
  static DepthFilter at_most(std::uint32_t q) { return {Kind::at_most, q}; }

  bool admits(std::uint32_t depth) const {
    switch (kind) {
      case Kind::any: return true;
      case Kind::exact: return depth == value;
      case Kind::at_most: return depth <= value;
    }
    return false;
  }

  /// "any", "=q" or "<=q".
  std::string to_string() const;
  /// Inverse of to_string; throws std::invalid_argument.
  static DepthFilter parse(std::string_view text);

  friend bool operator==(const DepthFilter&, const DepthFilter&) = default;
};

struct CensusQuery {
  std::uint32_t genus = 0;
  DepthFilter depth;
  /// Exact multiplicity (>= 2) when set.
  std::optional<std::uint32_t> multiplicity;

  friend bool operator==(const CensusQuery&, const CensusQuery&) = default;
};

struct CensusOptions {
  /// Worker threads; each pulls first-part shards from a shared counter.
  unsigned jobs = 1;
  /// Materialize the gapsets (forces a single worker, lexicographic order).
  bool collect_items = false;
};

struct CensusResult {
  CensusQuery query;
  std::uint64_t count = 0;
  std::optional<std::vector<GapSet>> items;
  std::chrono::nanoseconds elapsed{0};
  unsigned shards = 1;
};

/// Counts gapsets of genus g matching the filters by walking the tilings of
/// the g-board (restricted by max part / part count from the filters) and
/// keeping the ones whose coordinates satisfy the Kunz system. g = 0 counts
/// the empty gapset (depth 0, multiplicity 1).
CensusResult count_gapsets(const CensusQuery& query, const CensusOptions& options = {});

/// Count contributed by the compositions whose first part is `first_part`.
/// Summing over first_part in [1, g] reproduces count_gapsets for g >= 1.
std::uint64_t count_gapsets_shard(const CensusQuery& query, std::uint32_t first_part);

/// Number of m-extensions (over all m) of genus g, which is 2^{g-1}.
/// Enumerates for g <= 26 and counts tilings by recurrence above that.
/// Throws std::invalid_argument for g == 0 or g >= 64.
std::uint64_t count_m_extensions(std::uint32_t g);

/// Number of gapsets of genus g and depth at most k.
std::uint64_t count_gapsets_depth_at_most(std::uint32_t g, std::uint32_t k);

/// Counts of gapsets of genus g split by (depth, multiplicity) from one pass.
class GenusCensus {
 public:
  explicit GenusCensus(std::uint32_t g);

  std::uint32_t genus() const { return genus_; }
  std::uint64_t count(std::uint32_t depth, std::uint32_t multiplicity) const;
  std::uint64_t count_depth(std::uint32_t depth) const;
  std::uint64_t count_depth_at_most(std::uint32_t depth) const;
  std::uint64_t count_multiplicity(std::uint32_t multiplicity) const;
  std::uint64_t total() const;

  void add(std::uint32_t depth, std::uint32_t multiplicity, std::uint64_t n);
  void merge(const GenusCensus& other);

 private:
  std::uint32_t genus_;
  // cells_[depth * (genus_ + 2) + multiplicity]
  std::vector<std::uint64_t> cells_;
};

GenusCensus census_grid(std::uint32_t g, unsigned jobs = 1);

/// Visits each Kunz vector (k_1, ..., k_{m-1}) with sum g, of any length,
/// made of a prefix over {2,3}, one coordinate equal to 3, and a suffix over
/// {1,2}. Vectors are visited once each, in lexicographic order.
void for_each_depth3_vector(std::uint32_t g, const std::function<void(const KunzVector&)>& visit);

std::vector<KunzVector> enumerate_depth3_family(std::uint32_t g);

/// F_{g-2} + sum_{n=2}^{g-3} P_n F_{g-2-n}. Requires g >= 3.
std::uint64_t count_depth3_family(std::uint32_t g);

}  // namespace gapsets
