#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gapsets {

/// Finite set of positive integers stored as a strictly increasing array,
/// plus a membership bitmap over [0, max] for O(1) lookup.
class FiniteSet {
 public:
  FiniteSet() = default;

  /// Throws std::invalid_argument unless `elements` is strictly increasing
  /// and every element is >= 1.
  explicit FiniteSet(std::vector<std::uint32_t> elements);

  /// Sorts and deduplicates first; zero is still rejected.
  static FiniteSet from_unsorted(std::vector<std::uint32_t> elements);

  /// Parses "1,2,4,7,10" (whitespace around items allowed; "" is the empty
  /// set). Throws std::invalid_argument on malformed text.
  static FiniteSet parse(std::string_view text);

  std::span<const std::uint32_t> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  std::uint32_t max() const { return elements_.empty() ? 0 : elements_.back(); }

  bool contains(std::int64_t x) const {
    return x >= 0 && static_cast<std::uint64_t>(x) < member_.size() && member_[static_cast<std::size_t>(x)];
  }

  /// Least positive integer not in the set.
  std::uint32_t least_missing() const;

  std::string to_string() const;

  friend bool operator==(const FiniteSet& a, const FiniteSet& b) { return a.elements_ == b.elements_; }

 private:
  std::vector<std::uint32_t> elements_;
  std::vector<bool> member_;
};

}  // namespace gapsets
