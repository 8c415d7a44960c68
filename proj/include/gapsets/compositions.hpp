#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gapsets/gapset.hpp"

namespace gapsets {

/// An ordered list of positive parts; equivalently a tiling of a board whose
/// length is the total.
class Composition {
 public:
  /// Throws std::invalid_argument if `parts` is empty or contains a zero.
  explicit Composition(std::vector<std::uint32_t> parts);

  /// Parses "(4,1)"; the parentheses are optional.
  static Composition parse(std::string_view text);

  std::span<const std::uint32_t> parts() const { return parts_; }
  std::uint32_t total() const { return total_; }
  std::uint32_t largest_part() const;

  std::string to_string() const;

  friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<std::uint32_t> parts_;
  std::uint32_t total_ = 0;
};

struct CompositionFilter {
  /// Every part is <= max_part when set.
  std::optional<std::uint32_t> max_part;
  /// Exactly this many parts when set.
  std::optional<std::uint32_t> part_count;
  /// Only compositions whose first part equals this value (one shard).
  std::optional<std::uint32_t> first_part;
};

/// Incremental generator of the compositions of `total` satisfying a filter,
/// in lexicographic order of the part list. Memory is O(total).
///
///   CompositionStream s(5, {.max_part = 2});
///   while (s.next()) use(s.parts());
class CompositionStream {
 public:
  /// Throws std::invalid_argument when total == 0 or max_part == 0.
  CompositionStream(std::uint32_t total, CompositionFilter filter = {});

  /// Advances to the next composition; false once the stream is exhausted.
  bool next();

  /// Valid after next() returned true.
  std::span<const std::uint32_t> parts() const { return parts_; }
  Composition current() const { return Composition(parts_); }

 private:
  bool fill_from(std::uint32_t remaining);
  bool completion_feasible(std::uint32_t remaining, std::size_t parts_so_far) const;
  std::uint32_t min_first_of_completion(std::uint32_t remaining, std::size_t parts_so_far) const;

  std::uint32_t total_;
  std::uint32_t max_part_;
  std::optional<std::uint32_t> part_count_;
  std::optional<std::uint32_t> first_part_;
  std::vector<std::uint32_t> parts_;
  bool started_ = false;
  bool done_ = false;
};

/// Number of compositions produced by a stream with the given filter,
/// obtained by running it.
std::uint64_t stream_length(std::uint32_t total, CompositionFilter filter = {});

/// The tiling attached to an m-extension: its pseudo Kunz coordinates.
Composition sigma(const MExtension& a);

/// Inverse of sigma: the (n+1)-extension whose pseudo Kunz vector is the
/// n-part composition.
MExtension sigma_inverse(const Composition& c);

}  // namespace gapsets
