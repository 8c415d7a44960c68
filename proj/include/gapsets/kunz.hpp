#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gapsets/gapset.hpp"

namespace gapsets {

/// Pseudo Apéry set of an m-extension: w[0] = 0 and, for each residue
/// i in [1, m-1], w[i] = m + (largest element congruent to i mod m).
struct AperySet {
  std::uint32_t modulus = 2;
  std::vector<std::uint64_t> w;

  friend bool operator==(const AperySet&, const AperySet&) = default;
};

/// Modulus m together with coordinates (k_1, ..., k_{m-1}), all >= 1.
class KunzVector {
 public:
  /// Throws std::invalid_argument if m < 2, coords.size() != m - 1 or any
  /// coordinate is zero.
  KunzVector(std::uint32_t m, std::vector<std::uint32_t> coords);

  /// The modulus is one more than the number of coordinates.
  static KunzVector from_coords(std::vector<std::uint32_t> coords);

  /// Parses "m:k1,k2,...,k_{m-1}".
  static KunzVector parse(std::string_view text);

  std::uint32_t modulus() const { return modulus_; }
  std::span<const std::uint32_t> coords() const { return coords_; }
  /// k_i for i in [1, m-1].
  std::uint32_t operator[](std::uint32_t i) const { return coords_[i - 1]; }

  std::uint32_t genus() const;
  std::uint32_t depth() const;

  std::string to_string() const;

  friend bool operator==(const KunzVector&, const KunzVector&) = default;
  friend auto operator<=>(const KunzVector&, const KunzVector&) = default;

 private:
  std::uint32_t modulus_;
  std::vector<std::uint32_t> coords_;
};

AperySet pseudo_apery(const MExtension& a);

/// k_i is the number of elements of A congruent to i mod m.
KunzVector pseudo_kunz(const MExtension& a);

/// The unique m-extension whose pseudo Kunz vector is v: the union over i of
/// {i, i+m, ..., i+(k_i-1)m}.
MExtension from_kunz(const KunzVector& v);

/// Violated inequality (i, j), i <= j, of the Kunz system.
struct KunzViolation {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  friend bool operator==(const KunzViolation&, const KunzViolation&) = default;
};

/// Checks, for 1 <= i <= j <= m-1:
///   i + j < m  =>  k_i + k_j >= k_{i+j}
///   i + j > m  =>  k_i + k_j + 1 >= k_{i+j-m}
/// Returns the lexicographically least violated pair, or nullopt when the
/// system holds. Pairs with i + j = m carry no constraint.
std::optional<KunzViolation> find_kunz_violation(std::span<const std::uint32_t> coords);

inline bool satisfies_kunz_system(std::span<const std::uint32_t> coords) {
  return !find_kunz_violation(coords).has_value();
}
inline bool satisfies_kunz_system(const KunzVector& v) { return satisfies_kunz_system(v.coords()); }

}  // namespace gapsets
