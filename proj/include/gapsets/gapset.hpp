#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "gapsets/finite_set.hpp"

namespace gapsets {

/// ceil(a / b) for a >= 0, b > 0.
constexpr std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

class GapSet;
class MExtension;
struct GapsetRejection;
struct MExtensionRejection;

std::variant<GapSet, GapsetRejection> classify_gapset(const FiniteSet& s);
std::variant<MExtension, MExtensionRejection> classify_m_extension(const FiniteSet& s, std::uint32_t m);
MExtension make_m_extension_unchecked(FiniteSet s, std::uint32_t m);

/// A finite set G of positive integers such that whenever z = x + y is in G
/// (x, y >= 1), x or y is in G. The empty set is a gapset with genus 0,
/// conductor 0, depth 0 and multiplicity 1.
class GapSet {
 public:
  const FiniteSet& elements() const { return set_; }
  std::uint32_t genus() const { return static_cast<std::uint32_t>(set_.size()); }
  std::uint32_t multiplicity() const { return multiplicity_; }
  std::uint32_t conductor() const { return set_.empty() ? 0 : set_.max() + 1; }
  std::uint32_t depth() const {
    return static_cast<std::uint32_t>(ceil_div(conductor(), multiplicity_));
  }

  friend bool operator==(const GapSet& a, const GapSet& b) { return a.set_ == b.set_; }

 private:
  friend std::variant<GapSet, GapsetRejection> classify_gapset(const FiniteSet&);
  explicit GapSet(FiniteSet s) : set_(std::move(s)), multiplicity_(set_.least_missing()) {}

  FiniteSet set_;
  std::uint32_t multiplicity_ = 1;
};

/// Witness that a set is not a gapset: z is in the set, z = x + y and
/// neither x nor y is.
struct GapsetRejection {
  std::uint32_t z = 0;
  std::uint32_t x = 0;
  std::uint32_t y = 0;

  std::string describe() const;
  friend bool operator==(const GapsetRejection&, const GapsetRejection&) = default;
};

/// Checks the defining decomposition property directly (no Kunz coordinates).
/// On rejection the witness is the smallest violating z and, for that z, the
/// decomposition with the smallest x.
std::variant<GapSet, GapsetRejection> classify_gapset(const FiniteSet& s);

/// A finite set A with modulus m > 1 that contains [1, m-1], has no element
/// divisible by m, and contains a - m for every element a > m.
class MExtension {
 public:
  const FiniteSet& elements() const { return set_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t genus() const { return static_cast<std::uint32_t>(set_.size()); }
  std::uint32_t conductor() const { return set_.empty() ? 0 : set_.max() + 1; }
  std::uint32_t depth() const { return static_cast<std::uint32_t>(ceil_div(conductor(), modulus_)); }

  friend bool operator==(const MExtension& a, const MExtension& b) {
    return a.modulus_ == b.modulus_ && a.set_ == b.set_;
  }

 private:
  friend std::variant<MExtension, MExtensionRejection> classify_m_extension(const FiniteSet&, std::uint32_t);
  friend MExtension make_m_extension_unchecked(FiniteSet, std::uint32_t);
  MExtension(FiniteSet s, std::uint32_t m) : set_(std::move(s)), modulus_(m) {}

  FiniteSet set_;
  std::uint32_t modulus_ = 2;
};

struct MExtensionRejection {
  enum class Reason {
    missing_base,         // some i in [1, m-1] is absent; value = i
    multiple_of_modulus,  // value is an element divisible by m
    missing_predecessor,  // value is an element a > m with a - m absent
  };
  Reason reason = Reason::missing_base;
  std::uint32_t value = 0;

  std::string describe(std::uint32_t m) const;
  friend bool operator==(const MExtensionRejection&, const MExtensionRejection&) = default;
};

/// Conditions are tested in the order listed in Reason, each reporting the
/// smallest offending value. Throws std::invalid_argument when m < 2.
std::variant<MExtension, MExtensionRejection> classify_m_extension(const FiniteSet& s, std::uint32_t m);

/// Builds an MExtension from a set the caller has constructed to satisfy
/// the conditions. Checked with assert in debug builds.
MExtension make_m_extension_unchecked(FiniteSet s, std::uint32_t m);

bool is_gapset_also(const MExtension& a);

}  // namespace gapsets
