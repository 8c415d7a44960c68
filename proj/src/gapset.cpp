#include "gapsets/gapset.hpp"

#include <cassert>
#include <stdexcept>

namespace gapsets {

std::string GapsetRejection::describe() const {
  return "not a gapset: " + std::to_string(z) + " = " + std::to_string(x) + " + " + std::to_string(y) +
         " with neither summand in the set";
}

std::variant<GapSet, GapsetRejection> classify_gapset(const FiniteSet& s) {
  for (const std::uint32_t z : s.elements()) {
    for (std::uint32_t x = 1; x <= z / 2; ++x) {
      const std::uint32_t y = z - x;
      if (!s.contains(x) && !s.contains(y)) return GapsetRejection{z, x, y};
    }
  }
  return GapSet(s);
}

std::string MExtensionRejection::describe(std::uint32_t m) const {
  const auto ms = std::to_string(m);
  const auto v = std::to_string(value);
  switch (reason) {
    case Reason::missing_base:
      return "not a " + ms + "-extension: " + v + " in [1," + std::to_string(m - 1) + "] is missing";
    case Reason::multiple_of_modulus:
      return "not a " + ms + "-extension: " + v + " is a multiple of " + ms;
    case Reason::missing_predecessor:
      return "not a " + ms + "-extension: " + v + " is present but " + std::to_string(value - m) + " is not";
  }
  return "not a " + ms + "-extension";
}

std::variant<MExtension, MExtensionRejection> classify_m_extension(const FiniteSet& s, std::uint32_t m) {
  using Reason = MExtensionRejection::Reason;
  if (m < 2) throw std::invalid_argument("m-extension modulus must be > 1, got " + std::to_string(m));
  for (std::uint32_t i = 1; i < m; ++i)
    if (!s.contains(i)) return MExtensionRejection{Reason::missing_base, i};
  for (const std::uint32_t a : s.elements())
    if (a % m == 0) return MExtensionRejection{Reason::multiple_of_modulus, a};
  for (const std::uint32_t a : s.elements())
    if (a > m && !s.contains(a - m)) return MExtensionRejection{Reason::missing_predecessor, a};
  return MExtension(s, m);
}

MExtension make_m_extension_unchecked(FiniteSet s, std::uint32_t m) {
  assert(std::holds_alternative<MExtension>(classify_m_extension(s, m)));
  return MExtension(std::move(s), m);
}

bool is_gapset_also(const MExtension& a) {
  return std::holds_alternative<GapSet>(classify_gapset(a.elements()));
}

}  // namespace gapsets
