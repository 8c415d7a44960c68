#include "gapsets/kunz.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace gapsets {

KunzVector::KunzVector(std::uint32_t m, std::vector<std::uint32_t> coords)
    : modulus_(m), coords_(std::move(coords)) {
  if (m < 2) throw std::invalid_argument("Kunz vector: modulus must be >= 2");
  if (coords_.size() != m - 1)
    throw std::invalid_argument("Kunz vector: expected " + std::to_string(m - 1) + " coordinates for m = " +
                                std::to_string(m) + ", got " + std::to_string(coords_.size()));
  for (auto k : coords_)
    if (k == 0) throw std::invalid_argument("Kunz vector: coordinates must be >= 1");
}

KunzVector KunzVector::from_coords(std::vector<std::uint32_t> coords) {
  const auto m = static_cast<std::uint32_t>(coords.size() + 1);
  return KunzVector(m, std::move(coords));
}

KunzVector KunzVector::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("Kunz vector: expected 'm:k1,...'");
  std::uint32_t m = 0;
  const auto head = text.substr(0, colon);
  const auto [end, ec] = std::from_chars(head.data(), head.data() + head.size(), m);
  if (head.empty() || ec != std::errc() || end != head.data() + head.size())
    throw std::invalid_argument("Kunz vector: bad modulus '" + std::string(head) + "'");

  std::vector<std::uint32_t> coords;
  auto rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto item = rest.substr(0, comma);
    std::uint32_t k = 0;
    const auto [e, err] = std::from_chars(item.data(), item.data() + item.size(), k);
    if (item.empty() || err != std::errc() || e != item.data() + item.size())
      throw std::invalid_argument("Kunz vector: bad coordinate '" + std::string(item) + "'");
    coords.push_back(k);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
    if (rest.empty()) throw std::invalid_argument("Kunz vector: trailing comma");
  }
  return KunzVector(m, std::move(coords));
}

std::uint32_t KunzVector::genus() const { return std::accumulate(coords_.begin(), coords_.end(), 0u); }

std::uint32_t KunzVector::depth() const { return *std::max_element(coords_.begin(), coords_.end()); }

std::string KunzVector::to_string() const {
  std::string s = std::to_string(modulus_) + ":";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords_[i]);
  }
  return s;
}

AperySet pseudo_apery(const MExtension& a) {
  const std::uint32_t m = a.modulus();
  AperySet out{m, std::vector<std::uint64_t>(m, 0)};
  // Elements are increasing, so the last one seen in each class is its max.
  for (const auto e : a.elements().elements()) out.w[e % m] = std::uint64_t(m) + e;
  out.w[0] = 0;
  return out;
}

KunzVector pseudo_kunz(const MExtension& a) {
  const std::uint32_t m = a.modulus();
  std::vector<std::uint32_t> coords(m - 1, 0);
  for (const auto e : a.elements().elements()) ++coords[e % m - 1];
#ifndef NDEBUG
  const AperySet ap = pseudo_apery(a);
  for (std::uint32_t i = 1; i < m; ++i) assert((ap.w[i] - i) / m == coords[i - 1]);
#endif
  return KunzVector(m, std::move(coords));
}

MExtension from_kunz(const KunzVector& v) {
  const std::uint32_t m = v.modulus();
  std::vector<std::uint32_t> elems;
  elems.reserve(v.genus());
  for (std::uint32_t i = 1; i < m; ++i)
    for (std::uint32_t j = 0; j < v[i]; ++j) elems.push_back(i + j * m);
  std::sort(elems.begin(), elems.end());
  return make_m_extension_unchecked(FiniteSet(std::move(elems)), m);
}

std::optional<KunzViolation> find_kunz_violation(std::span<const std::uint32_t> k) {
  const auto m = static_cast<std::uint32_t>(k.size() + 1);
  // k[i - 1] holds k_i.
  for (std::uint32_t i = 1; i < m; ++i) {
    const std::uint32_t ki = k[i - 1];
    for (std::uint32_t j = i; j < m; ++j) {
      const std::uint32_t sum = ki + k[j - 1];
      if (i + j < m) {
        if (sum < k[i + j - 1]) return KunzViolation{i, j};
      } else if (i + j > m) {
        if (sum + 1 < k[i + j - m - 1]) return KunzViolation{i, j};
      }
    }
  }
  return std::nullopt;
}

}  // namespace gapsets
