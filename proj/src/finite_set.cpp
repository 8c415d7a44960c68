#include "gapsets/finite_set.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace gapsets {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

FiniteSet::FiniteSet(std::vector<std::uint32_t> elements) : elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] == 0) throw std::invalid_argument("finite set: elements must be positive");
    if (i > 0 && elements_[i] <= elements_[i - 1])
      throw std::invalid_argument("finite set: elements must be strictly increasing");
  }
  member_.assign(static_cast<std::size_t>(max()) + 1, false);
  for (auto e : elements_) member_[e] = true;
}

FiniteSet FiniteSet::from_unsorted(std::vector<std::uint32_t> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return FiniteSet(std::move(elements));
}

FiniteSet FiniteSet::parse(std::string_view text) {
  text = trim(text);
  std::vector<std::uint32_t> out;
  if (text.empty()) return FiniteSet();
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    const auto item = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    std::uint32_t v = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size())
      throw std::invalid_argument("set literal: bad item '" + std::string(item) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return FiniteSet(std::move(out));
}

std::uint32_t FiniteSet::least_missing() const {
  std::uint32_t x = 1;
  while (contains(x)) ++x;
  return x;
}

std::string FiniteSet::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(elements_[i]);
  }
  return s;
}

}  // namespace gapsets
