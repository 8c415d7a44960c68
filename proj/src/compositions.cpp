#include "gapsets/compositions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "gapsets/kunz.hpp"

namespace gapsets {

Composition::Composition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("composition: needs at least one part");
  for (auto p : parts_) {
    if (p == 0) throw std::invalid_argument("composition: parts must be positive");
    total_ += p;
  }
}

Composition Composition::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw std::invalid_argument("composition: unbalanced parenthesis");
    text = text.substr(1, text.size() - 2);
  }
  std::vector<std::uint32_t> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    auto item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    std::uint32_t v = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size())
      throw std::invalid_argument("composition: bad part '" + std::string(item) + "'");
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Composition(std::move(parts));
}

std::uint32_t Composition::largest_part() const { return *std::max_element(parts_.begin(), parts_.end()); }

std::string Composition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

CompositionStream::CompositionStream(std::uint32_t total, CompositionFilter filter)
    : total_(total),
      max_part_(filter.max_part.value_or(total)),
      part_count_(filter.part_count),
      first_part_(filter.first_part) {
  if (total == 0) throw std::invalid_argument("compositions: total must be >= 1");
  if (filter.max_part && *filter.max_part == 0) throw std::invalid_argument("compositions: max_part must be >= 1");
  parts_.reserve(total);
}

bool CompositionStream::completion_feasible(std::uint32_t remaining, std::size_t parts_so_far) const {
  if (!part_count_) return true;
  if (*part_count_ < parts_so_far) return false;
  const std::uint64_t slots = *part_count_ - parts_so_far;
  if (remaining == 0) return slots == 0;
  return slots >= 1 && slots <= remaining && remaining <= slots * max_part_;
}

std::uint32_t CompositionStream::min_first_of_completion(std::uint32_t remaining, std::size_t parts_so_far) const {
  if (!part_count_) return 1;
  const std::uint64_t rest_slots = *part_count_ - parts_so_far - 1;
  const std::uint64_t rest_capacity = rest_slots * max_part_;
  return remaining > rest_capacity ? static_cast<std::uint32_t>(remaining - rest_capacity) : 1u;
}

bool CompositionStream::fill_from(std::uint32_t remaining) {
  while (remaining > 0) {
    const std::uint32_t v = min_first_of_completion(remaining, parts_.size());
    parts_.push_back(v);
    remaining -= v;
  }
  return true;
}

bool CompositionStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (first_part_) {
      const std::uint32_t v = *first_part_;
      if (v == 0 || v > max_part_ || v > total_ || !completion_feasible(total_ - v, 1)) {
        done_ = true;
        return false;
      }
      parts_.push_back(v);
      return fill_from(total_ - v);
    }
    if (!completion_feasible(total_, 0)) {
      done_ = true;
      return false;
    }
    return fill_from(total_);
  }

  const std::size_t locked = first_part_ ? 1 : 0;
  std::uint32_t remaining = 0;
  while (parts_.size() > locked) {
    const std::uint32_t p = parts_.back();
    parts_.pop_back();
    remaining += p;
    const std::uint32_t hi = std::min(max_part_, remaining);
    for (std::uint32_t v = p + 1; v <= hi; ++v) {
      if (completion_feasible(remaining - v, parts_.size() + 1)) {
        parts_.push_back(v);
        return fill_from(remaining - v);
      }
    }
  }
  done_ = true;
  return false;
}

std::uint64_t stream_length(std::uint32_t total, CompositionFilter filter) {
  CompositionStream s(total, filter);
  std::uint64_t n = 0;
  while (s.next()) ++n;
  return n;
}

Composition sigma(const MExtension& a) {
  const KunzVector v = pseudo_kunz(a);
  return Composition(std::vector<std::uint32_t>(v.coords().begin(), v.coords().end()));
}

MExtension sigma_inverse(const Composition& c) {
  return from_kunz(KunzVector::from_coords(std::vector<std::uint32_t>(c.parts().begin(), c.parts().end())));
}

}  // namespace gapsets
