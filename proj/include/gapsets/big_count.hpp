#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gapsets {

/// Exact nonnegative integer backed by unsigned 128-bit arithmetic.
///
/// Every arithmetic operation is checked; a result that does not fit throws
/// std::overflow_error instead of wrapping. Subtraction below zero throws
/// std::domain_error.
class BigCount {
 public:
  using raw_type = unsigned __int128;

  constexpr BigCount() = default;
  constexpr BigCount(std::uint64_t v) : value_(v) {}  // NOLINT: implicit by intent

  static constexpr BigCount from_raw(raw_type v) {
    BigCount c;
    c.value_ = v;
    return c;
  }

  constexpr raw_type raw() const { return value_; }

  BigCount& operator+=(BigCount rhs) {
    if (__builtin_add_overflow(value_, rhs.value_, &value_))
      throw std::overflow_error("BigCount: addition overflows 128 bits");
    return *this;
  }
  BigCount& operator-=(BigCount rhs) {
    if (rhs.value_ > value_)
      throw std::domain_error("BigCount: subtraction would go negative");
    value_ -= rhs.value_;
    return *this;
  }
  BigCount& operator*=(BigCount rhs) {
    if (__builtin_mul_overflow(value_, rhs.value_, &value_))
      throw std::overflow_error("BigCount: multiplication overflows 128 bits");
    return *this;
  }

  friend BigCount operator+(BigCount a, BigCount b) { return a += b; }
  friend BigCount operator-(BigCount a, BigCount b) { return a -= b; }
  friend BigCount operator*(BigCount a, BigCount b) { return a *= b; }

  friend constexpr bool operator==(BigCount a, BigCount b) { return a.value_ == b.value_; }
  friend constexpr std::strong_ordering operator<=>(BigCount a, BigCount b) {
    return a.value_ <=> b.value_;
  }

  bool fits_u64() const { return value_ <= UINT64_MAX; }

  std::uint64_t to_u64() const {
    if (!fits_u64()) throw std::overflow_error("BigCount: value exceeds 64 bits");
    return static_cast<std::uint64_t>(value_);
  }

  std::string to_string() const {
    if (value_ == 0) return "0";
    std::string s;
    for (raw_type v = value_; v != 0; v /= 10) s.insert(s.begin(), char('0' + int(v % 10)));
    return s;
  }

  /// Parses a decimal string of digits; throws std::invalid_argument or
  /// std::overflow_error.
  static BigCount parse(std::string_view text);

 private:
  raw_type value_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, BigCount c) { return os << c.to_string(); }

inline BigCount BigCount::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  BigCount out;
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("not a decimal number: " + std::string(text));
    out *= BigCount(10);
    out += BigCount(static_cast<std::uint64_t>(ch - '0'));
  }
  return out;
}

}  // namespace gapsets
