#include "gapsets/sequences.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace gapsets {

BigCount fibonacci(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("fibonacci: index must be >= 0, got " + std::to_string(n));
  if (n == 0) return 0;
  BigCount a = 0, b = 1;  // F_{i-1}, F_i
  for (std::int64_t i = 1; i < n; ++i) {
    BigCount next = a + b;
    a = b;
    b = next;
  }
  return b;
}

BigCount fibonacci_k(std::int64_t k, std::int64_t n) {
  if (k < 2) throw std::invalid_argument("fibonacci_k: order must be >= 2, got " + std::to_string(k));
  if (n < 2 - k)
    throw std::invalid_argument("fibonacci_k: index " + std::to_string(n) + " below domain start " +
                                std::to_string(2 - k));
  if (n <= 0) return 0;
  if (n == 1) return 1;

  // Ring buffer holding the last k terms; slot (i mod k) stores term i.
  std::vector<BigCount> window(static_cast<std::size_t>(k), BigCount(0));
  auto slot = [k](std::int64_t i) { return static_cast<std::size_t>(((i % k) + k) % k); };
  window[slot(1)] = 1;
  BigCount sum = 1;  // sum of terms i-k .. i-1 for the term i about to be produced
  BigCount term = 1;
  for (std::int64_t i = 2; i <= n; ++i) {
    term = sum;
    if (i == n) break;
    BigCount& oldest = window[slot(i - k)];
    sum = (sum - oldest) + term;
    oldest = term;
  }
  return term;
}

BigCount padovan(std::int64_t n) {
  if (n < -3) throw std::invalid_argument("padovan: index must be >= -3, got " + std::to_string(n));
  // (p3, p2, p1) = (P_{i-3}, P_{i-2}, P_{i-1}) for i = 0.
  BigCount p3 = 1, p2 = 0, p1 = 0;
  if (n == -3) return p3;
  if (n == -2) return p2;
  if (n == -1) return p1;
  for (std::int64_t i = 0;; ++i) {
    BigCount cur = p2 + p3;
    if (i == n) return cur;
    p3 = p2;
    p2 = p1;
    p1 = cur;
  }
}

BigCount padovan_fibonacci_convolution(std::int64_t g) {
  if (g < 0) throw std::invalid_argument("padovan_fibonacci_convolution: g must be >= 0");
  // P_n for n in [-3, g-3] and F_j for j in [1, g+1].
  std::vector<BigCount> pad;
  pad.reserve(static_cast<std::size_t>(g + 1));
  for (std::int64_t n = -3; n <= g - 3; ++n) {
    if (n < 0) {
      pad.push_back(n == -3 ? 1 : 0);
    } else {
      const std::size_t i = pad.size();
      pad.push_back(pad[i - 2] + pad[i - 3]);
    }
  }
  std::vector<BigCount> fib(static_cast<std::size_t>(g + 2));
  fib[0] = 0;
  fib[1] = 1;
  for (std::size_t j = 2; j < fib.size(); ++j) fib[j] = fib[j - 1] + fib[j - 2];

  BigCount total = 0;
  for (std::int64_t n = -3; n <= g - 3; ++n)
    total += pad[static_cast<std::size_t>(n + 3)] * fib[static_cast<std::size_t>(g - 2 - n)];
  return total;
}

BigCount bounded_composition_count(std::int64_t g, std::int64_t max_part) {
  if (g < 0) throw std::invalid_argument("bounded_composition_count: g must be >= 0");
  if (g == 0) return 1;
  if (max_part <= 0) return 0;
  if (max_part == 1) return 1;
  return fibonacci_k(max_part, g + 1);
}

}  // namespace gapsets
