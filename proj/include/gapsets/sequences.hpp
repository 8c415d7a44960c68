#pragma once

#include <cstdint>

#include "gapsets/big_count.hpp"

namespace gapsets {

/// F_n with F_0 = 0, F_1 = 1. Requires n >= 0.
BigCount fibonacci(std::int64_t n);

/// k-generalized Fibonacci number F^{(k)}_n: F^{(k)}_1 = 1, F^{(k)}_i = 0 for
/// i in [-k+2, 0], and each later term is the sum of the k preceding ones.
/// Requires k >= 2 and n >= -k+2.
BigCount fibonacci_k(std::int64_t k, std::int64_t n);

/// Padovan number P_n with P_{-3} = 1, P_{-2} = P_{-1} = 0. Requires n >= -3.
BigCount padovan(std::int64_t n);

/// Sum over n in [-3, g-3] of P_n * F_{g-2-n}, evaluated term by term.
BigCount padovan_fibonacci_convolution(std::int64_t g);

/// Number of compositions of g whose parts are all <= max_part, i.e.
/// F^{(k)}_{g+1} extended to k = 1 (one composition, all ones). g >= 0.
BigCount bounded_composition_count(std::int64_t g, std::int64_t max_part);

}  // namespace gapsets
