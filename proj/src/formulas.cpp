#include "gapsets/formulas.hpp"

#include <stdexcept>

#include "gapsets/census.hpp"
#include "gapsets/gapset.hpp"
#include "gapsets/sequences.hpp"

namespace gapsets {

namespace {

FormulaAnswer answer(std::int64_t v, std::string branch) {
  if (v < 0) throw std::logic_error("formula produced a negative count in branch " + branch);
  return {static_cast<std::uint64_t>(v), std::move(branch)};
}

}  // namespace

// All rational boundaries are compared by cross-multiplying.
FormulaAnswer f_gq3(std::uint32_t g_, std::uint32_t q_) {
  if (g_ < 2) return FormulaAnswer::not_covered("requires g >= 2");
  const std::int64_t g = g_, q = q_;
  if (2 * q < g) return answer(0, "q < g/2");
  if (2 * q == g) return answer(1, "q = g/2");
  if (3 * q <= 2 * g) return answer(2, "(g+1)/2 <= q <= 2g/3");
  if (3 * q == 2 * g + 1) return answer(1, "q = (2g+1)/3");
  return answer(0, "q > (2g+1)/3");
}

FormulaAnswer f_gq4(std::uint32_t g_, std::uint32_t q_) {
  if (g_ < 7) return FormulaAnswer::not_covered("requires g >= 7");
  const std::int64_t g = g_, q = q_;
  if (3 * q < g) return answer(0, "q < g/3");
  if (3 * q == g) return answer(1, "q = g/3");
  if (5 * q <= 2 * g) return answer(3 * (3 * q - g), "g/3 < q <= 2g/5");
  if (5 * q == 2 * g + 1) return answer((3 * g + 4) / 5, "q = (2g+1)/5");
  if (5 * q == 2 * g + 2) return answer((3 * g + 8) / 5, "q = (2g+2)/5");
  if (5 * q == 2 * g + 3) return answer((3 * g + 12) / 5, "q = (2g+3)/5");
  // At g = 8, q = 4 this boundary coincides with q = g/2, which takes precedence.
  if (5 * q == 2 * g + 4 && g != 8) return answer((3 * g + 11) / 5, "q = (2g+4)/5");
  if (5 * q > 2 * g + 4 && 2 * q <= g - 1) return answer((g + 2 * q) / 3 + 2, "(2g+4)/5 < q <= (g-1)/2");
  if (2 * q == g) return answer((2 * g + 3) / 3, "q = g/2");
  if (2 * q == g + 1) return answer(g / 3, "q = (g+1)/2");
  return answer(0, "q > (g+1)/2");
}

std::vector<FormulaAnswer> f_gq_cases(std::uint32_t g_, std::uint32_t q_) {
  const std::int64_t g = g_, q = q_;
  std::vector<FormulaAnswer> out;
  if (g >= 1 && q == 1) out.push_back(answer(1, "ordinary"));
  if (g >= 1 && q == 2) {
    out.push_back({(fibonacci(g + 1) - BigCount(1)).to_u64(), "depth 2: F_{g+1} - 1"});
  }
  if (g >= 23 && 5 * q > 2 * g + 4 && 2 * q <= g - 1) out.push_back(answer((g + 2 * q) / 3 + 2, "(2g+4)/5 < q <= (g-1)/2"));
  if (g >= 8 && g % 2 == 0 && 2 * q == g) out.push_back(answer(2 * g / 3 + 2, "q = g/2"));
  if (g >= 5 && g % 2 == 1 && 2 * q == g + 1) out.push_back(answer(g / 3 + 2, "q = (g+1)/2"));
  if (g >= 1 && 2 * q >= g + 2 && 3 * q <= 2 * g) out.push_back(answer(2, "(g+2)/2 <= q <= 2g/3"));
  if (g >= 4 && g % 3 == 1 && 3 * q == 2 * g + 1) out.push_back(answer(1, "q = (2g+1)/3"));
  if (g >= 5 && g % 3 == 2 && 3 * q == 2 * g + 2) out.push_back(answer(0, "q = (2g+2)/3"));
  if (g >= 1 && q >= static_cast<std::int64_t>(ceil_div(2 * g, 3)) + 1 && q <= g - 1)
    out.push_back(answer(0, "ceil(2g/3) < q < g"));
  // Depth equal to genus: the hyperelliptic gapset (the empty set when g = 0).
  if (q == g) out.push_back(answer(1, "hyperelliptic"));
  if (q > g) out.push_back(answer(0, "q > g"));
  return out;
}

FormulaAnswer f_gq(std::uint32_t g, std::uint32_t q) {
  auto cases = f_gq_cases(g, q);
  if (cases.empty()) return FormulaAnswer::not_covered("no closed form for this (g, q)");
  return cases.front();
}

BigCount lower_bound_depth3(std::uint32_t g) { return fibonacci(g + 2) - padovan(g + 1); }

DepthMultiplicityCounter census_counter(unsigned jobs) {
  return [jobs](std::uint32_t g, std::uint32_t q, std::uint32_t m) {
    return count_gapsets({g, DepthFilter::exact(q), m}, {.jobs = jobs}).count;
  };
}

namespace {

std::uint64_t depth_mult_count(std::uint32_t g, std::uint32_t q, std::uint32_t m, const DepthMultiplicityCounter& counter,
                               const UpperBoundOptions& options) {
  if (options.use_closed_forms) {
    if (m == 2 && g >= 1) return q == g ? 1 : 0;
    if (m == 3) {
      if (auto a = f_gq3(g, q); a.covered()) return *a.value;
    }
    if (m == 4) {
      if (auto a = f_gq4(g, q); a.covered()) return *a.value;
    }
  }
  return counter(g, q, m);
}

BigCount sum_over_depths(std::uint32_t g, std::uint32_t m, std::uint64_t q_lo, std::uint64_t q_hi,
                         const DepthMultiplicityCounter& counter, const UpperBoundOptions& options) {
  BigCount s = 0;
  for (std::uint64_t q = q_lo; q <= q_hi; ++q)
    s += depth_mult_count(g, static_cast<std::uint32_t>(q), m, counter, options);
  return s;
}

void check_bound_args(std::uint32_t g, std::uint32_t M) {
  if (g < 1) throw std::invalid_argument("upper bound: g must be >= 1");
  if (M < 2) throw std::invalid_argument("upper bound: M must be >= 2");
}

}  // namespace

BigCount upper_bound_ng_general(std::uint32_t g, std::uint32_t M, const DepthMultiplicityCounter& counter,
                                UpperBoundOptions options) {
  check_bound_args(g, M);
  const std::uint64_t cut = ceil_div(2ull * g, M + 1ull);
  BigCount bound = bounded_composition_count(g, static_cast<std::int64_t>(cut));
  for (std::uint32_t m = 2; m <= M; ++m) bound += sum_over_depths(g, m, cut + 1, ceil_div(2ull * g, m), counter, options);
  return bound;
}

BigCount upper_bound_ng(std::uint32_t g, std::uint32_t M, const DepthMultiplicityCounter& counter,
                        UpperBoundOptions options) {
  check_bound_args(g, M);
  const std::uint64_t g2 = 2ull * g;
  switch (M) {
    case 2:
      return bounded_composition_count(g, ceil_div(g2, 3)) + BigCount(1);
    case 3: {
      const std::uint64_t half = ceil_div(g, 2);
      return bounded_composition_count(g, half) + sum_over_depths(g, 3, half + 1, ceil_div(g2, 3), counter, options) +
             BigCount(1);
    }
    case 4: {
      const std::uint64_t cut = ceil_div(g2, 5);
      const std::uint64_t half = ceil_div(g, 2);
      return bounded_composition_count(g, cut) + sum_over_depths(g, 4, cut + 1, half, counter, options) +
             sum_over_depths(g, 3, half, ceil_div(g2, 3), counter, options) + BigCount(1);
    }
    default:
      return upper_bound_ng_general(g, M, counter, options);
  }
}

BigCount upper_bound_ng_closed(std::uint32_t g) {
  if (g < 4) throw std::invalid_argument("closed upper bound: g must be >= 4");
  const std::uint64_t gg = g;
  return bounded_composition_count(g, ceil_div(2 * gg, 5)) + BigCount((gg * gg + 6 * gg) / 12) + BigCount(gg / 3) +
         BigCount(2);
}

std::optional<std::uint64_t> multiplicity_count_closed(std::uint32_t m, std::uint32_t g) {
  const std::uint64_t gg = g;
  if (m == 2 && g >= 1) return 1;
  if (m == 3 && g >= 2) return gg / 3 + 1;
  if (m == 4 && g >= 4) return (gg * gg + 6 * gg) / 12;
  return std::nullopt;
}

DepthWindow depth_window(std::uint32_t g, std::uint32_t m) {
  if (g < 1 || m < 2) throw std::invalid_argument("depth_window: requires g >= 1 and m >= 2");
  return {static_cast<std::uint32_t>(ceil_div(g, m - 1)), static_cast<std::uint32_t>(ceil_div(2ull * g, m))};
}

}  // namespace gapsets
