#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gapsets/big_count.hpp"

namespace gapsets {

/// Result of a piecewise closed formula: a value when (g, q) lies inside the
/// formula's hypotheses, plus the name of the case that produced it.
struct FormulaAnswer {
  std::optional<std::uint64_t> value;
  std::string branch;

  bool covered() const { return value.has_value(); }
  static FormulaAnswer not_covered(std::string why) { return {std::nullopt, std::move(why)}; }
};

/// Number of gapsets of genus g, depth q, multiplicity 3. Defined for g >= 2.
FormulaAnswer f_gq3(std::uint32_t g, std::uint32_t q);

/// Number of gapsets of genus g, depth q, multiplicity 4. Defined for g >= 7;
/// smaller genera are left to the census.
FormulaAnswer f_gq4(std::uint32_t g, std::uint32_t q);

/// Number of gapsets of genus g and depth q, for the (g, q) pairs where a
/// closed form is known; not covered elsewhere. When several cases apply
/// they agree, and the first in the fixed case order is reported.
FormulaAnswer f_gq(std::uint32_t g, std::uint32_t q);

/// Every case of f_gq whose hypotheses hold at (g, q).
std::vector<FormulaAnswer> f_gq_cases(std::uint32_t g, std::uint32_t q);

/// F_{g+2} - P_{g+1}: lower bound for gapsets of genus g and depth <= 3.
BigCount lower_bound_depth3(std::uint32_t g);

/// Source of exact counts #F(g, q, m): gapsets of genus g, depth q and
/// multiplicity m.
using DepthMultiplicityCounter = std::function<std::uint64_t(std::uint32_t g, std::uint32_t q, std::uint32_t m)>;

/// Counter backed by an exhaustive census.
DepthMultiplicityCounter census_counter(unsigned jobs = 1);

struct UpperBoundOptions {
  /// Take #F(g,q,2), #F(g,q,3) and #F(g,q,4) from the closed formulas wherever
  /// their hypotheses hold instead of asking the counter.
  bool use_closed_forms = false;
};

/// Upper bound on n_g with cutoff M >= 2. For M in {2, 3, 4} this is the
/// simplified instantiation in which the multiplicity-2 sum is replaced by
/// the single hyperelliptic gapset (+1); for M >= 5 it is the general double
/// sum over m in [2, M] and q in [ceil(2g/(M+1)) + 1, ceil(2g/m)].
BigCount upper_bound_ng(std::uint32_t g, std::uint32_t M, const DepthMultiplicityCounter& counter,
                        UpperBoundOptions options = {});

/// The general double-sum bound, for every M >= 2.
BigCount upper_bound_ng_general(std::uint32_t g, std::uint32_t M, const DepthMultiplicityCounter& counter,
                                UpperBoundOptions options = {});

/// F^{(ceil(2g/5))}_{g+1} + floor((g^2 + 6g)/12) + floor(g/3) + 2, for g >= 4.
BigCount upper_bound_ng_closed(std::uint32_t g);

/// Closed forms for N(m, g), the number of gapsets of multiplicity m and
/// genus g: N(2,g) = 1 (g >= 1), N(3,g) = floor(g/3) + 1 (g >= 2),
/// N(4,g) = floor((g^2 + 6g)/12) (g >= 4). nullopt outside those ranges.
std::optional<std::uint64_t> multiplicity_count_closed(std::uint32_t m, std::uint32_t g);

struct DepthWindow {
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;
  bool contains(std::uint32_t q) const { return lo <= q && q <= hi; }
  friend bool operator==(const DepthWindow&, const DepthWindow&) = default;
};

/// [ceil(g/(m-1)), ceil(2g/m)]: the possible depths of a gapset of genus g
/// and multiplicity m. Requires g >= 1, m >= 2.
DepthWindow depth_window(std::uint32_t g, std::uint32_t m);

}  // namespace gapsets
