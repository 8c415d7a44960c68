#include <stdexcept>

#include "doctest.h"
#include "gapsets/census.hpp"
#include "gapsets/formulas.hpp"
#include "gapsets/sequences.hpp"
#include "reference_tables.hpp"

using namespace gapsets;

namespace {

std::uint64_t census(std::uint32_t g, std::uint32_t q, std::optional<std::uint32_t> m = std::nullopt) {
  return count_gapsets({g, DepthFilter::exact(q), m}).count;
}

const DepthMultiplicityCounter kCounter = census_counter();

}  // namespace

TEST_CASE("multiplicity 3 formula") {
  CHECK(f_gq3(12, 6).value == 1u);
  CHECK(f_gq3(5, 3).value == 2u);
  CHECK(f_gq3(7, 5).value == 1u);
  CHECK_FALSE(f_gq3(1, 1).covered());
  for (std::uint32_t g = 2; g <= 40; ++g)
    for (std::uint32_t q = 1; q <= g; ++q) {
      CAPTURE(g);
      CAPTURE(q);
      REQUIRE(f_gq3(g, q).value == census(g, q, 3));
    }
}

TEST_CASE("multiplicity 4 formula") {
  CHECK(f_gq4(8, 4).value == 6u);
  CHECK(f_gq4(8, 4).branch == "q = g/2");
  CHECK(f_gq4(12, 5).value == 8u);
  CHECK(f_gq4(12, 4).value == 1u);
  CHECK(f_gq4(11, 5).value == 9u);
  for (std::uint32_t g = 0; g < 7; ++g) CHECK_FALSE(f_gq4(g, 2).covered());
  for (std::uint32_t g = 7; g <= 30; ++g)
    for (std::uint32_t q = 1; q <= g; ++q) {
      CAPTURE(g);
      CAPTURE(q);
      REQUIRE(f_gq4(g, q).value == census(g, q, 4));
    }
}

TEST_CASE("multiplicity 4 formula reproduces the reference grid where it applies") {
  for (std::uint32_t g = 7; g <= 12; ++g)
    for (std::uint32_t q = 1; q <= 6; ++q) CHECK(f_gq4(g, q).value == reference::kMultiplicity4[q - 1][g - 3]);
}

TEST_CASE("depth formula on examples") {
  CHECK(f_gq(16, 8).value == 12u);
  CHECK(f_gq(15, 8).value == 7u);
  CHECK(f_gq(16, 11).value == 1u);
  CHECK(f_gq(10, 10).value == 1u);
  CHECK(f_gq(0, 0).value == 1u);
  CHECK_FALSE(f_gq(10, 3).covered());
}

TEST_CASE("depth formula covers every marked entry and agrees with the census (g <= 18)") {
  for (const auto& e : reference::kDepthCounts) {
    if (!e.covered) continue;
    CAPTURE(e.g);
    CAPTURE(e.q);
    const auto a = f_gq(e.g, e.q);
    REQUIRE(a.covered());
    CHECK(*a.value == e.count);
  }
  for (std::uint32_t g = 0; g <= 18; ++g)
    for (std::uint32_t q = 0; q <= g + 2; ++q) {
      const auto truth = census(g, q);
      for (const auto& c : f_gq_cases(g, q)) {
        CAPTURE(g);
        CAPTURE(q);
        CAPTURE(c.branch);
        REQUIRE(c.value == truth);
      }
    }
}

TEST_CASE("depth 2 count is F_{g+1} - 1") {
  for (std::uint32_t g = 2; g <= 18; ++g) {
    const BigCount expected = fibonacci(g + 1) - BigCount(1);
    CHECK(BigCount(*f_gq(g, 2).value) == expected);
    CHECK(BigCount(census(g, 2)) == expected);
  }
}

TEST_CASE("lower bounds table") {
  for (const auto& row : reference::kLowerBounds) {
    CAPTURE(row.g);
    CHECK(lower_bound_depth3(row.g) == BigCount(row.fib_minus_padovan));
    if (row.twice_fibonacci >= 0) CHECK(BigCount(2) * fibonacci(row.g) == BigCount(static_cast<std::uint64_t>(row.twice_fibonacci)));
    if (row.previous_two_sum >= 0)
      CHECK(count_gapsets_depth_at_most(row.g - 1, 3) + count_gapsets_depth_at_most(row.g - 2, 3) ==
            static_cast<std::uint64_t>(row.previous_two_sum));
    CHECK(count_gapsets_depth_at_most(row.g, 3) == row.n_prime);
    CHECK(count_gapsets({row.g, DepthFilter::any(), std::nullopt}).count == row.n);
  }
  CHECK(lower_bound_depth3(6) == BigCount(18));
  CHECK(lower_bound_depth3(10) == BigCount(135));
  CHECK(lower_bound_depth3(0) == BigCount(1));
}

TEST_CASE("upper bounds table") {
  CHECK(upper_bound_ng(10, 4, kCounter) == BigCount(413));
  CHECK(upper_bound_ng(7, 3, kCounter) == BigCount(58));
  CHECK(upper_bound_ng(5, 2, kCounter) == BigCount(16));
  for (const auto& row : reference::kUpperBounds) {
    CAPTURE(row.g);
    CHECK(upper_bound_ng(row.g, 4, kCounter) == BigCount(row.m4));
    CHECK(upper_bound_ng(row.g, 3, kCounter) == BigCount(row.m3));
    CHECK(upper_bound_ng(row.g, 2, kCounter) == BigCount(row.m2));
    CHECK(BigCount(count_m_extensions(row.g)) == BigCount(row.all_extensions));
  }
  CHECK_THROWS_AS(upper_bound_ng(0, 3, kCounter), std::invalid_argument);
  CHECK_THROWS_AS(upper_bound_ng(5, 1, kCounter), std::invalid_argument);
}

TEST_CASE("upper bounds dominate n_g for every cutoff (g <= 18)") {
  for (std::uint32_t g = 1; g <= 18; ++g) {
    const BigCount n = BigCount(reference::kGenusCounts[g]);
    for (std::uint32_t M = 2; M <= 8; ++M) {
      CAPTURE(g);
      CAPTURE(M);
      CHECK(n <= upper_bound_ng(g, M, kCounter));
      CHECK(n <= upper_bound_ng_general(g, M, kCounter));
    }
  }
}

TEST_CASE("closed-form counts give the same bounds as the census") {
  for (std::uint32_t g = 1; g <= 16; ++g)
    for (std::uint32_t M = 2; M <= 6; ++M)
      CHECK(upper_bound_ng(g, M, kCounter, {.use_closed_forms = true}) == upper_bound_ng(g, M, kCounter));
}

TEST_CASE("sandwich of bounds (g <= 18)") {
  for (std::uint32_t g = 0; g <= 18; ++g) {
    const BigCount lower = lower_bound_depth3(g);
    const BigCount n_prime = BigCount(count_gapsets_depth_at_most(g, 3));
    const BigCount n = BigCount(count_gapsets({g, DepthFilter::any(), std::nullopt}).count);
    CHECK(lower <= n_prime);
    CHECK(n_prime <= n);
    if (g == 0) continue;
    CHECK(n <= BigCount(std::uint64_t{1} << (g - 1)));
    for (std::uint32_t M = 2; M <= 4; ++M) CHECK(n <= upper_bound_ng(g, M, kCounter));
  }
}

TEST_CASE("closed upper bound") {
  CHECK(upper_bound_ng_closed(10) == BigCount(419));
  CHECK(upper_bound_ng_closed(4) == BigCount(11));
  CHECK_THROWS_AS(upper_bound_ng_closed(3), std::invalid_argument);
  for (std::uint32_t g = 4; g <= 18; ++g) CHECK(upper_bound_ng_closed(g) >= BigCount(reference::kGenusCounts[g]));
}

TEST_CASE("closed forms for the number of gapsets of small multiplicity") {
  for (std::uint32_t g = 1; g <= 18; ++g) {
    const GenusCensus grid = census_grid(g);
    for (std::uint32_t m = 2; m <= 4; ++m) {
      if (auto n = multiplicity_count_closed(m, g)) {
        CAPTURE(g);
        CAPTURE(m);
        CHECK(*n == grid.count_multiplicity(m));
      }
    }
  }
  CHECK_FALSE(multiplicity_count_closed(4, 3).has_value());
  CHECK_FALSE(multiplicity_count_closed(5, 10).has_value());
}

TEST_CASE("depth windows") {
  CHECK(depth_window(12, 4) == DepthWindow{4, 6});
  CHECK(depth_window(5, 2) == DepthWindow{5, 5});
  CHECK(depth_window(11, 3) == DepthWindow{6, 8});
  CHECK_THROWS_AS(depth_window(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(depth_window(4, 1), std::invalid_argument);
  for (std::uint32_t q = 1; q <= 11; ++q) {
    if (census(11, q, 3) > 0) CHECK(depth_window(11, 3).contains(q));
    CHECK((census(11, q, 3) > 0) == (q == 6 || q == 7));
  }
  for (std::uint32_t q = 1; q <= 12; ++q) CHECK((census(12, q, 4) > 0) == depth_window(12, 4).contains(q));
}

TEST_CASE("the lower end of the depth window is attained (m <= 8, g <= 20)") {
  for (std::uint32_t m = 2; m <= 8; ++m)
    for (std::uint32_t g = m - 1; g <= 20; ++g) {
      CAPTURE(g);
      CAPTURE(m);
      CHECK(census(g, depth_window(g, m).lo, m) > 0);
    }
}
