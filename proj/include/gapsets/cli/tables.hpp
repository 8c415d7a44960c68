#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gapsets::cli {

enum class Format { plain, json, csv, markdown };

Format parse_format(const std::string& name);

struct Cell {
  std::string text;
  /// Value also given by a closed formula; rendered as **x** in markdown
  /// and *x* in plain text.
  bool emphasized = false;
};

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string render(const Table& t, Format format);

/// Row g in [0, gmax]: g, 2F_g, F_{g+2} - P_{g+1}, n'_{g-1} + n'_{g-2}, n'_g, n_g.
Table lower_bounds_table(std::uint32_t gmax, unsigned jobs = 1);

/// Rows q, columns g in [3, gmax]: #F(g, q, 4), followed by an N(4, g) footer.
Table multiplicity4_table(std::uint32_t gmax, unsigned jobs = 1);

/// Row g in [1, gmax]: g, n_g, upper bounds for M = 4, 3, 2, and 2^{g-1}.
Table upper_bounds_table(std::uint32_t gmax, unsigned jobs = 1);

/// Row g in [0, gmax]: #F(g, q) for q = 0..3, n'_g, q = 4..gmax, n_g.
/// Entries covered by a closed formula are emphasized; a formula value that
/// disagrees with the census throws std::logic_error.
Table depth_table(std::uint32_t gmax, unsigned jobs = 1);

}  // namespace gapsets::cli
