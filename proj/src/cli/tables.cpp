#include "gapsets/cli/tables.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "gapsets/census.hpp"
#include "gapsets/formulas.hpp"
#include "gapsets/sequences.hpp"
#include "json.hpp"

namespace gapsets::cli {

Format parse_format(const std::string& name) {
  if (name == "plain") return Format::plain;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "markdown") return Format::markdown;
  throw std::invalid_argument("unknown format '" + name + "'");
}

namespace {

std::string cell_text(const Cell& c, Format f) {
  if (!c.emphasized || c.text.empty()) return c.text;
  if (f == Format::markdown) return "**" + c.text + "**";
  if (f == Format::plain) return "*" + c.text + "*";
  return c.text;
}

std::string render_json(const Table& t) {
  using nlohmann::json;
  json rows = json::array();
  json emphasized = json::array();
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
      const auto& cell = t.rows[r][c];
      if (cell.text.empty()) {
        row.push_back(nullptr);
      } else if (std::all_of(cell.text.begin(), cell.text.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
        row.push_back(json::parse(cell.text));
      } else {
        row.push_back(cell.text);
      }
      if (cell.emphasized) emphasized.push_back({r, c});
    }
    rows.push_back(std::move(row));
  }
  return json{{"table", t.name}, {"columns", t.columns}, {"rows", rows}, {"formula_covered", emphasized}}.dump() +
         "\n";
}

}  // namespace

std::string render(const Table& t, Format format) {
  if (format == Format::json) return render_json(t);
  std::ostringstream out;
  if (format == Format::csv) {
    for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << t.columns[c];
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << cell_text(row[c], format);
      out << '\n';
    }
    return out.str();
  }
  if (format == Format::markdown) {
    out << '|';
    for (const auto& h : t.columns) out << ' ' << h << " |";
    out << "\n|";
    for (std::size_t c = 0; c < t.columns.size(); ++c) out << "---|";
    out << '\n';
    for (const auto& row : t.rows) {
      out << '|';
      for (const auto& cell : row) out << ' ' << cell_text(cell, format) << " |";
      out << '\n';
    }
    return out.str();
  }
  std::vector<std::size_t> width(t.columns.size(), 0);
  for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
  for (const auto& row : t.rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], cell_text(row[c], format).size());
  auto emit = [&](auto&& text_of) {
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      const std::string s = text_of(c);
      out << (c ? "  " : "") << std::string(width[c] - s.size(), ' ') << s;
    }
    out << '\n';
  };
  emit([&](std::size_t c) { return t.columns[c]; });
  for (const auto& row : t.rows) emit([&](std::size_t c) { return cell_text(row[c], format); });
  return out.str();
}

namespace {

Cell num(std::uint64_t v) { return {std::to_string(v), false}; }
Cell num(BigCount v) { return {v.to_string(), false}; }

std::vector<GenusCensus> grids_up_to(std::uint32_t gmax, unsigned jobs) {
  std::vector<GenusCensus> grids;
  grids.reserve(gmax + 1);
  for (std::uint32_t g = 0; g <= gmax; ++g) grids.push_back(census_grid(g, jobs));
  return grids;
}

}  // namespace

Table lower_bounds_table(std::uint32_t gmax, unsigned jobs) {
  Table t{"t1", {"g", "2F_g", "F_{g+2}-P_{g+1}", "n'_{g-1}+n'_{g-2}", "n'_g", "n_g"}, {}};
  const auto grids = grids_up_to(gmax, jobs);
  for (std::uint32_t g = 0; g <= gmax; ++g) {
    std::vector<Cell> row{num(std::uint64_t{g})};
    row.push_back(g < 2 ? Cell{"*"} : num(fibonacci(g) * BigCount(2)));
    row.push_back(num(lower_bound_depth3(g)));
    row.push_back(g < 2 ? Cell{"*"}
                        : num(grids[g - 1].count_depth_at_most(3) + grids[g - 2].count_depth_at_most(3)));
    row.push_back(num(grids[g].count_depth_at_most(3)));
    row.push_back(num(grids[g].total()));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table multiplicity4_table(std::uint32_t gmax, unsigned jobs) {
  if (gmax < 3) throw std::invalid_argument("table t2 needs gmax >= 3");
  Table t{"t2", {"q\\g"}, {}};
  for (std::uint32_t g = 3; g <= gmax; ++g) t.columns.push_back(std::to_string(g));
  const std::uint32_t qmax = static_cast<std::uint32_t>(ceil_div(gmax, 2));
  std::vector<std::uint64_t> totals(gmax + 1, 0);
  for (std::uint32_t q = 1; q <= qmax; ++q) {
    std::vector<Cell> row{num(std::uint64_t{q})};
    for (std::uint32_t g = 3; g <= gmax; ++g) {
      const std::uint64_t n = count_gapsets({g, DepthFilter::exact(q), 4u}, {.jobs = jobs}).count;
      totals[g] += n;
      row.push_back(n == 0 ? Cell{} : num(n));
    }
    t.rows.push_back(std::move(row));
  }
  std::vector<Cell> footer{Cell{"N(4,g)"}};
  for (std::uint32_t g = 3; g <= gmax; ++g) footer.push_back(num(totals[g]));
  t.rows.push_back(std::move(footer));
  return t;
}

Table upper_bounds_table(std::uint32_t gmax, unsigned jobs) {
  Table t{"t3", {"g", "n_g", "UB(M=4)", "UB(M=3)", "UB(M=2)", "2^{g-1}"}, {}};
  const auto counter = census_counter(jobs);
  for (std::uint32_t g = 1; g <= gmax; ++g) {
    std::vector<Cell> row{num(std::uint64_t{g}), num(census_grid(g, jobs).total())};
    for (std::uint32_t M : {4u, 3u, 2u}) row.push_back(num(upper_bound_ng(g, M, counter)));
    row.push_back(num(BigCount::from_raw(BigCount::raw_type{1} << (g - 1))));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table depth_table(std::uint32_t gmax, unsigned jobs) {
  Table t{"t4", {"g\\q", "0", "1", "2", "3", "n'_g"}, {}};
  for (std::uint32_t q = 4; q <= gmax; ++q) t.columns.push_back(std::to_string(q));
  t.columns.push_back("n_g");
  auto entry = [](const GenusCensus& grid, std::uint32_t g, std::uint32_t q) -> Cell {
    if (!((q >= 1 && q <= g) || (q == 0 && g == 0))) return {};
    const std::uint64_t n = grid.count_depth(q);
    const FormulaAnswer f = f_gq(g, q);
    if (f.covered() && *f.value != n)
      throw std::logic_error("closed formula (" + f.branch + ") gives " + std::to_string(*f.value) + " but census gives " +
                             std::to_string(n) + " at g=" + std::to_string(g) + ", q=" + std::to_string(q));
    return {std::to_string(n), f.covered()};
  };
  for (std::uint32_t g = 0; g <= gmax; ++g) {
    const GenusCensus grid = census_grid(g, jobs);
    std::vector<Cell> row{num(std::uint64_t{g})};
    for (std::uint32_t q = 0; q <= 3; ++q) row.push_back(entry(grid, g, q));
    row.push_back(num(grid.count_depth_at_most(3)));
    for (std::uint32_t q = 4; q <= gmax; ++q) row.push_back(entry(grid, g, q));
    row.push_back(num(grid.total()));
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace gapsets::cli
