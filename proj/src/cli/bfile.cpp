#include "gapsets/cli/bfile.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace gapsets::cli {

std::vector<BFileEntry> parse_bfile(std::istream& in) {
  std::vector<BFileEntry> entries;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    std::string index_text, value_text, extra;
    fields >> index_text >> value_text;
    if (value_text.empty()) throw BFileError(lineno, "expected 'index value'");
    if (fields >> extra) throw BFileError(lineno, "unexpected trailing field '" + extra + "'");

    BFileEntry e;
    const auto [end, ec] = std::from_chars(index_text.data(), index_text.data() + index_text.size(), e.index);
    if (ec != std::errc() || end != index_text.data() + index_text.size())
      throw BFileError(lineno, "bad index '" + index_text + "'");
    if (!value_text.empty() && value_text[0] == '-') throw BFileError(lineno, "negative value " + value_text);
    try {
      e.value = BigCount::parse(value_text);
    } catch (const std::exception& ex) {
      throw BFileError(lineno, "bad value '" + value_text + "': " + ex.what());
    }
    if (!entries.empty() && e.index <= entries.back().index)
      throw BFileError(lineno, "index " + index_text + " does not increase");
    entries.push_back(e);
  }
  if (entries.empty()) throw BFileError(0, "no entries");
  return entries;
}

std::vector<BFileEntry> read_bfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BFileError(0, "cannot open " + path);
  return parse_bfile(in);
}

}  // namespace gapsets::cli
