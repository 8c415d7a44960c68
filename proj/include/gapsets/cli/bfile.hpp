#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gapsets/big_count.hpp"

namespace gapsets::cli {

struct BFileEntry {
  std::int64_t index = 0;
  BigCount value;
  friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

/// Parse failure; `line` is 1-based (0 when the error concerns the whole file).
class BFileError : public std::runtime_error {
 public:
  BFileError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "b-file line " + std::to_string(line) + ": " + what : "b-file: " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads "index value" lines as published by OEIS. Blank lines and lines
/// starting with '#' are skipped; indices must be strictly increasing and
/// values nonnegative. An input without entries is an error.
std::vector<BFileEntry> parse_bfile(std::istream& in);

std::vector<BFileEntry> read_bfile(const std::string& path);

}  // namespace gapsets::cli
