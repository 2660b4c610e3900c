// Plain-text 0/1 matrix files.
//
// Format: an optional header line "n k", then k data lines of n symbols from
// {0,1}. Symbols may be separated by spaces; leading and trailing whitespace
// and trailing blank lines are ignored. A first line made of two integers is
// read as a header when it is consistent with the data that follows, or when
// it cannot be a data row; otherwise it is a data row ("1 1" alone is the
// 1x2 matrix 11).
#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sdc/gf2.hpp"

namespace sdc {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column = 0);

  /// 1-based; column 0 means "whole line".
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

BitMatrix parse_matrix(std::string_view text);
BitMatrix read_matrix(std::istream& in);

/// Always writes the "n k" header. `spaced` separates symbols with single
/// spaces.
std::string serialize_matrix(const BitMatrix& m, bool spaced = false);

}  // namespace sdc
