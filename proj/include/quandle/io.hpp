#pragma once

// Plain-text quandle tables:
//
//   # comment lines and blank lines are ignored
//   3
//   0 2 1
//   0 1 2
//   0 1 2
//
// The first non-comment line is n; row x lists x * y for y = 0..n-1. The file
// must end with a newline.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "quandle/quandle.hpp"

namespace quandle {

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t line, const std::string& message);
  /// 1-based; 0 when the error concerns the file as a whole.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct ParsedTable {
  std::vector<std::vector<Point>> rows;
  std::vector<std::size_t> row_lines;  // source line of every row
};

/// Syntax only: shape and value range. Throws ParseError.
ParsedTable parse_table(const std::string& text);

/// Parses and validates. Axiom failures are reported as ParseError at the
/// line of the offending row.
Quandle parse_quandle(const std::string& text);

std::string serialize(const Quandle& q, const std::vector<std::string>& comments = {});

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace quandle
