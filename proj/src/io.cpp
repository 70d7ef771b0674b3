#include "quandle/io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace quandle {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::invalid_argument(line ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

namespace {

bool skippable(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

std::vector<long long> numbers(const std::string& line, std::size_t lineno) {
  std::istringstream in(line);
  std::vector<long long> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size())
      throw ParseError(lineno, "not an integer: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

ParsedTable parse_table(const std::string& text) {
  if (text.empty())
    throw ParseError(0, "empty input");
  if (text.back() != '\n')
    throw ParseError(0, "missing trailing newline");
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::size_t> n;
  ParsedTable t;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line))
      continue;
    auto v = numbers(line, lineno);
    if (!n) {
      if (v.size() != 1 || v[0] < 1)
        throw ParseError(lineno, "expected the order n >= 1 on its own line");
      n = static_cast<std::size_t>(v[0]);
      continue;
    }
    if (t.rows.size() == *n)
      throw ParseError(lineno, "more than " + std::to_string(*n) + " rows");
    if (v.size() != *n)
      throw ParseError(lineno, "row " + std::to_string(t.rows.size()) + " has " +
                                   std::to_string(v.size()) + " entries, expected " +
                                   std::to_string(*n));
    std::vector<Point> row;
    for (long long x : v) {
      if (x < 0 || static_cast<std::size_t>(x) >= *n)
        throw ParseError(lineno, "entry " + std::to_string(x) + " out of range 0.." +
                                     std::to_string(*n - 1));
      row.push_back(static_cast<Point>(x));
    }
    t.rows.push_back(std::move(row));
    t.row_lines.push_back(lineno);
  }
  if (!n)
    throw ParseError(0, "no header line");
  if (t.rows.size() != *n)
    throw ParseError(lineno, "expected " + std::to_string(*n) + " rows, found " +
                                 std::to_string(t.rows.size()));
  return t;
}

Quandle parse_quandle(const std::string& text) {
  ParsedTable t = parse_table(text);
  auto res = validate(t.rows, 1);
  if (!res.quandle) {
    const auto& v = res.violations.front();
    std::string what;
    switch (v.axiom) {
      case Axiom::Range:
        what = "entry out of range";
        break;
      case Axiom::Idempotence:
        what = "row " + std::to_string(v.x) + ": " + std::to_string(v.x) + " * " +
               std::to_string(v.x) + " must be " + std::to_string(v.x);
        break;
      case Axiom::LeftDivision:
        what = "row " + std::to_string(v.x) + " is not a permutation (" + std::to_string(v.y) +
               " repeats)";
        break;
      case Axiom::LeftDistributivity:
        what = "left distributivity fails for (" + std::to_string(v.x) + ", " +
               std::to_string(v.y) + ", " + std::to_string(v.z) + ")";
        break;
    }
    throw ParseError(t.row_lines[v.x], what);
  }
  return std::move(*res.quandle);
}

std::string serialize(const Quandle& q, const std::vector<std::string>& comments) {
  std::string s;
  for (const auto& c : comments)
    s += "# " + c + "\n";
  s += std::to_string(q.size()) + "\n";
  for (Point x = 0; x < q.size(); ++x) {
    for (Point y = 0; y < q.size(); ++y) {
      if (y)
        s += ' ';
      s += std::to_string(q(x, y));
    }
    s += '\n';
  }
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::invalid_argument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << contents))
    throw std::invalid_argument("cannot write " + path);
}

}  // namespace quandle
