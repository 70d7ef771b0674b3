#include "quandle/guard.hpp"

#include <cstdlib>
#include <sstream>

namespace quandle {

namespace {

std::size_t parse_size(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(value, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("QUANDLE_GUARD: bad value for " + key + ": '" + value + "'");
  }
  if (pos != value.size())
    throw std::invalid_argument("QUANDLE_GUARD: bad value for " + key + ": '" + value + "'");
  return static_cast<std::size_t>(v);
}

}  // namespace

Guards parse_guards(const std::string& spec, Guards base) {
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty())
      continue;
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("QUANDLE_GUARD: expected key=value, got '" + item + "'");
    std::string key = item.substr(0, eq);
    std::size_t v = parse_size(key, item.substr(eq + 1));
    if (key == "aut_order")
      base.aut_order = v;
    else if (key == "aut_candidates")
      base.aut_candidates = v;
    else if (key == "enumerate_order")
      base.enumerate_order = v;
    else if (key == "oracle_order")
      base.oracle_order = v;
    else if (key == "brute_enumeration_order")
      base.brute_enumeration_order = v;
    else
      throw std::invalid_argument("QUANDLE_GUARD: unknown key '" + key + "'");
  }
  return base;
}

const Guards& guards() {
  static const Guards g = [] {
    const char* env = std::getenv("QUANDLE_GUARD");
    return env ? parse_guards(env) : Guards{};
  }();
  return g;
}

GuardExceeded::GuardExceeded(const std::string& what, std::size_t value, std::size_t limit)
    : std::runtime_error(what + ": " + std::to_string(value) + " exceeds guard " +
                         std::to_string(limit)),
      value_(value),
      limit_(limit) {}

}  // namespace quandle
