#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quandle {

/// Size limits for the exhaustive procedures.
///
/// Defaults can be overridden through the QUANDLE_GUARD environment variable,
/// a comma-separated list of key=value pairs, e.g.
/// `QUANDLE_GUARD=enumerate_order=48,oracle_order=9`. Recognized keys are the
/// field names below.
struct Guards {
  std::size_t aut_order = 256;            // |A| for automorphism enumeration
  std::size_t aut_candidates = 4'000'000;  // candidate matrices tried for Aut(A)
  std::size_t enumerate_order = 32;        // n for enumerate_quasi_affine
  std::size_t oracle_order = 8;            // |Q| for the congruence oracle
  std::size_t brute_enumeration_order = 6;  // n for brute-force quandle search
};

/// Parses a QUANDLE_GUARD-style specification on top of `base`.
/// Throws std::invalid_argument on unknown keys or malformed values.
Guards parse_guards(const std::string& spec, Guards base = {});

/// Process-wide guards: defaults plus QUANDLE_GUARD, read once.
const Guards& guards();

class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(const std::string& what, std::size_t value, std::size_t limit);
  std::size_t value() const noexcept { return value_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t value_;
  std::size_t limit_;
};

}  // namespace quandle
