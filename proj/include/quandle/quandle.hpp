#pragma once

// Finite quandles given by their multiplication table.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "quandle/perm.hpp"

namespace quandle {

enum class Axiom { Range, Idempotence, LeftDivision, LeftDistributivity };

std::string to_string(Axiom a);

/// One failed instance of a quandle axiom. Unused coordinates are zero.
/// For LeftDivision, `x` is the row and `y` the repeated value.
struct AxiomViolation {
  Axiom axiom;
  Point x = 0, y = 0, z = 0;
};

class InvalidQuandle : public std::invalid_argument {
 public:
  explicit InvalidQuandle(std::vector<AxiomViolation> violations);
  const std::vector<AxiomViolation>& violations() const noexcept { return violations_; }

 private:
  std::vector<AxiomViolation> violations_;
};

/// A quandle on {0, ..., n-1}; table(x, y) == x * y. Immutable.
class Quandle {
 public:
  /// Validates all axioms; throws InvalidQuandle.
  explicit Quandle(std::vector<std::vector<Point>> rows);

  /// For tables that are quandles by construction. Checked only in debug builds.
  static Quandle assume_valid(std::size_t n, std::vector<Point> table);

  std::size_t size() const noexcept { return n_; }
  Point operator()(Point x, Point y) const { return table_[x * n_ + y]; }
  std::span<const Point> row(Point x) const { return {table_.data() + x * n_, n_}; }
  const std::vector<Point>& flat_table() const noexcept { return table_; }
  std::vector<std::vector<Point>> rows() const;

  Permutation left_translation(Point x) const;
  /// The unique z with x * z == y.
  Point left_divide(Point x, Point y) const { return ldiv_[x * n_ + y]; }

  friend bool operator==(const Quandle& a, const Quandle& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  Quandle(std::size_t n, std::vector<Point> table);
  void build_division();

  std::size_t n_ = 0;
  std::vector<Point> table_;
  std::vector<Point> ldiv_;
};

struct ValidationResult {
  std::optional<Quandle> quandle;
  std::vector<AxiomViolation> violations;  // empty iff quandle is set
};

/// Checks the quandle axioms. At most `max_violations` are reported.
ValidationResult validate(const std::vector<std::vector<Point>>& rows,
                          std::size_t max_violations = 32);

/// L_x L_e^{-1} for every x (duplicates kept, in order of x).
std::vector<Permutation> dis_generators(const Quandle& q, Point e = 0);
std::vector<Permutation> left_translations(const Quandle& q);

/// Dis(Q) is abelian iff its generators commute.
bool is_medial(const Quandle& q);

struct OrbitDecomposition {
  std::vector<std::vector<Point>> orbits;  // ordered by least element
  std::vector<Point> transversal;          // least element of every orbit
  std::vector<std::size_t> orbit_of;       // orbit index of every element
};
OrbitDecomposition orbit_decomposition(const Quandle& q);

/// m[y] = |{z : z * x == y}|.
std::vector<std::size_t> occurrence_counts(const Quandle& q, Point x);

/// (a, b) is stored at a * |R| + b.
Quandle direct_product(const Quandle& q, const Quandle& r);

/// Every column is a permutation as well.
bool is_latin(const Quandle& q);

/// Whether `map` (indexed by elements of q) is a homomorphism into r.
bool is_homomorphism(const Quandle& q, const Quandle& r, std::span<const Point> map);
bool is_isomorphism(const Quandle& q, const Quandle& r, std::span<const Point> map);

/// Backtracking search for a table-preserving bijection q -> r; candidate
/// images are restricted by refined element invariants.
std::optional<std::vector<Point>> brute_force_isomorphism(const Quandle& q, const Quandle& r);

}  // namespace quandle
