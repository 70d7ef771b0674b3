#pragma once

// Dense permutations on {0, ..., n-1} and small permutation groups.
//
// Mappings act on the left: compose(p, q)(x) == p(q(x)).

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quandle/abelian.hpp"

namespace quandle {

using Point = std::uint32_t;

class Permutation {
 public:
  Permutation() = default;

  /// Takes ownership of the one-line notation; throws std::invalid_argument
  /// if `images` is not a bijection of {0, ..., images.size()-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation from disjoint cycles, e.g. {{0, 1, 2}, {3, 4}}.
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation& p, const Permutation& q);

  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// p after q. Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

std::size_t fixed_point_count(const Permutation& p);

bool commute(const Permutation& p, const Permutation& q);

/// A finite permutation group with all of its elements materialized.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::vector<Permutation> elements);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  /// Sorted lexicographically; the identity is always first.
  const std::vector<Permutation>& elements() const noexcept { return elements_; }

  bool contains(const Permutation& p) const;
  /// Position of `p` in elements(), or nullopt.
  std::optional<std::size_t> index_of(const Permutation& p) const;

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

/// Closes `generators` under composition with an unordered pair queue.
/// Returns nullopt as soon as the element count would exceed `cap`.
std::optional<PermGroup> generate_closure(std::span<const Permutation> generators,
                                          std::size_t degree,
                                          std::optional<std::size_t> cap = std::nullopt);

bool is_abelian_generators(std::span<const Permutation> generators);
bool is_abelian(const PermGroup& group);

bool is_semiregular(const PermGroup& group);

/// Semiregularity of the group generated by `generators`, decided without
/// materializing more than `degree` elements (a semiregular group on n
/// points has at most n elements).
bool is_semiregular(std::span<const Permutation> generators, std::size_t degree);

/// Orbits of the natural action, each sorted, ordered by least element.
std::vector<std::vector<Point>> orbits(std::span<const Permutation> generators,
                                       std::size_t degree);
std::vector<std::vector<Point>> orbits(const PermGroup& group);

/// An abelian permutation group seen as an abstract group in invariant-factor
/// form. `to_group[i]` is the group element of PermGroup::elements()[i];
/// `from_group` is its inverse.
struct AbelianStructure {
  FiniteAbelianGroup group;
  std::vector<Element> to_group;
  std::vector<std::size_t> from_group;
};

/// Throws std::invalid_argument if the group is not abelian.
AbelianStructure abstract_abelian_structure(const PermGroup& group);

}  // namespace quandle
