#pragma once

// Named quandles and descriptors shared by the test binaries.

#include <initializer_list>
#include <vector>

#include "quandle/abelian.hpp"
#include "quandle/constructions.hpp"
#include "quandle/quandle.hpp"

namespace fixtures {

using namespace quandle;

inline FiniteAbelianGroup Z(std::initializer_list<std::uint32_t> m) {
  return FiniteAbelianGroup(std::vector<std::uint32_t>(m));
}

/// Cyclic group with f = multiplication by `unit`; d given as residues.
inline ExtensionDescriptor ext(std::uint32_t m, std::int64_t unit, std::vector<Element> d) {
  auto a = FiniteAbelianGroup::cyclic(m);
  return {a, GroupMap::scalar(a, unit), std::move(d)};
}

inline Quandle aff(std::uint32_t m, std::int64_t unit) {
  auto a = FiniteAbelianGroup::cyclic(m);
  return affine_quandle(a, GroupMap::scalar(a, unit));
}

/// The medial, 2-reductive, non-quasi-affine quandle of order 8
/// (printed 1-indexed; shifted to 0-indexing here).
inline Quandle eight_element() {
  std::vector<Point> a{0, 1, 2, 3, 4, 5, 6, 7};
  std::vector<Point> b{1, 0, 2, 3, 5, 4, 7, 6};
  std::vector<Point> c{1, 0, 3, 2, 4, 5, 7, 6};
  std::vector<Point> d{0, 1, 3, 2, 5, 4, 6, 7};
  return Quandle({a, a, b, b, c, c, d, d});
}

/// Aff(Z_4, -1) modulo the blocks {0, 2}, {1}, {3}, numbered 0, 1, 2.
inline Quandle aff_z4_quotient() { return Quandle({{0, 2, 1}, {0, 1, 2}, {0, 1, 2}}); }

inline GroupMap swap2() {
  auto a = Z({2, 2});
  return GroupMap(a, a, {{0, 1}, {1, 0}});
}

}  // namespace fixtures
