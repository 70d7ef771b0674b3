#pragma once

// Counting quasi-affine quandles of a given order up to isomorphism.
//
// A class is an indecomposable extension Ext(A, f, d); it is recorded by its
// count vector c over A / Im(1 - f), where c_a is the number of d_i in coset a.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "quandle/abelian.hpp"
#include "quandle/constructions.hpp"

namespace quandle {

struct EpsilonClass {
  std::vector<std::size_t> counts;  // lexicographically least in its orbit
  ExtensionDescriptor descriptor;   // d built from least coset representatives
  bool affine = false;              // counts constant
  bool latin = false;               // k = 1 and 1 - f bijective
};

struct EpsilonResult {
  FiniteAbelianGroup quotient;  // A / Im(1 - f)
  std::vector<EpsilonClass> classes;

  std::size_t count() const noexcept { return classes.size(); }
};

/// epsilon(A, f, k): orbits of indecomposable count vectors under translations
/// of the quotient and the maps induced by the centralizer of f in `auts`.
EpsilonResult epsilon(const FiniteAbelianGroup& a, const GroupMap& f, std::size_t k,
                      std::span<const GroupMap> auts);
/// Same, with Aut(A) computed (and memoized) internally.
EpsilonResult epsilon(const FiniteAbelianGroup& a, const GroupMap& f, std::size_t k);

/// floor(k / 2).
std::size_t epsilon_2(std::size_t k);
/// (k^2 + 6k - 4 + xi_k) / 12 with xi_k = 4, 1, 0, -3 for k = 0, 3, {2, 4}, {1, 5} mod 6.
std::size_t epsilon_3(std::size_t k);

/// The known closed-form value of epsilon(A, f, k), if one applies:
/// 1 when 1 - f is onto; for f = 1 the formulas for Z_2 and Z_3, the values
/// for (Z_4, 3), (Z_5, 3), (Z_2^2, 3), and k = 2 (1 if A is cyclic, else 0).
std::optional<std::size_t> epsilon_closed_form(const FiniteAbelianGroup& a, const GroupMap& f,
                                               std::size_t k);

/// Number of quasi-affine quandles of order p, p^2 or pq (p < q primes) from
/// the order formulas; nullopt for other n.
std::optional<std::size_t> closed_form_order_counts(std::size_t n);

struct EnumerationCell {
  std::size_t k;
  FiniteAbelianGroup group;
  GroupMap f;
  std::size_t class_size = 0;  // size of the conjugacy class of f
  EpsilonResult result;

  std::size_t count() const noexcept { return result.count(); }
};

struct Enumeration {
  std::size_t n = 0;
  std::vector<EnumerationCell> cells;  // by k, then group, then class of f

  std::size_t total() const;
  std::size_t affine() const;
  std::size_t latin() const;
  /// (k, number of classes with k orbits) for every divisor k of n.
  std::vector<std::pair<std::size_t, std::size_t>> by_k() const;
  std::vector<const EpsilonClass*> classes() const;
};

/// `jobs` caps the OpenMP worker count (0: runtime default, 1: serial).
/// Throws GuardExceeded above guards().enumerate_order.
Enumeration enumerate_quasi_affine(std::size_t n, int jobs = 0);

/// Plain loop over the same cells, kept as the reference for the parallel path.
Enumeration enumerate_quasi_affine_serial(std::size_t n);

bool same_result(const Enumeration& a, const Enumeration& b);

struct CountTable {
  std::vector<std::size_t> quasi_affine, affine, latin;  // index n - 1
};
CountTable count_table(std::size_t n_max, int jobs = 0);

/// All quandles of order n up to isomorphism by backtracking over table
/// cells, each the lexicographically least table of its class.
/// Throws GuardExceeded above guards().brute_enumeration_order.
std::vector<Quandle> brute_force_enumerate_quandles(std::size_t n);

}  // namespace quandle
