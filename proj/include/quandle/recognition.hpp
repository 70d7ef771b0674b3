#pragma once

// Decision procedures for affine and quasi-affine quandles, and two
// independent oracles used to cross-check them.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quandle/abelian.hpp"
#include "quandle/quandle.hpp"

namespace quandle {

enum class Reason { OK, NotSemiregular, NotAbelian, NotTiny, Unbalanced, CapExceeded };
std::string to_string(Reason r);

/// Verdict plus a witness of the first failed check:
///   NotSemiregular  permutations = {alpha}, counts = {|Fix(alpha)|}
///   NotAbelian      permutations = {alpha, beta}
///   NotTiny         permutations = {alpha, beta} with alpha beta outside D
///   Unbalanced      elements = {e, y}, counts = {m_e, m_y}
///   CapExceeded     permutations = {the product that would overflow}, counts = {|D|}
struct RecognitionReport {
  bool verdict = true;
  Reason reason = Reason::OK;
  std::vector<Permutation> permutations;
  std::vector<Point> elements;
  std::vector<std::size_t> counts;

  explicit operator bool() const noexcept { return verdict; }
};

/// Affine recognition: semiregular, abelian and tiny generators, then equal
/// occurrence counts on the column of e = 0.
RecognitionReport is_affine(const Quandle& q);

/// Quasi-affine recognition: generator checks, then closure of D under
/// products with |D| <= |Q| and a fixed-point check on every new element.
RecognitionReport is_quasi_affine(const Quandle& q);

/// Dis(Q) = {L_x L_0^{-1} : x in Q}.
bool is_tiny_dis(const Quandle& q);

/// m_{x,y} is constant as y ranges over the orbit of x.
bool balance_check(const Quandle& q, Point x = 0);
bool balance_check_all(const Quandle& q);

/// Whether the congruence of Q^2 (under * and \ componentwise) generated by
/// the diagonal has the diagonal as a block. Throws GuardExceeded above
/// guards().oracle_order.
bool abelianness_oracle(const Quandle& q);

struct AffineWitness {
  FiniteAbelianGroup group;
  GroupMap f;
  std::vector<Point> iso;  // Aff(group, f) -> Q
};

/// Tries Aff(A, f) for every abelian group A of order |Q| and every conjugacy
/// class of Aut(A) against Q by brute-force isomorphism.
std::optional<AffineWitness> affine_witness_search(const Quandle& q);

}  // namespace quandle
