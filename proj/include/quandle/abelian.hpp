#pragma once

// Finite abelian groups as direct sums of cyclic groups, their homomorphisms
// as integer matrices, subgroups, quotients and automorphism groups.
//
// Elements are addressed by an index: the mixed-radix rank of the residue
// tuple, first coordinate most significant. Index 0 is always the zero.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace quandle {

using Element = std::uint32_t;

class FiniteAbelianGroup {
 public:
  /// The trivial group.
  FiniteAbelianGroup() = default;

  /// Z_{m_1} + ... + Z_{m_r}; every modulus must be >= 1.
  explicit FiniteAbelianGroup(std::vector<std::uint32_t> moduli);

  static FiniteAbelianGroup cyclic(std::uint32_t m);

  const std::vector<std::uint32_t>& moduli() const noexcept { return moduli_; }
  std::size_t rank() const noexcept { return moduli_.size(); }
  std::size_t order() const noexcept { return order_; }

  std::vector<std::uint32_t> coords(Element a) const;
  /// Reduces each coordinate modulo its modulus, negative values included.
  Element index(std::span<const std::int64_t> coords) const;
  Element basis(std::size_t i) const;

  Element zero() const noexcept { return 0; }
  Element add(Element a, Element b) const;
  Element neg(Element a) const;
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(std::int64_t k, Element a) const;
  std::uint64_t order_of(Element a) const;

  /// Invariant-factor form: every modulus >= 2 and m_1 | m_2 | ... | m_r.
  bool is_canonical() const noexcept;
  bool is_cyclic() const;  // up to isomorphism

  std::string to_string() const;

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.moduli_ == b.moduli_;
  }

 private:
  std::vector<std::uint32_t> moduli_;
  std::vector<std::uint64_t> strides_;
  std::size_t order_ = 1;
};

/// A homomorphism given by an integer matrix acting on residue tuples.
/// Column j holds the image of the j-th basis element.
class GroupMap {
 public:
  /// Throws std::invalid_argument if the shape is wrong or if the matrix does
  /// not define a homomorphism (m_j * column j must vanish in the target).
  GroupMap(FiniteAbelianGroup source, FiniteAbelianGroup target,
           std::vector<std::vector<std::int64_t>> matrix);

  static GroupMap identity(const FiniteAbelianGroup& a);
  static GroupMap zero(const FiniteAbelianGroup& source, const FiniteAbelianGroup& target);
  static GroupMap scalar(const FiniteAbelianGroup& a, std::int64_t k);
  /// Builds the map sending basis element j to `basis_images[j]`.
  static GroupMap from_basis_images(const FiniteAbelianGroup& source,
                                    const FiniteAbelianGroup& target,
                                    std::span<const Element> basis_images);
  /// Builds a map from its full table; throws if the table is not additive.
  static GroupMap from_table(const FiniteAbelianGroup& source,
                             const FiniteAbelianGroup& target,
                             std::vector<Element> table);

  const FiniteAbelianGroup& source() const noexcept { return source_; }
  const FiniteAbelianGroup& target() const noexcept { return target_; }
  const std::vector<std::vector<std::int64_t>>& matrix() const noexcept { return matrix_; }
  const std::vector<Element>& table() const noexcept { return table_; }

  Element operator()(Element a) const { return table_[a]; }

  friend bool operator==(const GroupMap& a, const GroupMap& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.table_ == b.table_;
  }

 private:
  GroupMap() = default;
  void fill_table();

  FiniteAbelianGroup source_;
  FiniteAbelianGroup target_;
  std::vector<std::vector<std::int64_t>> matrix_;
  std::vector<Element> table_;
};

/// g after f.
GroupMap compose(const GroupMap& g, const GroupMap& f);
GroupMap add(const GroupMap& f, const GroupMap& g);
GroupMap subtract(const GroupMap& f, const GroupMap& g);
/// x -> x - f(x). Throws if f is not an endomorphism.
GroupMap one_minus(const GroupMap& f);
bool is_endomorphism(const GroupMap& f);
bool is_automorphism(const GroupMap& f);
/// Throws std::invalid_argument if f is not bijective.
GroupMap inverse(const GroupMap& f);

class Subgroup {
 public:
  Subgroup(FiniteAbelianGroup parent, std::vector<Element> elements);

  const FiniteAbelianGroup& parent() const noexcept { return parent_; }
  /// Sorted.
  const std::vector<Element>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(Element a) const { return member_[a]; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }

 private:
  FiniteAbelianGroup parent_;
  std::vector<Element> elements_;
  std::vector<bool> member_;
};

Subgroup subgroup_generated(const FiniteAbelianGroup& a, std::span<const Element> generators);
Subgroup image(const GroupMap& f);
Subgroup kernel(const GroupMap& f);
Subgroup intersection(const Subgroup& s, const Subgroup& t);

/// Cosets of `s`, each sorted, ordered by least element.
std::vector<std::vector<Element>> cosets(const Subgroup& s);
/// The least element of each coset, ascending.
std::vector<Element> transversal(const Subgroup& s);

/// Result of decomposing an abstract finite abelian group.
/// `to_local[g]` is the local element corresponding to canonical element g.
struct Decomposition {
  FiniteAbelianGroup group;
  std::vector<std::size_t> to_local;
};

/// Invariant-factor decomposition of an abelian group on local indices
/// 0..order-1 with 0 the identity, given by its addition. Repeatedly splits
/// off a cyclic summand generated by an element of maximal order.
Decomposition decompose(std::size_t order,
                        const std::function<std::size_t(std::size_t, std::size_t)>& add);

/// An isomorphism from `a` onto its invariant-factor form.
struct CanonicalForm {
  FiniteAbelianGroup group;
  GroupMap to_canonical;
  GroupMap from_canonical;
};
CanonicalForm canonical_form(const FiniteAbelianGroup& a);

/// The invariant-factor form of a subgroup, with the inclusion map.
struct SubgroupStructure {
  FiniteAbelianGroup group;
  GroupMap inclusion;  // group -> parent, injective
};
SubgroupStructure subgroup_structure(const Subgroup& s);

struct Quotient {
  FiniteAbelianGroup group;      // invariant-factor form of A/S
  GroupMap projection;           // A -> group
  std::vector<Element> lift;     // least coset representative of each element
};
Quotient quotient_structure(const Subgroup& s);

struct Multitransversal {
  bool ok = false;
  std::size_t multiplicity = 0;
};

/// Whether the multiset `d` meets every coset of `s` equally often.
Multitransversal is_multitransversal(std::span<const Element> d, const Subgroup& s);
/// Same, for the block system of cosets of `s` inside `within` (s <= within).
/// Elements of `d` outside `within` make the answer false.
Multitransversal is_multitransversal(std::span<const Element> d, const Subgroup& s,
                                     const Subgroup& within);

struct ImageMultiplicity {
  bool is_multitransversal = false;
  std::size_t multiplicity = 0;             // counted directly on phi(T)
  std::size_t kernel_quotient_order = 0;    // |Ker phi / (Ker phi ∩ Im phi)|
};

/// For a transversal `t` of A / Im phi, checks that phi(t) is a multitransversal
/// of Im phi / Im phi^2 and reports its multiplicity next to
/// |Ker phi / (Ker phi ∩ Im phi)|. Throws if `t` is not a transversal.
ImageMultiplicity multitransversal_image_check(const GroupMap& phi, std::span<const Element> t);

/// All automorphisms of `a`, sorted by table. Throws GuardExceeded beyond
/// guards().aut_order or guards().aut_candidates.
std::vector<GroupMap> automorphism_group(const FiniteAbelianGroup& a);

struct ConjugacyClass {
  GroupMap representative;  // least member by table
  std::size_t size;
};
std::vector<ConjugacyClass> conjugacy_classes(std::span<const GroupMap> group);
std::vector<GroupMap> centralizer(std::span<const GroupMap> group, const GroupMap& f);

/// psi / S on the quotient; throws if S is not psi-invariant.
GroupMap induced_on_quotient(const GroupMap& psi, const Quotient& quotient, const Subgroup& s);

/// All abelian groups of order m in invariant-factor form, one per
/// isomorphism class, in a fixed order (cyclic group first).
std::vector<FiniteAbelianGroup> abelian_groups_of_order(std::size_t m);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

}  // namespace quandle
