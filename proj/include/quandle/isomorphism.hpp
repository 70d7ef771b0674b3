#pragma once

// Isomorphism of indecomposable semiregular extensions and of affine quandles,
// decided at the level of the group data.

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "quandle/abelian.hpp"
#include "quandle/constructions.hpp"

namespace quandle {

/// Im(1 - f) together with all d_i - d_j generates A.
bool is_indecomposable(const ExtensionDescriptor& desc);

/// d meets every coset of Im(1 - f) equally often.
bool is_balanced(const ExtensionDescriptor& desc);

/// Data of an isomorphism Ext(A, f, d) -> Ext(A', f', d'):
///   psi f = f' psi  and  psi(d_i) - d'_{pi(i)} = a + (1 - f')(shift_i).
struct ExtIsoWitness {
  std::vector<std::size_t> pi;
  GroupMap psi;
  Element a;
  std::vector<Element> shift;
};

/// Searches psi over the isomorphisms commuting with f and f', a over the
/// least coset representatives of Im(1 - f'), and matches cosets for pi.
/// Returns nullopt when the orders, k or the groups differ.
/// Throws std::invalid_argument if a descriptor is decomposable.
std::optional<ExtIsoWitness> ext_isomorphic(const ExtensionDescriptor& d1,
                                            const ExtensionDescriptor& d2);

/// The table bijection (i, x) -> (pi(i), psi(x) + shift_i).
std::vector<Point> witness_to_bijection(const ExtensionDescriptor& d1,
                                        const ExtensionDescriptor& d2, const ExtIsoWitness& w);

/// For balanced indecomposable descriptors: some psi commutes with f and f',
/// and the multiplicities agree. Throws std::invalid_argument otherwise.
bool ext_isomorphic_balanced(const ExtensionDescriptor& d1, const ExtensionDescriptor& d2);

/// Aff(A, f) ~ Aff(B, g): an isomorphism Im(1 - f) -> Im(1 - g) intertwining f
/// and g, and equal |Ker(1 - f) / (Ker(1 - f) ∩ Im(1 - f))|.
bool affine_isomorphic(const FiniteAbelianGroup& a, const GroupMap& f,
                       const FiniteAbelianGroup& b, const GroupMap& g);

/// Aut(A), memoized per group. Thread-safe.
std::shared_ptr<const std::vector<GroupMap>> cached_automorphism_group(
    const FiniteAbelianGroup& a);

}  // namespace quandle
