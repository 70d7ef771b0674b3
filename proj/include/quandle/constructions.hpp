#pragma once

// Quandles built from abelian-group data: affine quandles, projection
// quandles, semiregular extensions and mesh sums, plus the inverse direction
// (extension representations and embeddings into affine quandles).

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quandle/abelian.hpp"
#include "quandle/quandle.hpp"

namespace quandle {

/// Ext(A, f, d): the quandle on {0..k-1} x A with
///   (i, a) * (j, b) = (j, (1 - f)(a) + f(b) + d_i - d_j).
/// The pair (i, a) is the element i * |A| + a.
struct ExtensionDescriptor {
  FiniteAbelianGroup group;
  GroupMap f;
  std::vector<Element> d;

  std::size_t k() const noexcept { return d.size(); }
  std::size_t order() const noexcept { return d.size() * group.order(); }
};

/// Throws std::invalid_argument unless f is an automorphism of the group, k >= 1
/// and every d_i lies in the group.
void check_descriptor(const ExtensionDescriptor& desc);

/// Aff(A, f): a * b = (1 - f)(a) + f(b). Element a of the quandle is the group
/// element with index a. Throws if f is not an automorphism.
Quandle affine_quandle(const FiniteAbelianGroup& a, const GroupMap& f);

/// Proj(k): a * b = b.
Quandle projection_quandle(std::size_t k);

Quandle semiregular_extension(const ExtensionDescriptor& desc);

inline Point extension_element(const ExtensionDescriptor& desc, std::size_t i, Element a) {
  return static_cast<Point>(i * desc.group.order() + a);
}
inline std::pair<std::size_t, Element> extension_coordinates(const ExtensionDescriptor& desc,
                                                             Point x) {
  return {x / desc.group.order(), static_cast<Element>(x % desc.group.order())};
}

/// x \ y computed from
///   (i, a) \ (j, b) = (j, (1 - f^{-1})(a) + f^{-1}(b - d_i + d_j)).
Point extension_left_divide(const ExtensionDescriptor& desc, const GroupMap& f_inverse, Point x,
                            Point y);

// ---------------------------------------------------------------------------
// Affine meshes

/// (A_i, phi_{i,j}, c_{i,j}) with phi_{i,j} : A_i -> A_j and c_{i,j} in A_j.
struct AffineMesh {
  std::vector<FiniteAbelianGroup> groups;
  std::vector<std::vector<GroupMap>> phi;
  std::vector<std::vector<Element>> c;

  std::size_t size() const noexcept { return groups.size(); }
};

enum class MeshAxiom { Shape, M1, M2, M3, M4 };
std::string to_string(MeshAxiom a);

struct MeshViolation {
  MeshAxiom axiom;
  std::size_t i = 0, j = 0, k = 0, l = 0;
};

class InvalidMesh : public std::invalid_argument {
 public:
  explicit InvalidMesh(MeshViolation v);
  const MeshViolation& violation() const noexcept { return violation_; }

 private:
  MeshViolation violation_;
};

/// M1: 1 - phi_{i,i} is an automorphism.
/// M2: c_{i,i} = 0.
/// M3: phi_{j,k} phi_{i,j} = phi_{l,k} phi_{i,l}.
/// M4: phi_{j,k}(c_{i,j}) = phi_{k,k}(c_{i,k} - c_{j,k}).
/// Shape covers mismatched sizes, sources or targets.
std::optional<MeshViolation> check_mesh(const AffineMesh& mesh);

/// The sum of the mesh on the disjoint union of the A_i (fiber i first at
/// offset |A_0| + ... + |A_{i-1}|):
///   a * b = c_{i,j} + phi_{i,j}(a) + (1 - phi_{j,j})(b)  for a in A_i, b in A_j.
/// Throws InvalidMesh.
Quandle mesh_sum(const AffineMesh& mesh);

/// phi_{i,j} = 1 - f and c_{i,j} = d_i - d_j.
AffineMesh mesh_of_extension(const ExtensionDescriptor& desc);

// ---------------------------------------------------------------------------
// Representations

enum class RepresentationFailure { NotMedial, NotSemiregular };
std::string to_string(RepresentationFailure f);

struct ExtensionRepresentation {
  ExtensionDescriptor descriptor;
  /// iso[x] is the element of Q matching element x of the extension.
  std::vector<Point> iso;
  /// Dis(Q) as a permutation group; descriptor.group indexes its elements
  /// through `structure`.
  std::vector<Permutation> dis;
  AbelianStructure structure;
};

struct RepresentationResult {
  std::optional<ExtensionRepresentation> representation;
  std::optional<RepresentationFailure> failure;
};

/// Presents a quandle with abelian semiregular Dis(Q) as an indecomposable
/// extension Ext(Dis Q, f, d) with e = 0, f(alpha) = L_e alpha L_e^{-1} and
/// d_i = L_{t_i} L_e^{-1} over the least orbit transversal t. The map
/// (i, alpha) -> alpha(t_i) is checked to be an isomorphism before returning.
RepresentationResult extension_representation(const Quandle& q);

struct QuasiAffineEmbedding {
  ExtensionDescriptor descriptor;  // balanced padding of the representation
  Quandle superquandle;
  std::vector<Point> injection;    // Q -> superquandle
};

/// Embeds a quasi-affine quandle into an affine one by padding d with the
/// least representative of each deficient coset of Im(1 - f). Returns nullopt
/// if Q is not quasi-affine.
std::optional<QuasiAffineEmbedding> quasi_affine_embedding(const Quandle& q);

struct ProductDecomposition {
  ExtensionDescriptor factor;  // Ext(A, f, d restricted to J)
  std::size_t multiplicity = 0;
  Quandle product;             // factor x Proj(multiplicity), pairs (x, u) at x * m + u
  std::vector<Point> iso;      // product -> Ext(A, f, d)
};

/// For d a multitransversal of A / Im(1 - f) and d restricted to the indices
/// `j` a transversal, the verified isomorphism
///   ((i, a), u) -> (xi(i, u), a + c_{i,u})
/// from Ext(A, f, d|J) x Proj(m) onto Ext(A, f, d).
/// Throws std::invalid_argument if the preconditions fail.
ProductDecomposition product_decomposition_check(const ExtensionDescriptor& desc,
                                                 std::span<const std::size_t> j);

}  // namespace quandle
