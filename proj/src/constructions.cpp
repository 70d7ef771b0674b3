#include "quandle/constructions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace quandle {

void check_descriptor(const ExtensionDescriptor& desc) {
  if (!(desc.f.source() == desc.group) || !is_automorphism(desc.f))
    throw std::invalid_argument("extension: f is not an automorphism of " +
                                desc.group.to_string());
  if (desc.d.empty())
    throw std::invalid_argument("extension: k must be at least 1");
  for (Element x : desc.d)
    if (x >= desc.group.order())
      throw std::invalid_argument("extension: d contains an element outside the group");
}

Quandle affine_quandle(const FiniteAbelianGroup& a, const GroupMap& f) {
  return semiregular_extension({a, f, {0}});
}

Quandle projection_quandle(std::size_t k) {
  std::vector<Point> t(k * k);
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y)
      t[x * k + y] = static_cast<Point>(y);
  return Quandle::assume_valid(k, std::move(t));
}

Quandle semiregular_extension(const ExtensionDescriptor& desc) {
  check_descriptor(desc);
  const auto& A = desc.group;
  const std::size_t m = A.order(), k = desc.k(), n = m * k;
  GroupMap g = one_minus(desc.f);
  std::vector<Point> t(n * n);
  for (std::size_t i = 0; i < k; ++i)
    for (Element a = 0; a < m; ++a) {
      Element ga = g(a);
      for (std::size_t j = 0; j < k; ++j) {
        Element shift = A.add(ga, A.sub(desc.d[i], desc.d[j]));
        for (Element b = 0; b < m; ++b)
          t[(i * m + a) * n + j * m + b] = static_cast<Point>(j * m + A.add(shift, desc.f(b)));
      }
    }
  return Quandle::assume_valid(n, std::move(t));
}

Point extension_left_divide(const ExtensionDescriptor& desc, const GroupMap& f_inverse, Point x,
                            Point y) {
  const auto& A = desc.group;
  auto [i, a] = extension_coordinates(desc, x);
  auto [j, b] = extension_coordinates(desc, y);
  Element u = A.sub(a, f_inverse(a));
  Element v = f_inverse(A.add(A.sub(b, desc.d[i]), desc.d[j]));
  return extension_element(desc, j, A.add(u, v));
}

// ---------------------------------------------------------------------------

std::string to_string(MeshAxiom a) {
  switch (a) {
    case MeshAxiom::Shape:
      return "shape";
    case MeshAxiom::M1:
      return "M1";
    case MeshAxiom::M2:
      return "M2";
    case MeshAxiom::M3:
      return "M3";
    case MeshAxiom::M4:
      return "M4";
  }
  return "unknown";
}

InvalidMesh::InvalidMesh(MeshViolation v)
    : std::invalid_argument("invalid mesh: axiom " + to_string(v.axiom) + " fails"),
      violation_(v) {}

std::optional<MeshViolation> check_mesh(const AffineMesh& mesh) {
  const std::size_t s = mesh.size();
  if (s == 0 || mesh.phi.size() != s || mesh.c.size() != s)
    return MeshViolation{MeshAxiom::Shape};
  for (std::size_t i = 0; i < s; ++i) {
    if (mesh.phi[i].size() != s || mesh.c[i].size() != s)
      return MeshViolation{MeshAxiom::Shape, i};
    for (std::size_t j = 0; j < s; ++j)
      if (!(mesh.phi[i][j].source() == mesh.groups[i]) ||
          !(mesh.phi[i][j].target() == mesh.groups[j]) || mesh.c[i][j] >= mesh.groups[j].order())
        return MeshViolation{MeshAxiom::Shape, i, j};
  }
  for (std::size_t i = 0; i < s; ++i)
    if (!is_automorphism(one_minus(mesh.phi[i][i])))
      return MeshViolation{MeshAxiom::M1, i};
  for (std::size_t i = 0; i < s; ++i)
    if (mesh.c[i][i] != 0)
      return MeshViolation{MeshAxiom::M2, i};
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t k = 0; k < s; ++k) {
      GroupMap first = compose(mesh.phi[0][k], mesh.phi[i][0]);
      for (std::size_t j = 1; j < s; ++j)
        if (!(compose(mesh.phi[j][k], mesh.phi[i][j]) == first))
          return MeshViolation{MeshAxiom::M3, i, j, k, 0};
    }
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      for (std::size_t k = 0; k < s; ++k) {
        const auto& Ak = mesh.groups[k];
        if (mesh.phi[j][k](mesh.c[i][j]) != mesh.phi[k][k](Ak.sub(mesh.c[i][k], mesh.c[j][k])))
          return MeshViolation{MeshAxiom::M4, i, j, k};
      }
  return std::nullopt;
}

Quandle mesh_sum(const AffineMesh& mesh) {
  if (auto v = check_mesh(mesh))
    throw InvalidMesh(*v);
  const std::size_t s = mesh.size();
  std::vector<std::size_t> offset(s + 1, 0);
  for (std::size_t i = 0; i < s; ++i)
    offset[i + 1] = offset[i] + mesh.groups[i].order();
  const std::size_t n = offset[s];
  std::vector<GroupMap> g;
  for (std::size_t j = 0; j < s; ++j)
    g.push_back(one_minus(mesh.phi[j][j]));
  std::vector<Point> t(n * n);
  for (std::size_t i = 0; i < s; ++i)
    for (Element a = 0; a < mesh.groups[i].order(); ++a)
      for (std::size_t j = 0; j < s; ++j) {
        const auto& Aj = mesh.groups[j];
        Element shift = Aj.add(mesh.c[i][j], mesh.phi[i][j](a));
        for (Element b = 0; b < Aj.order(); ++b)
          t[(offset[i] + a) * n + offset[j] + b] =
              static_cast<Point>(offset[j] + Aj.add(shift, g[j](b)));
      }
  return Quandle::assume_valid(n, std::move(t));
}

AffineMesh mesh_of_extension(const ExtensionDescriptor& desc) {
  check_descriptor(desc);
  const std::size_t k = desc.k();
  GroupMap g = one_minus(desc.f);
  AffineMesh m;
  m.groups.assign(k, desc.group);
  m.phi.assign(k, std::vector<GroupMap>(k, g));
  m.c.assign(k, std::vector<Element>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      m.c[i][j] = desc.group.sub(desc.d[i], desc.d[j]);
  return m;
}

// ---------------------------------------------------------------------------

std::string to_string(RepresentationFailure f) {
  switch (f) {
    case RepresentationFailure::NotMedial:
      return "NotMedial";
    case RepresentationFailure::NotSemiregular:
      return "NotSemiregular";
  }
  return "unknown";
}

RepresentationResult extension_representation(const Quandle& q) {
  const std::size_t n = q.size();
  if (n == 0)
    throw std::invalid_argument("extension_representation: empty quandle");
  auto gens = dis_generators(q, 0);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (!is_abelian_generators(gens))
    return {std::nullopt, RepresentationFailure::NotMedial};
  for (const auto& g : gens)
    if (!g.is_identity() && fixed_point_count(g) > 0)
      return {std::nullopt, RepresentationFailure::NotSemiregular};
  auto group = generate_closure(gens, n, n);
  if (!group || !is_semiregular(*group))
    return {std::nullopt, RepresentationFailure::NotSemiregular};

  AbelianStructure s = abstract_abelian_structure(*group);
  const auto& el = group->elements();
  const auto& A = s.group;
  Permutation le = q.left_translation(0), le_inv = le.inverse();

  std::vector<Element> ftable(A.order());
  for (Element a = 0; a < A.order(); ++a) {
    Permutation conj = compose(compose(le, el[s.from_group[a]]), le_inv);
    ftable[a] = s.to_group[*group->index_of(conj)];
  }
  GroupMap f = GroupMap::from_table(A, A, std::move(ftable));

  auto od = orbit_decomposition(q);
  std::vector<Element> d;
  for (Point t : od.transversal)
    d.push_back(s.to_group[*group->index_of(compose(q.left_translation(t), le_inv))]);

  ExtensionDescriptor desc{A, f, std::move(d)};
  Quandle ext = semiregular_extension(desc);
  std::vector<Point> iso(ext.size());
  for (std::size_t i = 0; i < desc.k(); ++i)
    for (Element a = 0; a < A.order(); ++a)
      iso[extension_element(desc, i, a)] = el[s.from_group[a]](od.transversal[i]);
  if (!is_isomorphism(ext, q, iso))
    throw std::logic_error("extension_representation: constructed map is not an isomorphism");
  return {ExtensionRepresentation{std::move(desc), std::move(iso), el, std::move(s)},
          std::nullopt};
}

std::optional<QuasiAffineEmbedding> quasi_affine_embedding(const Quandle& q) {
  auto res = extension_representation(q);
  if (!res.representation)
    return std::nullopt;
  const auto& rep = *res.representation;
  ExtensionDescriptor desc = rep.descriptor;
  Subgroup s = image(one_minus(desc.f));
  auto cs = cosets(s);
  std::vector<std::size_t> coset_of(desc.group.order());
  for (std::size_t c = 0; c < cs.size(); ++c)
    for (Element x : cs[c])
      coset_of[x] = c;
  std::vector<std::size_t> count(cs.size(), 0);
  for (Element x : desc.d)
    ++count[coset_of[x]];
  std::size_t top = *std::max_element(count.begin(), count.end());
  for (std::size_t c = 0; c < cs.size(); ++c)
    for (std::size_t r = count[c]; r < top; ++r)
      desc.d.push_back(cs[c].front());

  Quandle r = semiregular_extension(desc);
  if (r.size() > q.size() * q.size())
    throw std::logic_error("quasi_affine_embedding: superquandle exceeds |Q|^2");
  // The original fibers keep their positions in the padded extension.
  std::vector<Point> injection(q.size());
  for (std::size_t x = 0; x < rep.iso.size(); ++x)
    injection[rep.iso[x]] = static_cast<Point>(x);
  for (Point x = 0; x < q.size(); ++x)
    for (Point y = 0; y < q.size(); ++y)
      if (injection[q(x, y)] != r(injection[x], injection[y]))
        throw std::logic_error("quasi_affine_embedding: injection is not a homomorphism");
  return QuasiAffineEmbedding{std::move(desc), std::move(r), std::move(injection)};
}

ProductDecomposition product_decomposition_check(const ExtensionDescriptor& desc,
                                                 std::span<const std::size_t> j) {
  check_descriptor(desc);
  const auto& A = desc.group;
  GroupMap g = one_minus(desc.f);
  Subgroup s = image(g);
  auto mt = is_multitransversal(desc.d, s);
  if (!mt.ok)
    throw std::invalid_argument("product decomposition: d is not a multitransversal");
  std::vector<Element> dj;
  for (std::size_t i : j) {
    if (i >= desc.k())
      throw std::invalid_argument("product decomposition: index out of range");
    dj.push_back(desc.d[i]);
  }
  auto tj = is_multitransversal(dj, s);
  if (!tj.ok || tj.multiplicity != 1)
    throw std::invalid_argument("product decomposition: d restricted to J is not a transversal");

  const std::size_t m = mt.multiplicity;
  auto cs = cosets(s);
  std::vector<std::size_t> coset_of(A.order());
  for (std::size_t c = 0; c < cs.size(); ++c)
    for (Element x : cs[c])
      coset_of[x] = c;
  // xi(p, u): the u-th index of d (ascending) in the coset of d_{j_p}.
  std::vector<std::vector<std::size_t>> members(cs.size());
  for (std::size_t i = 0; i < desc.k(); ++i)
    members[coset_of[desc.d[i]]].push_back(i);

  std::map<Element, Element> preimage;  // least c with (1 - f)(c) = value
  for (Element c = A.order(); c-- > 0;)
    preimage[g(c)] = c;

  ExtensionDescriptor factor{A, desc.f, dj};
  Quandle fq = semiregular_extension(factor);
  Quandle product = direct_product(fq, projection_quandle(m));
  Quandle target = semiregular_extension(desc);
  std::vector<Point> iso(product.size());
  for (std::size_t p = 0; p < j.size(); ++p) {
    const auto& row = members[coset_of[dj[p]]];
    for (std::size_t u = 0; u < m; ++u) {
      std::size_t xi = row[u];
      Element c = preimage.at(A.sub(dj[p], desc.d[xi]));
      for (Element a = 0; a < A.order(); ++a)
        iso[extension_element(factor, p, a) * m + u] = extension_element(desc, xi, A.add(a, c));
    }
  }
  if (!is_isomorphism(product, target, iso))
    throw std::logic_error("product decomposition: constructed map is not an isomorphism");
  return {std::move(factor), m, std::move(product), std::move(iso)};
}

}  // namespace quandle
