#include "quandle/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace quandle {

std::shared_ptr<const std::vector<GroupMap>> cached_automorphism_group(
    const FiniteAbelianGroup& a) {
  static std::mutex mu;
  static std::map<std::vector<std::uint32_t>, std::shared_ptr<const std::vector<GroupMap>>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(a.moduli()); it != cache.end())
      return it->second;
  }
  auto auts = std::make_shared<const std::vector<GroupMap>>(automorphism_group(a));
  std::lock_guard lock(mu);
  return cache.emplace(a.moduli(), std::move(auts)).first->second;
}

bool is_indecomposable(const ExtensionDescriptor& desc) {
  check_descriptor(desc);
  const auto& A = desc.group;
  Subgroup im = image(one_minus(desc.f));
  std::vector<Element> gens = im.elements();
  for (Element x : desc.d)
    gens.push_back(A.sub(x, desc.d.front()));
  return subgroup_generated(A, gens).size() == A.order();
}

bool is_balanced(const ExtensionDescriptor& desc) {
  check_descriptor(desc);
  return is_multitransversal(desc.d, image(one_minus(desc.f))).ok;
}

namespace {

std::vector<std::size_t> coset_index(const Subgroup& s) {
  std::vector<std::size_t> id(s.parent().order());
  auto cs = cosets(s);
  for (std::size_t c = 0; c < cs.size(); ++c)
    for (Element x : cs[c])
      id[x] = c;
  return id;
}

// Least preimage under g of every element of Im g.
std::vector<Element> least_preimages(const GroupMap& g) {
  std::vector<Element> pre(g.target().order(), 0);
  for (Element x = g.source().order(); x-- > 0;)
    pre[g(x)] = x;
  return pre;
}

std::vector<Element> transport(const GroupMap& to, const GroupMap& f, const GroupMap& from) {
  std::vector<Element> t(to.target().order());
  for (Element x = 0; x < t.size(); ++x)
    t[x] = to(f(from(x)));
  return t;
}

bool intertwines(const GroupMap& theta, const std::vector<Element>& f,
                 const std::vector<Element>& g) {
  for (Element x = 0; x < f.size(); ++x)
    if (theta(f[x]) != g[theta(x)])
      return false;
  return true;
}

void require_indecomposable(const ExtensionDescriptor& d, const char* who) {
  if (!is_indecomposable(d))
    throw std::invalid_argument(std::string(who) + ": descriptor is decomposable");
}

}  // namespace

std::optional<ExtIsoWitness> ext_isomorphic(const ExtensionDescriptor& d1,
                                            const ExtensionDescriptor& d2) {
  require_indecomposable(d1, "ext_isomorphic");
  require_indecomposable(d2, "ext_isomorphic");
  if (d1.k() != d2.k() || d1.group.order() != d2.group.order())
    return std::nullopt;
  CanonicalForm c1 = canonical_form(d1.group), c2 = canonical_form(d2.group);
  if (!(c1.group == c2.group))
    return std::nullopt;
  const auto& A2 = d2.group;
  auto fc1 = transport(c1.to_canonical, d1.f, c1.from_canonical);
  auto fc2 = transport(c2.to_canonical, d2.f, c2.from_canonical);

  GroupMap g2 = one_minus(d2.f);
  Subgroup s2 = image(g2);
  auto cid = coset_index(s2);
  auto reps = transversal(s2);
  auto pre = least_preimages(g2);
  const std::size_t k = d2.k();
  std::vector<std::size_t> target(k);
  for (std::size_t j = 0; j < k; ++j)
    target[j] = cid[d2.d[j]];
  std::vector<std::size_t> target_sorted = target;
  std::sort(target_sorted.begin(), target_sorted.end());

  auto auts = cached_automorphism_group(c1.group);
  std::vector<std::size_t> want(k);
  for (const auto& theta : *auts) {
    if (!intertwines(theta, fc1, fc2))
      continue;
    std::vector<Element> psi(d1.group.order());
    for (Element x = 0; x < psi.size(); ++x)
      psi[x] = c2.from_canonical(theta(c1.to_canonical(x)));
    for (Element a : reps) {
      for (std::size_t i = 0; i < k; ++i)
        want[i] = cid[A2.sub(psi[d1.d[i]], a)];
      auto sorted = want;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != target_sorted)
        continue;
      std::vector<std::size_t> pi(k);
      std::vector<bool> used(k, false);
      std::vector<Element> shift(k);
      for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = 0;
        while (used[j] || target[j] != want[i])
          ++j;
        used[j] = true;
        pi[i] = j;
        shift[i] = pre[A2.sub(A2.sub(psi[d1.d[i]], d2.d[j]), a)];
      }
      return ExtIsoWitness{std::move(pi), GroupMap::from_table(d1.group, A2, std::move(psi)), a,
                           std::move(shift)};
    }
  }
  return std::nullopt;
}

std::vector<Point> witness_to_bijection(const ExtensionDescriptor& d1,
                                        const ExtensionDescriptor& d2, const ExtIsoWitness& w) {
  std::vector<Point> map(d1.order());
  for (std::size_t i = 0; i < d1.k(); ++i)
    for (Element x = 0; x < d1.group.order(); ++x)
      map[extension_element(d1, i, x)] =
          extension_element(d2, w.pi[i], d2.group.add(w.psi(x), w.shift[i]));
  return map;
}

bool ext_isomorphic_balanced(const ExtensionDescriptor& d1, const ExtensionDescriptor& d2) {
  require_indecomposable(d1, "ext_isomorphic_balanced");
  require_indecomposable(d2, "ext_isomorphic_balanced");
  auto m1 = is_multitransversal(d1.d, image(one_minus(d1.f)));
  auto m2 = is_multitransversal(d2.d, image(one_minus(d2.f)));
  if (!m1.ok || !m2.ok)
    throw std::invalid_argument("ext_isomorphic_balanced: descriptor is not balanced");
  if (m1.multiplicity != m2.multiplicity || d1.group.order() != d2.group.order())
    return false;
  CanonicalForm c1 = canonical_form(d1.group), c2 = canonical_form(d2.group);
  if (!(c1.group == c2.group))
    return false;
  auto fc1 = transport(c1.to_canonical, d1.f, c1.from_canonical);
  auto fc2 = transport(c2.to_canonical, d2.f, c2.from_canonical);
  auto auts = cached_automorphism_group(c1.group);
  return std::any_of(auts->begin(), auts->end(),
                     [&](const GroupMap& t) { return intertwines(t, fc1, fc2); });
}

namespace {

struct Restricted {
  SubgroupStructure structure;
  std::vector<Element> f;  // f restricted to the subgroup, in local coordinates
};

Restricted restrict_to(const Subgroup& s, const GroupMap& f) {
  SubgroupStructure ss = subgroup_structure(s);
  std::vector<Element> local(s.parent().order(), 0);
  for (Element x = 0; x < ss.group.order(); ++x)
    local[ss.inclusion(x)] = x;
  std::vector<Element> fr(ss.group.order());
  for (Element x = 0; x < fr.size(); ++x)
    fr[x] = local[f(ss.inclusion(x))];
  return {std::move(ss), std::move(fr)};
}

std::size_t kernel_quotient_order(const GroupMap& g) {
  Subgroup ker = kernel(g), im = image(g);
  return ker.size() / intersection(ker, im).size();
}

}  // namespace

bool affine_isomorphic(const FiniteAbelianGroup& a, const GroupMap& f,
                       const FiniteAbelianGroup& b, const GroupMap& g) {
  if (!(f.source() == a) || !is_automorphism(f) || !(g.source() == b) || !is_automorphism(g))
    throw std::invalid_argument("affine_isomorphic: maps must be automorphisms");
  if (a.order() != b.order())
    return false;
  GroupMap gf = one_minus(f), gg = one_minus(g);
  if (kernel_quotient_order(gf) != kernel_quotient_order(gg))
    return false;
  Subgroup sf = image(gf), sg = image(gg);
  if (sf.size() != sg.size())
    return false;
  Restricted rf = restrict_to(sf, f), rg = restrict_to(sg, g);
  if (!(rf.structure.group == rg.structure.group))
    return false;
  auto auts = cached_automorphism_group(rf.structure.group);
  return std::any_of(auts->begin(), auts->end(),
                     [&](const GroupMap& t) { return intertwines(t, rf.f, rg.f); });
}

}  // namespace quandle
