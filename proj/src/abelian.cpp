#include "quandle/abelian.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "quandle/guard.hpp"

namespace quandle {

namespace {

std::int64_t reduce(std::int64_t v, std::uint32_t m) {
  std::int64_t r = v % static_cast<std::int64_t>(m);
  return r < 0 ? r + m : r;
}

struct TableHash {
  std::size_t operator()(const std::vector<Element>& t) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Element e : t) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::vector<Element> inverse_table(const std::vector<Element>& t) {
  std::vector<Element> inv(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    inv[t[i]] = static_cast<Element>(i);
  return inv;
}

}  // namespace

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }
std::uint64_t lcm(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

// ---------------------------------------------------------------------------
// FiniteAbelianGroup

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::uint32_t> moduli)
    : moduli_(std::move(moduli)) {
  strides_.assign(moduli_.size(), 1);
  std::uint64_t order = 1;
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    if (moduli_[i] == 0)
      throw std::invalid_argument("abelian group: modulus must be >= 1");
    strides_[i] = order;
    order *= moduli_[i];
    if (order > (1ull << 31))
      throw std::invalid_argument("abelian group: order too large");
  }
  order_ = static_cast<std::size_t>(order);
}

FiniteAbelianGroup FiniteAbelianGroup::cyclic(std::uint32_t m) {
  return FiniteAbelianGroup(std::vector<std::uint32_t>{m});
}

std::vector<std::uint32_t> FiniteAbelianGroup::coords(Element a) const {
  std::vector<std::uint32_t> c(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    c[i] = static_cast<std::uint32_t>((a / strides_[i]) % moduli_[i]);
  return c;
}

Element FiniteAbelianGroup::index(std::span<const std::int64_t> coords) const {
  if (coords.size() != moduli_.size())
    throw std::invalid_argument("abelian group: coordinate count mismatch");
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    idx += static_cast<std::uint64_t>(reduce(coords[i], moduli_[i])) * strides_[i];
  return static_cast<Element>(idx);
}

Element FiniteAbelianGroup::basis(std::size_t i) const {
  return moduli_[i] == 1 ? 0 : static_cast<Element>(strides_[i]);
}

Element FiniteAbelianGroup::add(Element a, Element b) const {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    std::uint64_t ca = (a / strides_[i]) % moduli_[i];
    std::uint64_t cb = (b / strides_[i]) % moduli_[i];
    idx += ((ca + cb) % moduli_[i]) * strides_[i];
  }
  return static_cast<Element>(idx);
}

Element FiniteAbelianGroup::neg(Element a) const {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    std::uint64_t ca = (a / strides_[i]) % moduli_[i];
    idx += ((moduli_[i] - ca) % moduli_[i]) * strides_[i];
  }
  return static_cast<Element>(idx);
}

Element FiniteAbelianGroup::mul(std::int64_t k, Element a) const {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    std::int64_t ca = static_cast<std::int64_t>((a / strides_[i]) % moduli_[i]);
    idx += static_cast<std::uint64_t>(reduce(reduce(k, moduli_[i]) * ca, moduli_[i])) *
           strides_[i];
  }
  return static_cast<Element>(idx);
}

std::uint64_t FiniteAbelianGroup::order_of(Element a) const {
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    std::uint64_t ca = (a / strides_[i]) % moduli_[i];
    ord = std::lcm(ord, moduli_[i] / std::gcd<std::uint64_t>(ca, moduli_[i]));
  }
  return ord;
}

bool FiniteAbelianGroup::is_canonical() const noexcept {
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (moduli_[i] < 2)
      return false;
    if (i > 0 && moduli_[i] % moduli_[i - 1] != 0)
      return false;
  }
  return true;
}

bool FiniteAbelianGroup::is_cyclic() const {
  std::uint64_t exponent = 1;
  for (auto m : moduli_)
    exponent = std::lcm<std::uint64_t>(exponent, m);
  return exponent == order_;
}

std::string FiniteAbelianGroup::to_string() const {
  std::string s;
  for (auto m : moduli_) {
    if (m == 1)
      continue;
    if (!s.empty())
      s += "+";
    s += "Z_" + std::to_string(m);
  }
  return s.empty() ? "Z_1" : s;
}

// ---------------------------------------------------------------------------
// GroupMap

GroupMap::GroupMap(FiniteAbelianGroup source, FiniteAbelianGroup target,
                   std::vector<std::vector<std::int64_t>> matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.size() != target_.rank())
    throw std::invalid_argument("group map: matrix must have one row per target coordinate");
  for (std::size_t i = 0; i < matrix_.size(); ++i) {
    if (matrix_[i].size() != source_.rank())
      throw std::invalid_argument("group map: matrix must have one column per source coordinate");
    for (std::size_t j = 0; j < matrix_[i].size(); ++j) {
      matrix_[i][j] = reduce(matrix_[i][j], target_.moduli()[i]);
      if ((matrix_[i][j] * source_.moduli()[j]) % target_.moduli()[i] != 0)
        throw std::invalid_argument("group map: matrix is not well defined on " +
                                    source_.to_string());
    }
  }
  fill_table();
}

void GroupMap::fill_table() {
  table_.resize(source_.order());
  std::vector<std::int64_t> out(target_.rank());
  for (Element a = 0; a < source_.order(); ++a) {
    auto c = source_.coords(a);
    for (std::size_t i = 0; i < target_.rank(); ++i) {
      std::int64_t v = 0;
      for (std::size_t j = 0; j < source_.rank(); ++j)
        v = (v + matrix_[i][j] * c[j]) % target_.moduli()[i];
      out[i] = v;
    }
    table_[a] = target_.index(out);
  }
}

GroupMap GroupMap::identity(const FiniteAbelianGroup& a) { return scalar(a, 1); }

GroupMap GroupMap::zero(const FiniteAbelianGroup& source, const FiniteAbelianGroup& target) {
  return GroupMap(source, target,
                  std::vector<std::vector<std::int64_t>>(
                      target.rank(), std::vector<std::int64_t>(source.rank(), 0)));
}

GroupMap GroupMap::scalar(const FiniteAbelianGroup& a, std::int64_t k) {
  std::vector<std::vector<std::int64_t>> m(a.rank(), std::vector<std::int64_t>(a.rank(), 0));
  for (std::size_t i = 0; i < a.rank(); ++i)
    m[i][i] = k;
  return GroupMap(a, a, std::move(m));
}

GroupMap GroupMap::from_basis_images(const FiniteAbelianGroup& source,
                                     const FiniteAbelianGroup& target,
                                     std::span<const Element> basis_images) {
  if (basis_images.size() != source.rank())
    throw std::invalid_argument("group map: need one image per basis element");
  std::vector<std::vector<std::int64_t>> m(target.rank(),
                                           std::vector<std::int64_t>(source.rank(), 0));
  for (std::size_t j = 0; j < source.rank(); ++j) {
    auto c = target.coords(basis_images[j]);
    for (std::size_t i = 0; i < target.rank(); ++i)
      m[i][j] = c[i];
  }
  return GroupMap(source, target, std::move(m));
}

GroupMap GroupMap::from_table(const FiniteAbelianGroup& source, const FiniteAbelianGroup& target,
                              std::vector<Element> table) {
  if (table.size() != source.order())
    throw std::invalid_argument("group map: table size mismatch");
  std::vector<Element> basis_images(source.rank());
  for (std::size_t j = 0; j < source.rank(); ++j)
    basis_images[j] = table[source.basis(j)];
  GroupMap f = from_basis_images(source, target, basis_images);
  if (f.table_ != table)
    throw std::invalid_argument("group map: table is not a homomorphism");
  return f;
}

GroupMap compose(const GroupMap& g, const GroupMap& f) {
  if (!(f.target() == g.source()))
    throw std::invalid_argument("compose: incompatible groups");
  const auto& a = f.source();
  std::vector<Element> imgs(a.rank());
  for (std::size_t j = 0; j < a.rank(); ++j)
    imgs[j] = g(f(a.basis(j)));
  return GroupMap::from_basis_images(a, g.target(), imgs);
}

GroupMap add(const GroupMap& f, const GroupMap& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target()))
    throw std::invalid_argument("add: incompatible maps");
  const auto& a = f.source();
  std::vector<Element> imgs(a.rank());
  for (std::size_t j = 0; j < a.rank(); ++j)
    imgs[j] = f.target().add(f(a.basis(j)), g(a.basis(j)));
  return GroupMap::from_basis_images(a, f.target(), imgs);
}

GroupMap subtract(const GroupMap& f, const GroupMap& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target()))
    throw std::invalid_argument("subtract: incompatible maps");
  const auto& a = f.source();
  std::vector<Element> imgs(a.rank());
  for (std::size_t j = 0; j < a.rank(); ++j)
    imgs[j] = f.target().sub(f(a.basis(j)), g(a.basis(j)));
  return GroupMap::from_basis_images(a, f.target(), imgs);
}

bool is_endomorphism(const GroupMap& f) { return f.source() == f.target(); }

GroupMap one_minus(const GroupMap& f) {
  if (!is_endomorphism(f))
    throw std::invalid_argument("one_minus: not an endomorphism");
  return subtract(GroupMap::identity(f.source()), f);
}

bool is_automorphism(const GroupMap& f) {
  if (!is_endomorphism(f))
    return false;
  std::vector<bool> seen(f.target().order(), false);
  for (Element x : f.table()) {
    if (seen[x])
      return false;
    seen[x] = true;
  }
  return true;
}

GroupMap inverse(const GroupMap& f) {
  if (f.source().order() != f.target().order())
    throw std::invalid_argument("inverse: map is not bijective");
  std::vector<Element> inv(f.target().order(), 0);
  std::vector<bool> seen(f.target().order(), false);
  for (Element a = 0; a < f.source().order(); ++a) {
    if (seen[f(a)])
      throw std::invalid_argument("inverse: map is not bijective");
    seen[f(a)] = true;
    inv[f(a)] = a;
  }
  return GroupMap::from_table(f.target(), f.source(), std::move(inv));
}

// ---------------------------------------------------------------------------
// Subgroups

Subgroup::Subgroup(FiniteAbelianGroup parent, std::vector<Element> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  member_.assign(parent_.order(), false);
  for (Element e : elements_) {
    if (e >= parent_.order())
      throw std::invalid_argument("subgroup: element out of range");
    member_[e] = true;
  }
  if (elements_.empty() || elements_.front() != 0)
    throw std::invalid_argument("subgroup: must contain zero");
  for (Element a : elements_)
    for (Element b : elements_)
      if (!member_[parent_.sub(a, b)])
        throw std::invalid_argument("subgroup: not closed");
}

Subgroup subgroup_generated(const FiniteAbelianGroup& a, std::span<const Element> generators) {
  std::vector<bool> member(a.order(), false);
  std::vector<Element> elems{0};
  member[0] = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (Element g : generators) {
      Element x = a.add(elems[i], g);
      if (!member[x]) {
        member[x] = true;
        elems.push_back(x);
      }
    }
  }
  return Subgroup(a, std::move(elems));
}

Subgroup image(const GroupMap& f) {
  return Subgroup(f.target(), std::vector<Element>(f.table().begin(), f.table().end()));
}

Subgroup kernel(const GroupMap& f) {
  std::vector<Element> k;
  for (Element a = 0; a < f.source().order(); ++a)
    if (f(a) == 0)
      k.push_back(a);
  return Subgroup(f.source(), std::move(k));
}

Subgroup intersection(const Subgroup& s, const Subgroup& t) {
  if (!(s.parent() == t.parent()))
    throw std::invalid_argument("intersection: different parents");
  std::vector<Element> e;
  for (Element a : s.elements())
    if (t.contains(a))
      e.push_back(a);
  return Subgroup(s.parent(), std::move(e));
}

namespace {

// coset id of every element; ids ordered by least element.
std::vector<std::size_t> coset_ids(const Subgroup& s, std::size_t* count) {
  const auto& a = s.parent();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> id(a.order(), unset);
  std::size_t next = 0;
  for (Element x = 0; x < a.order(); ++x) {
    if (id[x] != unset)
      continue;
    for (Element h : s.elements())
      id[a.add(x, h)] = next;
    ++next;
  }
  if (count)
    *count = next;
  return id;
}

}  // namespace

std::vector<std::vector<Element>> cosets(const Subgroup& s) {
  std::size_t count = 0;
  auto id = coset_ids(s, &count);
  std::vector<std::vector<Element>> out(count);
  for (Element x = 0; x < id.size(); ++x)
    out[id[x]].push_back(x);
  return out;
}

std::vector<Element> transversal(const Subgroup& s) {
  auto cs = cosets(s);
  std::vector<Element> t;
  t.reserve(cs.size());
  for (const auto& c : cs)
    t.push_back(c.front());
  return t;
}

// ---------------------------------------------------------------------------
// Structure of abstract abelian groups

Decomposition decompose(std::size_t order,
                        const std::function<std::size_t(std::size_t, std::size_t)>& add) {
  std::vector<bool> in_h(order, false);
  std::vector<std::size_t> h{0};
  in_h[0] = true;

  struct Gen {
    std::size_t element;
    std::uint32_t order;
  };
  std::vector<Gen> gens;

  auto order_in = [&](std::size_t x, const std::vector<bool>& member) {
    std::uint32_t j = 1;
    std::size_t y = x;
    while (!member[y]) {
      y = add(y, x);
      ++j;
    }
    return j;
  };
  std::vector<bool> only_zero(order, false);
  only_zero[0] = true;

  while (h.size() < order) {
    std::uint32_t best = 0;
    for (std::size_t x = 0; x < order; ++x)
      best = std::max(best, order_in(x, in_h));
    // A representative of a maximal-order coset whose own order matches
    // spans a cyclic summand complementing h.
    std::size_t pick = order;
    for (std::size_t x = 0; x < order && pick == order; ++x)
      if (order_in(x, in_h) == best && order_in(x, only_zero) == best)
        pick = x;
    if (pick == order)
      throw std::logic_error("decompose: input is not a finite abelian group");
    gens.push_back({pick, best});
    std::vector<std::size_t> next;
    next.reserve(h.size() * best);
    std::size_t multiple = 0;
    for (std::uint32_t j = 0; j < best; ++j) {
      for (std::size_t y : h)
        next.push_back(add(y, multiple));
      multiple = add(multiple, pick);
    }
    for (std::size_t y : next)
      in_h[y] = true;
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next.size() != h.size() * best)
      throw std::logic_error("decompose: summand not direct");
    h = std::move(next);
  }

  std::reverse(gens.begin(), gens.end());  // ascending orders
  std::vector<std::uint32_t> moduli;
  for (const auto& g : gens)
    moduli.push_back(g.order);
  FiniteAbelianGroup group(moduli);

  std::vector<std::vector<std::size_t>> multiples(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::size_t y = 0;
    for (std::uint32_t j = 0; j < gens[i].order; ++j) {
      multiples[i].push_back(y);
      y = add(y, gens[i].element);
    }
  }
  Decomposition d{group, std::vector<std::size_t>(order)};
  for (Element g = 0; g < group.order(); ++g) {
    auto c = group.coords(g);
    std::size_t y = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
      y = add(y, multiples[i][c[i]]);
    d.to_local[g] = y;
  }
  return d;
}

CanonicalForm canonical_form(const FiniteAbelianGroup& a) {
  if (a.is_canonical())
    return {a, GroupMap::identity(a), GroupMap::identity(a)};
  auto d = decompose(a.order(), [&](std::size_t x, std::size_t y) {
    return a.add(static_cast<Element>(x), static_cast<Element>(y));
  });
  std::vector<Element> table(d.to_local.begin(), d.to_local.end());
  GroupMap from = GroupMap::from_table(d.group, a, std::move(table));
  GroupMap to = inverse(from);
  return {d.group, std::move(to), std::move(from)};
}

SubgroupStructure subgroup_structure(const Subgroup& s) {
  const auto& a = s.parent();
  std::vector<std::size_t> local(a.order(), 0);
  for (std::size_t i = 0; i < s.size(); ++i)
    local[s.elements()[i]] = i;
  auto d = decompose(s.size(), [&](std::size_t x, std::size_t y) {
    return local[a.add(s.elements()[x], s.elements()[y])];
  });
  std::vector<Element> table(d.group.order());
  for (Element g = 0; g < d.group.order(); ++g)
    table[g] = s.elements()[d.to_local[g]];
  GroupMap inclusion = GroupMap::from_table(d.group, a, std::move(table));
  return {d.group, std::move(inclusion)};
}

Quotient quotient_structure(const Subgroup& s) {
  const auto& a = s.parent();
  std::size_t count = 0;
  auto id = coset_ids(s, &count);
  std::vector<Element> rep(count);
  for (Element x = a.order(); x-- > 0;)
    rep[id[x]] = x;
  auto d = decompose(count, [&](std::size_t x, std::size_t y) {
    return id[a.add(rep[x], rep[y])];
  });
  std::vector<Element> canon_of(count);
  for (Element g = 0; g < d.group.order(); ++g)
    canon_of[d.to_local[g]] = g;
  std::vector<Element> proj(a.order());
  for (Element x = 0; x < a.order(); ++x)
    proj[x] = canon_of[id[x]];
  std::vector<Element> lift(d.group.order());
  for (Element g = 0; g < d.group.order(); ++g)
    lift[g] = rep[d.to_local[g]];
  return {d.group, GroupMap::from_table(a, d.group, std::move(proj)), std::move(lift)};
}

// ---------------------------------------------------------------------------
// Multitransversals

namespace {

Multitransversal multitransversal_impl(std::span<const Element> d, const Subgroup& s,
                                       const Subgroup* within) {
  std::size_t count = 0;
  auto id = coset_ids(s, &count);
  std::vector<std::size_t> hits(count, 0);
  std::vector<bool> block(count, within == nullptr);
  if (within)
    for (Element w : within->elements())
      block[id[w]] = true;
  for (Element x : d) {
    if (within && !within->contains(x))
      return {false, 0};
    ++hits[id[x]];
  }
  std::optional<std::size_t> mult;
  for (std::size_t c = 0; c < count; ++c) {
    if (!block[c])
      continue;
    if (!mult)
      mult = hits[c];
    else if (*mult != hits[c])
      return {false, 0};
  }
  return {true, mult.value_or(0)};
}

}  // namespace

Multitransversal is_multitransversal(std::span<const Element> d, const Subgroup& s) {
  return multitransversal_impl(d, s, nullptr);
}

Multitransversal is_multitransversal(std::span<const Element> d, const Subgroup& s,
                                     const Subgroup& within) {
  return multitransversal_impl(d, s, &within);
}

ImageMultiplicity multitransversal_image_check(const GroupMap& phi, std::span<const Element> t) {
  if (!is_endomorphism(phi))
    throw std::invalid_argument("multitransversal_image_check: not an endomorphism");
  Subgroup im = image(phi);
  auto tr = is_multitransversal(t, im);
  if (!tr.ok || tr.multiplicity != 1)
    throw std::invalid_argument("multitransversal_image_check: not a transversal of A/Im");
  Subgroup im2 = image(compose(phi, phi));
  std::vector<Element> phi_t;
  for (Element x : t)
    phi_t.push_back(phi(x));
  auto mt = is_multitransversal(phi_t, im2, im);
  Subgroup ker = kernel(phi);
  std::size_t kq = ker.size() / intersection(ker, im).size();
  return {mt.ok, mt.multiplicity, kq};
}

// ---------------------------------------------------------------------------
// Automorphisms

std::vector<GroupMap> automorphism_group(const FiniteAbelianGroup& a) {
  const auto& g = guards();
  if (a.order() > g.aut_order)
    throw GuardExceeded("automorphism_group: |A|", a.order(), g.aut_order);

  const std::size_t r = a.rank();
  std::vector<std::vector<Element>> candidates(r);
  std::size_t product = 1;
  for (std::size_t j = 0; j < r; ++j) {
    for (Element x = 0; x < a.order(); ++x)
      if (a.order_of(x) == a.moduli()[j])
        candidates[j].push_back(x);
    product *= std::max<std::size_t>(candidates[j].size(), 1);
    if (product > g.aut_candidates)
      throw GuardExceeded("automorphism_group: candidate images for " + a.to_string(), product,
                          g.aut_candidates);
  }

  std::vector<GroupMap> out;
  std::vector<Element> chosen(r, 0);
  // span[j]: images of all combinations of e_0..e_{j-1}.
  std::vector<std::vector<Element>> span(r + 1);
  span[0] = {0};
  std::vector<bool> seen(a.order(), false);

  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == r) {
      out.push_back(GroupMap::from_basis_images(a, a, chosen));
      return;
    }
    for (Element x : candidates[j]) {
      std::vector<Element>& next = span[j + 1];
      next.clear();
      bool injective = true;
      Element multiple = 0;
      for (std::uint32_t c = 0; c < a.moduli()[j] && injective; ++c) {
        for (Element y : span[j]) {
          Element z = a.add(y, multiple);
          if (seen[z]) {
            injective = false;
            break;
          }
          seen[z] = true;
          next.push_back(z);
        }
        multiple = a.add(multiple, x);
      }
      for (Element z : next)
        seen[z] = false;
      if (!injective)
        continue;
      chosen[j] = x;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(),
            [](const GroupMap& p, const GroupMap& q) { return p.table() < q.table(); });
  return out;
}

std::vector<ConjugacyClass> conjugacy_classes(std::span<const GroupMap> group) {
  std::vector<std::size_t> order(group.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return group[i].table() < group[j].table();
  });
  std::unordered_map<std::vector<Element>, std::size_t, TableHash> index;
  for (std::size_t i = 0; i < group.size(); ++i)
    index.emplace(group[i].table(), i);
  std::vector<std::vector<Element>> inv(group.size());
  for (std::size_t i = 0; i < group.size(); ++i)
    inv[i] = inverse_table(group[i].table());

  std::vector<bool> done(group.size(), false);
  std::vector<ConjugacyClass> classes;
  std::vector<Element> conj;
  for (std::size_t i : order) {
    if (done[i])
      continue;
    const auto& f = group[i].table();
    std::size_t size = 0;
    for (std::size_t g = 0; g < group.size(); ++g) {
      const auto& gt = group[g].table();
      conj.resize(f.size());
      for (std::size_t x = 0; x < f.size(); ++x)
        conj[x] = gt[f[inv[g][x]]];
      auto it = index.find(conj);
      if (it == index.end())
        throw std::invalid_argument("conjugacy_classes: input is not closed under conjugation");
      if (!done[it->second]) {
        done[it->second] = true;
        ++size;
      }
    }
    classes.push_back({group[i], size});
  }
  return classes;
}

std::vector<GroupMap> centralizer(std::span<const GroupMap> group, const GroupMap& f) {
  std::vector<GroupMap> out;
  const auto& ft = f.table();
  for (const auto& g : group) {
    const auto& gt = g.table();
    bool ok = true;
    for (std::size_t x = 0; x < ft.size() && ok; ++x)
      ok = gt[ft[x]] == ft[gt[x]];
    if (ok)
      out.push_back(g);
  }
  return out;
}

GroupMap induced_on_quotient(const GroupMap& psi, const Quotient& quotient, const Subgroup& s) {
  for (Element x : s.elements())
    if (!s.contains(psi(x)))
      throw std::invalid_argument("induced_on_quotient: subgroup is not invariant");
  const auto& q = quotient.group;
  std::vector<Element> imgs(q.rank());
  for (std::size_t j = 0; j < q.rank(); ++j)
    imgs[j] = quotient.projection(psi(quotient.lift[q.basis(j)]));
  return GroupMap::from_basis_images(q, q, imgs);
}

std::vector<FiniteAbelianGroup> abelian_groups_of_order(std::size_t m) {
  std::vector<std::vector<std::uint32_t>> chains;
  std::vector<std::uint32_t> chain;
  auto rec = [&](auto&& self, std::size_t remaining, std::size_t last) -> void {
    if (remaining == 1) {
      chains.push_back(chain);
      return;
    }
    for (std::size_t d = 2; d <= remaining; ++d) {
      if (remaining % d != 0 || d % last != 0)
        continue;
      chain.push_back(static_cast<std::uint32_t>(d));
      self(self, remaining / d, d);
      chain.pop_back();
    }
  };
  if (m == 0)
    throw std::invalid_argument("abelian_groups_of_order: order must be positive");
  rec(rec, m, 1);
  std::sort(chains.begin(), chains.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size())
      return x.size() < y.size();
    return x < y;
  });
  std::vector<FiniteAbelianGroup> out;
  for (auto& c : chains)
    out.emplace_back(std::move(c));
  return out;
}

}  // namespace quandle
