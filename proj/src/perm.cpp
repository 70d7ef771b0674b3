#include "quandle/perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace quandle {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw std::invalid_argument("permutation: images are not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> id(degree);
  std::iota(id.begin(), id.end(), Point{0});
  return Permutation(std::move(id), Unchecked{});
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::initializer_list<std::initializer_list<Point>> cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  for (const auto& cycle : cycles) {
    std::vector<Point> c(cycle);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree)
        throw std::invalid_argument("permutation: cycle point out of range");
      img[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv), Unchecked{});
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i)
      s += ' ';
    s += std::to_string(images_[i]);
  }
  return s + "]";
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<Point> r(q.degree());
  for (std::size_t x = 0; x < r.size(); ++x)
    r[x] = p.images_[q.images_[x]];
  return Permutation(std::move(r), Permutation::Unchecked{});
}

std::size_t fixed_point_count(const Permutation& p) {
  std::size_t c = 0;
  for (std::size_t x = 0; x < p.degree(); ++x)
    if (p(static_cast<Point>(x)) == x)
      ++c;
  return c;
}

bool commute(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("commute: degree mismatch");
  for (std::size_t x = 0; x < p.degree(); ++x)
    if (p(q(static_cast<Point>(x))) != q(p(static_cast<Point>(x))))
      return false;
  return true;
}

// ---------------------------------------------------------------------------

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::vector<Permutation> elements)
    : degree_(degree), generators_(std::move(generators)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::optional<std::size_t> PermGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p))
    return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::optional<PermGroup> generate_closure(std::span<const Permutation> generators,
                                          std::size_t degree,
                                          std::optional<std::size_t> cap) {
  std::vector<Permutation> d;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  auto insert = [&](Permutation p) -> bool {
    if (p.degree() != degree)
      throw std::invalid_argument("generate_closure: degree mismatch");
    if (index.count(p))
      return false;
    index.emplace(p, d.size());
    d.push_back(std::move(p));
    return true;
  };
  for (const auto& g : generators)
    insert(g);
  if (d.empty())
    insert(Permutation::identity(degree));
  if (cap && d.size() > *cap)
    return std::nullopt;

  // Unordered pairs {i, j}, i <= j; both products are taken so that the
  // closure is correct for non-abelian groups as well.
  std::deque<std::pair<std::size_t, std::size_t>> queue;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i; j < d.size(); ++j)
      queue.emplace_back(i, j);
  while (!queue.empty()) {
    auto [i, j] = queue.front();
    queue.pop_front();
    for (int side = 0; side < (i == j ? 1 : 2); ++side) {
      Permutation prod = side == 0 ? compose(d[i], d[j]) : compose(d[j], d[i]);
      if (index.count(prod))
        continue;
      if (cap && d.size() >= *cap)
        return std::nullopt;
      insert(std::move(prod));
      std::size_t k = d.size() - 1;
      for (std::size_t m = 0; m <= k; ++m)
        queue.emplace_back(m, k);
    }
  }
  std::vector<Permutation> gens(generators.begin(), generators.end());
  return PermGroup(degree, std::move(gens), std::move(d));
}

bool is_abelian_generators(std::span<const Permutation> generators) {
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (!commute(generators[i], generators[j]))
        return false;
  return true;
}

bool is_abelian(const PermGroup& group) { return is_abelian_generators(group.elements()); }

bool is_semiregular(const PermGroup& group) {
  for (const auto& g : group.elements())
    if (!g.is_identity() && fixed_point_count(g) > 0)
      return false;
  return true;
}

bool is_semiregular(std::span<const Permutation> generators, std::size_t degree) {
  for (const auto& g : generators)
    if (!g.is_identity() && fixed_point_count(g) > 0)
      return false;
  auto group = generate_closure(generators, degree, degree);
  return group && is_semiregular(*group);
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

std::vector<std::vector<Point>> orbits(std::span<const Permutation> generators,
                                       std::size_t degree) {
  std::vector<std::size_t> parent(degree);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (const auto& g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("orbits: degree mismatch");
    for (std::size_t x = 0; x < degree; ++x) {
      std::size_t a = find_root(parent, x), b = find_root(parent, g(static_cast<Point>(x)));
      if (a != b)
        parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<Point>> out;
  std::vector<std::size_t> slot(degree, static_cast<std::size_t>(-1));
  for (std::size_t x = 0; x < degree; ++x) {
    std::size_t r = find_root(parent, x);
    if (slot[r] == static_cast<std::size_t>(-1)) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(static_cast<Point>(x));
  }
  return out;
}

std::vector<std::vector<Point>> orbits(const PermGroup& group) {
  return orbits(group.generators().empty() ? group.elements() : group.generators(),
                group.degree());
}

AbelianStructure abstract_abelian_structure(const PermGroup& group) {
  if (!is_abelian_generators(group.generators()) || !is_abelian(group))
    throw std::invalid_argument("abstract_abelian_structure: group is not abelian");
  const auto& el = group.elements();
  const std::size_t n = el.size();
  std::vector<std::size_t> mult(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      mult[i * n + j] = *group.index_of(compose(el[i], el[j]));
  // elements()[0] is the identity.
  auto d = decompose(n, [&](std::size_t a, std::size_t b) { return mult[a * n + b]; });
  AbelianStructure s{d.group, std::vector<Element>(n), d.to_local};
  for (Element g = 0; g < d.group.order(); ++g)
    s.to_group[d.to_local[g]] = g;
  return s;
}

}  // namespace quandle
