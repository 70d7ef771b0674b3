#include "quandle/enumeration.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <numeric>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "quandle/guard.hpp"
#include "quandle/isomorphism.hpp"

namespace quandle {

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x)
    x = parent[x] = parent[parent[x]];
  return x;
}

void compositions(std::size_t parts, std::size_t total, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() + 1 == parts) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (std::size_t v = 0; v <= total; ++v) {
    cur.push_back(v);
    compositions(parts, total - v, cur, out);
    cur.pop_back();
  }
}

bool support_generates(const FiniteAbelianGroup& q, const std::vector<std::size_t>& c) {
  std::vector<Element> support;
  for (Element a = 0; a < c.size(); ++a)
    if (c[a] > 0)
      support.push_back(a);
  std::vector<Element> diffs;
  for (Element a : support)
    diffs.push_back(q.sub(a, support.front()));
  return subgroup_generated(q, diffs).size() == q.order();
}

}  // namespace

EpsilonResult epsilon(const FiniteAbelianGroup& a, const GroupMap& f, std::size_t k,
                      std::span<const GroupMap> auts) {
  if (!(f.source() == a) || !is_automorphism(f))
    throw std::invalid_argument("epsilon: f is not an automorphism");
  if (k == 0)
    throw std::invalid_argument("epsilon: k must be positive");
  GroupMap g = one_minus(f);
  Subgroup s = image(g);
  Quotient quo = quotient_structure(s);
  const auto& q = quo.group;
  const std::size_t qn = q.order();

  // Permutations of the quotient generating the acting group.
  std::vector<std::vector<Element>> actions;
  for (std::size_t j = 0; j < q.rank(); ++j) {
    std::vector<Element> t(qn);
    for (Element x = 0; x < qn; ++x)
      t[x] = q.add(x, q.basis(j));
    actions.push_back(std::move(t));
  }
  {
    std::vector<std::vector<Element>> induced;
    for (const auto& psi : centralizer(auts, f))
      induced.push_back(induced_on_quotient(psi, quo, s).table());
    std::sort(induced.begin(), induced.end());
    induced.erase(std::unique(induced.begin(), induced.end()), induced.end());
    for (auto& t : induced)
      actions.push_back(std::move(t));
  }

  std::vector<std::vector<std::size_t>> all, vectors;
  std::vector<std::size_t> cur;
  compositions(qn, k, cur, all);
  for (auto& c : all)
    if (support_generates(q, c))
      vectors.push_back(std::move(c));

  auto encode = [&](const std::vector<std::size_t>& c) {
    std::uint64_t code = 0;
    for (std::size_t x : c)
      code = code * (k + 1) + x;
    return code;
  };
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < vectors.size(); ++i)
    index.emplace(encode(vectors[i]), i);

  std::vector<std::size_t> parent(vectors.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::vector<std::size_t> image_vec(qn);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (const auto& t : actions) {
      for (Element x = 0; x < qn; ++x)
        image_vec[t[x]] = vectors[i][x];
      std::size_t j = index.at(encode(image_vec));
      std::size_t ri = find_root(parent, i), rj = find_root(parent, j);
      if (ri != rj)
        parent[std::max(ri, rj)] = std::min(ri, rj);
    }

  const bool latin = k == 1 && is_automorphism(g);
  EpsilonResult res{q, {}};
  // Vectors are in lexicographic order, so each root is its orbit's least member.
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (find_root(parent, i) != i)
      continue;
    const auto& c = vectors[i];
    std::vector<Element> d;
    for (Element x = 0; x < qn; ++x)
      d.insert(d.end(), c[x], quo.lift[x]);
    bool affine = std::all_of(c.begin(), c.end(), [&](std::size_t v) { return v == c[0]; });
    res.classes.push_back({c, ExtensionDescriptor{a, f, std::move(d)}, affine, latin});
  }
  return res;
}

EpsilonResult epsilon(const FiniteAbelianGroup& a, const GroupMap& f, std::size_t k) {
  auto auts = cached_automorphism_group(a);
  return epsilon(a, f, k, *auts);
}

std::size_t epsilon_2(std::size_t k) { return k / 2; }

std::size_t epsilon_3(std::size_t k) {
  static constexpr long xi[6] = {4, -3, 0, 1, 0, -3};
  long kk = static_cast<long>(k);
  return static_cast<std::size_t>((kk * kk + 6 * kk - 4 + xi[k % 6]) / 12);
}

std::optional<std::size_t> epsilon_closed_form(const FiniteAbelianGroup& a, const GroupMap& f,
                                               std::size_t k) {
  GroupMap g = one_minus(f);
  if (image(g).size() == a.order())
    return 1;
  if (!(f == GroupMap::identity(a)))
    return std::nullopt;
  CanonicalForm c = canonical_form(a);
  const auto& m = c.group.moduli();
  if (k == 2)
    return c.group.is_cyclic() ? 1 : 0;
  if (m == std::vector<std::uint32_t>{2})
    return epsilon_2(k);
  if (m == std::vector<std::uint32_t>{3})
    return epsilon_3(k);
  if (k == 3 && (m == std::vector<std::uint32_t>{4} || m == std::vector<std::uint32_t>{5}))
    return 2;
  if (k == 3 && m == std::vector<std::uint32_t>{2, 2})
    return 1;
  return std::nullopt;
}

namespace {

std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> p;
  for (std::size_t d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      p.push_back(d);
      n /= d;
    }
  if (n > 1)
    p.push_back(n);
  return p;
}

// epsilon(Z_p, 1, k), closed form where known.
std::size_t epsilon_cyclic(std::size_t p, std::size_t k) {
  auto z = FiniteAbelianGroup::cyclic(static_cast<std::uint32_t>(p));
  GroupMap id = GroupMap::identity(z);
  if (auto v = epsilon_closed_form(z, id, k))
    return *v;
  return epsilon(z, id, k).count();
}

}  // namespace

std::optional<std::size_t> closed_form_order_counts(std::size_t n) {
  auto p = prime_factors(n);
  if (p.size() == 1)
    return p[0] - 1;
  if (p.size() != 2)
    return std::nullopt;
  std::size_t a = p[0], b = p[1];
  if (a == b)
    return 2 * a * a - 2 * a - 2 + epsilon_cyclic(a, a);
  return a * b - a - b + 1 + epsilon_cyclic(a, b) + epsilon_cyclic(b, a);
}

// ---------------------------------------------------------------------------

std::size_t Enumeration::total() const {
  std::size_t t = 0;
  for (const auto& c : cells)
    t += c.count();
  return t;
}

std::size_t Enumeration::affine() const {
  std::size_t t = 0;
  for (const auto* c : classes())
    t += c->affine;
  return t;
}

std::size_t Enumeration::latin() const {
  std::size_t t = 0;
  for (const auto* c : classes())
    t += c->latin;
  return t;
}

std::vector<std::pair<std::size_t, std::size_t>> Enumeration::by_k() const {
  std::map<std::size_t, std::size_t> m;
  for (std::size_t k = 1; k <= n; ++k)
    if (n % k == 0)
      m[k] = 0;
  for (const auto& c : cells)
    m[c.k] += c.count();
  return {m.begin(), m.end()};
}

std::vector<const EpsilonClass*> Enumeration::classes() const {
  std::vector<const EpsilonClass*> out;
  for (const auto& c : cells)
    for (const auto& cls : c.result.classes)
      out.push_back(&cls);
  return out;
}

namespace {

struct CellSpec {
  std::size_t k;
  FiniteAbelianGroup group;
  GroupMap f;
  std::size_t class_size;
  std::shared_ptr<const std::vector<GroupMap>> auts;
};

std::vector<CellSpec> plan_cells(std::size_t n) {
  if (n == 0)
    throw std::invalid_argument("enumerate: order must be positive");
  if (n > guards().enumerate_order)
    throw GuardExceeded("enumerate: order", n, guards().enumerate_order);
  std::vector<CellSpec> specs;
  for (std::size_t k = 1; k <= n; ++k) {
    if (n % k != 0)
      continue;
    for (const auto& a : abelian_groups_of_order(n / k)) {
      auto auts = cached_automorphism_group(a);
      for (auto& cls : conjugacy_classes(*auts))
        specs.push_back({k, a, cls.representative, cls.size, auts});
    }
  }
  return specs;
}

EnumerationCell make_cell(const CellSpec& s, EpsilonResult r) {
  return {s.k, s.group, s.f, s.class_size, std::move(r)};
}

}  // namespace

Enumeration enumerate_quasi_affine_serial(std::size_t n) {
  Enumeration e{n, {}};
  for (const auto& s : plan_cells(n))
    e.cells.push_back(make_cell(s, epsilon(s.group, s.f, s.k, *s.auts)));
  return e;
}

Enumeration enumerate_quasi_affine(std::size_t n, int jobs) {
  if (jobs == 1)
    return enumerate_quasi_affine_serial(n);
  auto specs = plan_cells(n);
  std::vector<std::optional<EpsilonResult>> results(specs.size());
  std::exception_ptr error;
  const long count = static_cast<long>(specs.size());
#ifdef _OPENMP
  int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (long i = 0; i < count; ++i) {
    try {
      const auto& s = specs[i];
      results[i] = epsilon(s.group, s.f, s.k, *s.auts);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!error)
        error = std::current_exception();
    }
  }
  if (error)
    std::rethrow_exception(error);
  Enumeration e{n, {}};
  for (std::size_t i = 0; i < specs.size(); ++i)
    e.cells.push_back(make_cell(specs[i], std::move(*results[i])));
  return e;
}

bool same_result(const Enumeration& a, const Enumeration& b) {
  if (a.n != b.n || a.cells.size() != b.cells.size())
    return false;
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    const auto &x = a.cells[i], &y = b.cells[i];
    if (x.k != y.k || !(x.group == y.group) || !(x.f == y.f) || x.count() != y.count())
      return false;
    for (std::size_t j = 0; j < x.count(); ++j) {
      const auto &p = x.result.classes[j], &q = y.result.classes[j];
      if (p.counts != q.counts || p.descriptor.d != q.descriptor.d || p.affine != q.affine ||
          p.latin != q.latin)
        return false;
    }
  }
  return true;
}

CountTable count_table(std::size_t n_max, int jobs) {
  CountTable t;
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto e = enumerate_quasi_affine(n, jobs);
    t.quasi_affine.push_back(e.total());
    t.affine.push_back(e.affine());
    t.latin.push_back(e.latin());
  }
  return t;
}

// ---------------------------------------------------------------------------
// Brute force over tables

namespace {

class TableSearch {
 public:
  explicit TableSearch(std::size_t n) : n_(n), t_(n * n, -1), used_(n, 0) {
    for (std::size_t x = 0; x < n; ++x) {
      t_[x * n + x] = static_cast<int>(x);
      used_[x] = 1u << x;
    }
  }

  template <class Visit>
  void run(Visit&& visit) {
    rec(0, visit);
  }

 private:
  int at(std::size_t x, std::size_t y) const { return t_[x * n_ + y]; }

  // Left distributivity on every triple whose entries are all known.
  bool consistent() const {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) {
        int ab = at(a, b);
        if (ab < 0)
          continue;
        for (std::size_t c = 0; c < n_; ++c) {
          int bc = at(b, c), ac = at(a, c);
          if (bc < 0 || ac < 0)
            continue;
          int lhs = at(a, bc), rhs = at(ab, ac);
          if (lhs >= 0 && rhs >= 0 && lhs != rhs)
            return false;
        }
      }
    return true;
  }

  template <class Visit>
  void rec(std::size_t cell, Visit& visit) {
    while (cell < n_ * n_ && t_[cell] >= 0)
      ++cell;
    if (cell == n_ * n_) {
      visit(t_);
      return;
    }
    std::size_t x = cell / n_;
    for (std::size_t v = 0; v < n_; ++v) {
      if (used_[x] & (1u << v))
        continue;
      t_[cell] = static_cast<int>(v);
      used_[x] |= 1u << v;
      if (consistent())
        rec(cell + 1, visit);
      used_[x] &= ~(1u << v);
      t_[cell] = -1;
    }
  }

  std::size_t n_;
  std::vector<int> t_;
  std::vector<unsigned> used_;
};

// No relabeling gives a lexicographically smaller table.
bool is_lex_leader(const std::vector<int>& t, std::size_t n) {
  std::vector<std::size_t> s(n), inv(n);
  std::iota(s.begin(), s.end(), std::size_t{0});
  while (std::next_permutation(s.begin(), s.end())) {
    for (std::size_t i = 0; i < n; ++i)
      inv[s[i]] = i;
    for (std::size_t u = 0; u < n * n; ++u) {
      int relabeled = static_cast<int>(s[t[inv[u / n] * n + inv[u % n]]]);
      if (relabeled != t[u]) {
        if (relabeled < t[u])
          return false;
        break;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<Quandle> brute_force_enumerate_quandles(std::size_t n) {
  if (n > guards().brute_enumeration_order)
    throw GuardExceeded("brute-force enumeration: order", n, guards().brute_enumeration_order);
  if (n == 0)
    return {};
  std::vector<Quandle> out;
  TableSearch search(n);
  search.run([&](const std::vector<int>& t) {
    if (!is_lex_leader(t, n))
      return;
    Quandle q = Quandle::assume_valid(n, std::vector<Point>(t.begin(), t.end()));
    for (const auto& r : out)
      if (brute_force_isomorphism(q, r))
        return;
    out.push_back(std::move(q));
  });
  return out;
}

}  // namespace quandle
