#include "quandle/recognition.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "quandle/constructions.hpp"
#include "quandle/guard.hpp"

namespace quandle {

std::string to_string(Reason r) {
  switch (r) {
    case Reason::OK:
      return "OK";
    case Reason::NotSemiregular:
      return "NotSemiregular";
    case Reason::NotAbelian:
      return "NotAbelian";
    case Reason::NotTiny:
      return "NotTiny";
    case Reason::Unbalanced:
      return "Unbalanced";
    case Reason::CapExceeded:
      return "CapExceeded";
  }
  return "unknown";
}

namespace {

using PermSet = std::unordered_set<Permutation, PermutationHash>;

RecognitionReport reject(Reason r, std::vector<Permutation> perms = {},
                         std::vector<Point> elems = {}, std::vector<std::size_t> counts = {}) {
  return {false, r, std::move(perms), std::move(elems), std::move(counts)};
}

std::vector<Permutation> distinct_generators(const Quandle& q) {
  auto gens = dis_generators(q, 0);
  std::vector<Permutation> out;
  PermSet seen;
  for (auto& g : gens)
    if (seen.insert(g).second)
      out.push_back(std::move(g));
  return out;
}

bool bad_fixed_points(const Permutation& p, std::size_t n) {
  std::size_t f = fixed_point_count(p);
  return f > 0 && f < n;
}

// Lines 3-6 of both algorithms. Rejects on the first failing generator.
std::optional<RecognitionReport> check_generators(const std::vector<Permutation>& d,
                                                  std::size_t n) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (bad_fixed_points(d[i], n))
      return reject(Reason::NotSemiregular, {d[i]}, {}, {fixed_point_count(d[i])});
    for (std::size_t j = 0; j < d.size(); ++j)
      if (!commute(d[i], d[j]))
        return reject(Reason::NotAbelian, {d[i], d[j]});
  }
  return std::nullopt;
}

}  // namespace

RecognitionReport is_affine(const Quandle& q) {
  const std::size_t n = q.size();
  if (n == 0)
    return {};
  auto d = distinct_generators(q);
  PermSet members(d.begin(), d.end());
  for (const auto& a : d) {
    if (bad_fixed_points(a, n))
      return reject(Reason::NotSemiregular, {a}, {}, {fixed_point_count(a)});
    for (const auto& b : d) {
      if (!commute(a, b))
        return reject(Reason::NotAbelian, {a, b});
      if (!members.count(compose(a, b)))
        return reject(Reason::NotTiny, {a, b});
    }
  }
  const Point e = 0;
  std::vector<std::size_t> m(n, 0);
  for (Point x = 0; x < n; ++x)
    ++m[q(x, e)];
  for (Point x = 0; x < n; ++x) {
    Point y = q(x, e);
    if (m[y] != m[e])
      return reject(Reason::Unbalanced, {}, {e, y}, {m[e], m[y]});
  }
  return {};
}

RecognitionReport is_quasi_affine(const Quandle& q) {
  const std::size_t n = q.size();
  if (n == 0)
    return {};
  auto d = distinct_generators(q);
  if (auto r = check_generators(d, n))
    return *r;
  PermSet members(d.begin(), d.end());
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i; j < d.size(); ++j)
      pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    Permutation ab = compose(d[i], d[j]);
    if (members.count(ab))
      continue;
    if (d.size() >= n)
      return reject(Reason::CapExceeded, {ab}, {}, {d.size()});
    if (bad_fixed_points(ab, n))
      return reject(Reason::NotSemiregular, {ab}, {}, {fixed_point_count(ab)});
    members.insert(ab);
    d.push_back(std::move(ab));
    const std::size_t k = d.size() - 1;
    for (std::size_t t = 0; t <= k; ++t)
      pairs.emplace_back(t, k);
  }
  return {};
}

bool is_tiny_dis(const Quandle& q) {
  if (q.size() == 0)
    return true;
  auto d = distinct_generators(q);
  auto group = generate_closure(d, q.size(), d.size());
  return group.has_value() && group->size() == d.size();
}

bool balance_check(const Quandle& q, Point x) {
  if (q.size() == 0)
    return true;
  auto od = orbit_decomposition(q);
  auto m = occurrence_counts(q, x);
  const auto& orbit = od.orbits[od.orbit_of[x]];
  return std::all_of(orbit.begin(), orbit.end(), [&](Point y) { return m[y] == m[x]; });
}

bool balance_check_all(const Quandle& q) {
  for (Point x = 0; x < q.size(); ++x)
    if (!balance_check(q, x))
      return false;
  return true;
}

bool abelianness_oracle(const Quandle& q) {
  const std::size_t n = q.size();
  if (n > guards().oracle_order)
    throw GuardExceeded("abelianness oracle: quandle order", n, guards().oracle_order);
  if (n <= 1)
    return true;
  const std::size_t N = n * n;
  auto mul = [&](std::size_t p, std::size_t r) {
    return q(p / n, r / n) * n + q(p % n, r % n);
  };
  auto div = [&](std::size_t p, std::size_t r) {
    return q.left_divide(p / n, r / n) * n + q.left_divide(p % n, r % n);
  };
  std::vector<std::size_t> parent(N);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<std::size_t, std::size_t>> work;
  auto merge = [&](std::size_t a, std::size_t b) {
    std::size_t ra = find(a), rb = find(b);
    if (ra == rb)
      return;
    parent[std::max(ra, rb)] = std::min(ra, rb);
    work.emplace_back(a, b);
  };
  for (std::size_t a = 1; a < n; ++a)
    merge(0, a * n + a);
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    for (std::size_t w = 0; w < N; ++w) {
      merge(mul(a, w), mul(b, w));
      merge(mul(w, a), mul(w, b));
      merge(div(a, w), div(b, w));
      merge(div(w, a), div(w, b));
    }
  }
  std::size_t diag = find(0);
  for (std::size_t p = 0; p < N; ++p)
    if (p / n != p % n && find(p) == diag)
      return false;
  return true;
}

std::optional<AffineWitness> affine_witness_search(const Quandle& q) {
  const std::size_t n = q.size();
  if (n == 0)
    return std::nullopt;
  for (const auto& a : abelian_groups_of_order(n)) {
    auto auts = automorphism_group(a);
    for (const auto& cls : conjugacy_classes(auts)) {
      Quandle aff = affine_quandle(a, cls.representative);
      if (auto iso = brute_force_isomorphism(aff, q))
        return AffineWitness{a, cls.representative, std::move(*iso)};
    }
  }
  return std::nullopt;
}

}  // namespace quandle
