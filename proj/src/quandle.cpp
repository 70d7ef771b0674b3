#include "quandle/quandle.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <numeric>

namespace quandle {

std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::Range:
      return "range";
    case Axiom::Idempotence:
      return "idempotence";
    case Axiom::LeftDivision:
      return "left-division";
    case Axiom::LeftDistributivity:
      return "left-distributivity";
  }
  return "unknown";
}

namespace {

std::string describe(const std::vector<AxiomViolation>& v) {
  if (v.empty())
    return "invalid quandle";
  const auto& a = v.front();
  return "invalid quandle: " + to_string(a.axiom) + " fails at (" + std::to_string(a.x) + ", " +
         std::to_string(a.y) + ", " + std::to_string(a.z) + ")";
}

}  // namespace

InvalidQuandle::InvalidQuandle(std::vector<AxiomViolation> violations)
    : std::invalid_argument(describe(violations)), violations_(std::move(violations)) {}

ValidationResult validate(const std::vector<std::vector<Point>>& rows,
                          std::size_t max_violations) {
  ValidationResult res;
  const std::size_t n = rows.size();
  auto full = [&] { return res.violations.size() >= max_violations; };
  for (std::size_t x = 0; x < n && !full(); ++x) {
    if (rows[x].size() != n) {
      res.violations.push_back({Axiom::Range, static_cast<Point>(x),
                                static_cast<Point>(rows[x].size()), 0});
      continue;
    }
    for (std::size_t y = 0; y < n && !full(); ++y)
      if (rows[x][y] >= n)
        res.violations.push_back({Axiom::Range, static_cast<Point>(x), static_cast<Point>(y), 0});
  }
  if (!res.violations.empty())
    return res;

  for (std::size_t x = 0; x < n && !full(); ++x) {
    if (rows[x][x] != x)
      res.violations.push_back({Axiom::Idempotence, static_cast<Point>(x), 0, 0});
    std::vector<bool> seen(n, false);
    for (std::size_t y = 0; y < n && !full(); ++y) {
      Point v = rows[x][y];
      if (seen[v])
        res.violations.push_back({Axiom::LeftDivision, static_cast<Point>(x), v, 0});
      seen[v] = true;
    }
  }
  for (std::size_t x = 0; x < n && !full(); ++x)
    for (std::size_t y = 0; y < n && !full(); ++y)
      for (std::size_t z = 0; z < n && !full(); ++z)
        if (rows[x][rows[y][z]] != rows[rows[x][y]][rows[x][z]])
          res.violations.push_back({Axiom::LeftDistributivity, static_cast<Point>(x),
                                    static_cast<Point>(y), static_cast<Point>(z)});
  if (res.violations.empty()) {
    std::vector<Point> flat;
    flat.reserve(n * n);
    for (const auto& r : rows)
      flat.insert(flat.end(), r.begin(), r.end());
    res.quandle = Quandle::assume_valid(n, std::move(flat));
  }
  return res;
}

Quandle::Quandle(std::vector<std::vector<Point>> rows) {
  auto res = validate(rows);
  if (!res.quandle)
    throw InvalidQuandle(std::move(res.violations));
  *this = std::move(*res.quandle);
}

Quandle::Quandle(std::size_t n, std::vector<Point> table) : n_(n), table_(std::move(table)) {
  build_division();
}

Quandle Quandle::assume_valid(std::size_t n, std::vector<Point> table) {
  assert(table.size() == n * n);
  return Quandle(n, std::move(table));
}

void Quandle::build_division() {
  ldiv_.assign(n_ * n_, 0);
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t z = 0; z < n_; ++z)
      ldiv_[x * n_ + table_[x * n_ + z]] = static_cast<Point>(z);
}

std::vector<std::vector<Point>> Quandle::rows() const {
  std::vector<std::vector<Point>> r(n_);
  for (std::size_t x = 0; x < n_; ++x)
    r[x].assign(table_.begin() + x * n_, table_.begin() + (x + 1) * n_);
  return r;
}

Permutation Quandle::left_translation(Point x) const {
  return Permutation(std::vector<Point>(row(x).begin(), row(x).end()));
}

std::vector<Permutation> left_translations(const Quandle& q) {
  std::vector<Permutation> out;
  out.reserve(q.size());
  for (Point x = 0; x < q.size(); ++x)
    out.push_back(q.left_translation(x));
  return out;
}

std::vector<Permutation> dis_generators(const Quandle& q, Point e) {
  if (q.size() == 0)
    return {};
  Permutation le_inv = q.left_translation(e).inverse();
  std::vector<Permutation> out;
  out.reserve(q.size());
  for (Point x = 0; x < q.size(); ++x)
    out.push_back(compose(q.left_translation(x), le_inv));
  return out;
}

bool is_medial(const Quandle& q) {
  auto gens = dis_generators(q);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return is_abelian_generators(gens);
}

OrbitDecomposition orbit_decomposition(const Quandle& q) {
  OrbitDecomposition d;
  d.orbits = orbits(left_translations(q), q.size());
  d.orbit_of.assign(q.size(), 0);
  for (std::size_t i = 0; i < d.orbits.size(); ++i) {
    d.transversal.push_back(d.orbits[i].front());
    for (Point x : d.orbits[i])
      d.orbit_of[x] = i;
  }
  return d;
}

std::vector<std::size_t> occurrence_counts(const Quandle& q, Point x) {
  std::vector<std::size_t> m(q.size(), 0);
  for (Point z = 0; z < q.size(); ++z)
    ++m[q(z, x)];
  return m;
}

Quandle direct_product(const Quandle& q, const Quandle& r) {
  const std::size_t n = q.size(), m = r.size(), nm = n * m;
  std::vector<Point> t(nm * nm);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < m; ++d)
          t[(a * m + b) * nm + (c * m + d)] =
              static_cast<Point>(q(static_cast<Point>(a), static_cast<Point>(c)) * m +
                                 r(static_cast<Point>(b), static_cast<Point>(d)));
  return Quandle::assume_valid(nm, std::move(t));
}

bool is_latin(const Quandle& q) {
  for (Point y = 0; y < q.size(); ++y) {
    std::vector<bool> seen(q.size(), false);
    for (Point x = 0; x < q.size(); ++x) {
      if (seen[q(x, y)])
        return false;
      seen[q(x, y)] = true;
    }
  }
  return true;
}

bool is_homomorphism(const Quandle& q, const Quandle& r, std::span<const Point> map) {
  if (map.size() != q.size())
    return false;
  for (Point m : map)
    if (m >= r.size())
      return false;
  for (Point x = 0; x < q.size(); ++x)
    for (Point y = 0; y < q.size(); ++y)
      if (map[q(x, y)] != r(map[x], map[y]))
        return false;
  return true;
}

bool is_isomorphism(const Quandle& q, const Quandle& r, std::span<const Point> map) {
  if (q.size() != r.size() || !is_homomorphism(q, r, map))
    return false;
  std::vector<bool> seen(r.size(), false);
  for (Point m : map) {
    if (seen[m])
      return false;
    seen[m] = true;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Isomorphism search

namespace {

using Signature = std::vector<std::uint64_t>;

class ColorTable {
 public:
  std::uint64_t id(const Signature& s) {
    auto [it, fresh] = ids_.emplace(s, ids_.size());
    return it->second;
  }

 private:
  std::map<Signature, std::uint64_t> ids_;
};

Signature initial_signature(const Quandle& q, const OrbitDecomposition& od, Point x) {
  Signature s;
  std::size_t fixed = 0;
  for (Point y = 0; y < q.size(); ++y)
    fixed += q(x, y) == y;
  s.push_back(fixed);
  s.push_back(od.orbits[od.orbit_of[x]].size());
  auto m = occurrence_counts(q, x);
  std::sort(m.begin(), m.end());
  s.insert(s.end(), m.begin(), m.end());
  return s;
}

std::vector<std::uint64_t> refine(const Quandle& q, const std::vector<std::uint64_t>& color,
                                  ColorTable& table) {
  const std::size_t n = q.size();
  std::vector<std::uint64_t> out(n);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> rowp(n), colp(n);
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      rowp[y] = {color[y], color[q(x, y)]};
      colp[y] = {color[y], color[q(y, x)]};
    }
    std::sort(rowp.begin(), rowp.end());
    std::sort(colp.begin(), colp.end());
    Signature s{color[x]};
    for (auto [a, b] : rowp) {
      s.push_back(a);
      s.push_back(b);
    }
    for (auto [a, b] : colp) {
      s.push_back(a);
      s.push_back(b);
    }
    out[x] = table.id(s);
  }
  return out;
}

std::size_t distinct(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
}

class IsoSearch {
 public:
  IsoSearch(const Quandle& q, const Quandle& r, std::vector<std::uint64_t> cq,
            std::vector<std::uint64_t> cr)
      : q_(q), r_(r), cq_(std::move(cq)), cr_(std::move(cr)),
        phi_(q.size(), kUnset), inv_(q.size(), kUnset) {}

  std::optional<std::vector<Point>> run() {
    if (!search())
      return std::nullopt;
    return std::vector<Point>(phi_.begin(), phi_.end());
  }

 private:
  static constexpr Point kUnset = static_cast<Point>(-1);

  bool assign(Point x, Point y) {
    if (phi_[x] != kUnset)
      return phi_[x] == y;
    if (inv_[y] != kUnset || cq_[x] != cr_[y])
      return false;
    phi_[x] = y;
    inv_[y] = x;
    trail_.push_back(x);
    return true;
  }

  bool propagate(std::size_t from) {
    for (std::size_t i = from; i < trail_.size(); ++i) {
      Point u = trail_[i];
      for (std::size_t j = 0; j <= i; ++j) {
        Point v = trail_[j];
        Point pu = phi_[u], pv = phi_[v];
        if (!assign(q_(u, v), r_(pu, pv)) || !assign(q_(v, u), r_(pv, pu)) ||
            !assign(q_.left_divide(u, v), r_.left_divide(pu, pv)) ||
            !assign(q_.left_divide(v, u), r_.left_divide(pv, pu)))
          return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      Point x = trail_.back();
      trail_.pop_back();
      inv_[phi_[x]] = kUnset;
      phi_[x] = kUnset;
    }
  }

  bool search() {
    const std::size_t n = q_.size();
    if (trail_.size() == n)
      return true;
    Point best = kUnset;
    std::size_t best_count = n + 1;
    for (Point x = 0; x < n; ++x) {
      if (phi_[x] != kUnset)
        continue;
      std::size_t c = 0;
      for (Point y = 0; y < n; ++y)
        c += inv_[y] == kUnset && cr_[y] == cq_[x];
      if (c < best_count) {
        best_count = c;
        best = x;
      }
    }
    if (best_count == 0)
      return false;
    for (Point y = 0; y < n; ++y) {
      if (inv_[y] != kUnset || cr_[y] != cq_[best])
        continue;
      std::size_t mark = trail_.size();
      if (assign(best, y) && propagate(mark) && search())
        return true;
      undo(mark);
    }
    return false;
  }

  const Quandle& q_;
  const Quandle& r_;
  std::vector<std::uint64_t> cq_, cr_;
  std::vector<Point> phi_, inv_;
  std::vector<Point> trail_;
};

}  // namespace

std::optional<std::vector<Point>> brute_force_isomorphism(const Quandle& q, const Quandle& r) {
  if (q.size() != r.size())
    return std::nullopt;
  const std::size_t n = q.size();
  ColorTable table;
  auto odq = orbit_decomposition(q), odr = orbit_decomposition(r);
  std::vector<std::uint64_t> cq(n), cr(n);
  for (Point x = 0; x < n; ++x) {
    cq[x] = table.id(initial_signature(q, odq, x));
    cr[x] = table.id(initial_signature(r, odr, x));
  }
  auto histogram_matches = [&] {
    auto a = cq, b = cr;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  };
  if (!histogram_matches())
    return std::nullopt;
  for (;;) {
    std::size_t before = distinct(cq);
    auto nq = refine(q, cq, table);
    auto nr = refine(r, cr, table);
    cq = std::move(nq);
    cr = std::move(nr);
    if (!histogram_matches())
      return std::nullopt;
    if (distinct(cq) == before)
      break;
  }
  return IsoSearch(q, r, std::move(cq), std::move(cr)).run();
}

}  // namespace quandle
