#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "quandle/enumeration.hpp"
#include "quandle/quandle.hpp"

using namespace quandle;
using namespace fixtures;

namespace {

std::vector<Quandle> corpus() {
  std::vector<Quandle> out{eight_element(), aff_z4_quotient(), projection_quandle(4),
                           aff(4, -1),      aff(6, -1),        aff(5, 2),
                           aff(7, 3)};
  for (const auto& d : {ext(2, 1, {0, 0, 1}), ext(3, 1, {0, 1}), ext(3, 2, {0, 0}),
                        ext(4, -1, {0, 1, 1})})
    out.push_back(semiregular_extension(d));
  for (std::size_t n = 1; n <= 4; ++n)
    for (auto& q : brute_force_enumerate_quandles(n))
      out.push_back(std::move(q));
  return out;
}

}  // namespace

TEST_CASE("validation") {
  CHECK(validate(eight_element().rows()).quandle.has_value());
  std::vector<std::vector<Point>> bad{{1, 0}, {0, 1}};
  auto r = validate(bad);
  REQUIRE(!r.quandle);
  CHECK(r.violations.front().axiom == Axiom::Idempotence);
  CHECK(r.violations.front().x == 0);
  for (std::size_t n = 1; n <= 5; ++n)
    CHECK(validate(projection_quandle(n).rows()).quandle.has_value());

  std::vector<std::vector<Point>> rep{{0, 0, 2}, {0, 1, 2}, {0, 1, 2}};
  CHECK(validate(rep).violations.front().axiom == Axiom::LeftDivision);
  std::vector<std::vector<Point>> range{{0, 3}, {0, 1}};
  CHECK(validate(range).violations.front().axiom == Axiom::Range);
  // Idempotent, rows are permutations, not left distributive.
  std::vector<std::vector<Point>> nd{{0, 2, 1}, {0, 1, 2}, {1, 0, 2}};
  auto v = validate(nd);
  REQUIRE(!v.quandle);
  CHECK(v.violations.front().axiom == Axiom::LeftDistributivity);
  CHECK_THROWS_AS(Quandle{nd}, InvalidQuandle);
  CHECK(validate(nd, 2).violations.size() <= 2);
}

TEST_CASE("left translations and division") {
  auto p = projection_quandle(4);
  for (Point x = 0; x < 4; ++x)
    CHECK(p.left_translation(x).is_identity());
  auto q = aff(4, -1);
  CHECK(q.left_translation(0) == Permutation::from_cycles(4, {{1, 3}}));
  for (const auto& r : corpus())
    for (Point x = 0; x < r.size(); ++x)
      for (Point y = 0; y < r.size(); ++y) {
        REQUIRE(r(x, r.left_divide(x, y)) == y);
        REQUIRE(r.left_divide(x, r(x, y)) == y);
      }
}

TEST_CASE("displacement generators") {
  for (const auto& g : dis_generators(projection_quandle(3)))
    CHECK(g.is_identity());
  auto gens = dis_generators(aff(6, -1));
  std::set<std::vector<Point>> distinct;
  for (const auto& g : gens)
    distinct.insert(g.images());
  CHECK(distinct.size() == 3);
  for (const auto& g : gens) {
    Point t = g(0);
    CHECK(t % 2 == 0);
    for (Point x = 0; x < 6; ++x)
      CHECK(g(x) == (x + t) % 6);
  }
  auto g8 = generate_closure(dis_generators(eight_element()), 8);
  REQUIRE(g8);
  CHECK_FALSE(is_semiregular(*g8));
}

TEST_CASE("mediality") {
  for (const auto& q : {aff(4, -1), aff(6, -1), aff(5, 2), aff(8, 3), aff(9, 4)}) {
    CHECK(is_medial(q));
    CHECK(oracle::medial_identity(q));
  }
  CHECK(is_medial(eight_element()));
  CHECK(is_medial(fixtures::aff_z4_quotient()));
}

TEST_CASE("fast mediality agrees with the identity on all small quandles") {
  std::size_t non_medial = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& q : brute_force_enumerate_quandles(n)) {
      bool m = is_medial(q);
      REQUIRE(m == oracle::medial_identity(q));
      non_medial += !m;
      if (n <= 3)
        CHECK(m);
    }
  CHECK(non_medial > 0);
}

TEST_CASE("occurrence counts") {
  auto p = projection_quandle(3);
  for (Point x = 0; x < 3; ++x) {
    auto m = occurrence_counts(p, x);
    for (Point y = 0; y < 3; ++y)
      CHECK(m[y] == (y == x ? 3u : 0u));
  }
  auto q = aff(4, -1);
  for (Point x = 0; x < 4; ++x) {
    auto m = occurrence_counts(q, x);
    for (Point y = 0; y < 4; ++y)
      CHECK(m[y] == ((y + x) % 2 == 0 ? 2u : 0u));
  }
  auto e = semiregular_extension(ext(2, 1, {0, 0, 1}));
  auto m = occurrence_counts(e, 0);
  // The orbit of 0 is the fiber {0, 1}.
  CHECK(m[0] != m[1]);
}

TEST_CASE("occurrence counts of affine quandles are constant on orbits") {
  for (std::uint32_t n = 2; n <= 12; ++n) {
    auto a = FiniteAbelianGroup::cyclic(n);
    for (const auto& f : automorphism_group(a)) {
      Quandle q = affine_quandle(a, f);
      auto od = orbit_decomposition(q);
      for (Point x = 0; x < q.size(); ++x) {
        auto m = occurrence_counts(q, x);
        const auto& orbit = od.orbits[od.orbit_of[x]];
        for (Point y : orbit)
          REQUIRE(m[y] == m[orbit.front()]);
      }
    }
  }
}

TEST_CASE("products, latin, orbits") {
  CHECK(direct_product(projection_quandle(2), projection_quandle(3)) == projection_quandle(6));
  auto pr = direct_product(aff(3, -1), projection_quandle(2));
  CHECK(pr.size() == 6);
  // (0, 1) * (1, 0) = (2 * 0 - 1, 0) = (2, 0).
  CHECK(pr(1, 2) == 4);
  CHECK(is_latin(aff(5, 2)));
  CHECK_FALSE(is_latin(aff(4, -1)));
  CHECK_FALSE(is_latin(projection_quandle(2)));
  CHECK(is_latin(projection_quandle(1)));

  auto od = orbit_decomposition(semiregular_extension(ext(3, 1, {0, 1})));
  CHECK(od.orbits.size() == 2);
  CHECK(od.transversal == std::vector<Point>{0, 3});
}

TEST_CASE("left translations are automorphisms") {
  for (const auto& q : corpus()) {
    const Point n = static_cast<Point>(q.size());
    for (Point x = 0; x < n; ++x)
      for (Point y = 0; y < n; ++y)
        for (Point z = 0; z < n; ++z)
          REQUIRE(q(x, q(y, z)) == q(q(x, y), q(x, z)));
  }
}

TEST_CASE("translations and displacements have the same orbits") {
  for (const auto& q : corpus()) {
    auto a = orbits(left_translations(q), q.size());
    auto b = orbits(dis_generators(q), q.size());
    CHECK(a == b);
    CHECK(a == orbit_decomposition(q).orbits);
  }
}

TEST_CASE("brute force isomorphism") {
  auto q = eight_element();
  auto id = brute_force_isomorphism(q, q);
  REQUIRE(id);
  CHECK(is_isomorphism(q, q, *id));

  auto z4 = aff(4, 1);
  auto k4 = affine_quandle(Z({2, 2}), GroupMap::identity(Z({2, 2})));
  auto w = brute_force_isomorphism(z4, k4);
  REQUIRE(w);
  CHECK(is_isomorphism(z4, k4, *w));

  auto e = semiregular_extension(ext(2, 1, {0, 1}));
  auto a = aff(4, -1);
  auto w2 = brute_force_isomorphism(e, a);
  REQUIRE(w2);
  CHECK(is_isomorphism(e, a, *w2));

  auto six1 = semiregular_extension(ext(2, 1, {0, 0, 1}));
  auto six2 = semiregular_extension(ext(3, 1, {0, 1}));
  CHECK_FALSE(brute_force_isomorphism(six1, six2));
  CHECK_FALSE(brute_force_isomorphism(aff(3, -1), aff(4, -1)));
  CHECK_FALSE(brute_force_isomorphism(aff(4, -1), aff(4, 1)));
}

TEST_CASE("brute force isomorphism is reflexive and symmetric") {
  auto qs = brute_force_enumerate_quandles(4);
  for (const auto& q : corpus()) {
    // A relabelled copy.
    const Point n = static_cast<Point>(q.size());
    std::vector<Point> sigma(n);
    for (Point x = 0; x < n; ++x)
      sigma[x] = (x * 3 + 1) % n;
    if (std::gcd(std::size_t{3}, q.size()) != 1)
      for (Point x = 0; x < n; ++x)
        sigma[x] = n - 1 - x;
    std::vector<std::vector<Point>> rows(n, std::vector<Point>(n));
    for (Point x = 0; x < n; ++x)
      for (Point y = 0; y < n; ++y)
        rows[sigma[x]][sigma[y]] = sigma[q(x, y)];
    Quandle r(rows);
    auto f = brute_force_isomorphism(q, r);
    auto b = brute_force_isomorphism(r, q);
    REQUIRE(f);
    REQUIRE(b);
    CHECK(is_isomorphism(q, r, *f));
    CHECK(is_isomorphism(r, q, *b));
  }
  for (std::size_t i = 0; i < qs.size(); ++i)
    for (std::size_t j = 0; j < qs.size(); ++j)
      CHECK(brute_force_isomorphism(qs[i], qs[j]).has_value() == (i == j));
}

TEST_CASE("homomorphism checks") {
  auto q = aff(4, -1);
  std::vector<Point> to_trivial(4, 0);
  CHECK(is_homomorphism(q, projection_quandle(1), to_trivial));
  CHECK_FALSE(is_isomorphism(q, projection_quandle(1), to_trivial));
  std::vector<Point> mod2{0, 1, 0, 1};
  CHECK(is_homomorphism(q, projection_quandle(2), mod2));
  CHECK_FALSE(is_homomorphism(aff(3, -1), aff(3, -1), std::vector<Point>{0, 1, 1}));
}
