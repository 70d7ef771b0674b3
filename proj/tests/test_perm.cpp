#include <doctest.h>

#include "fixtures.hpp"
#include "quandle/constructions.hpp"
#include "quandle/perm.hpp"

using namespace quandle;
using namespace fixtures;

TEST_CASE("compose acts on the left") {
  auto q = Permutation::from_cycles(4, {{0, 1}, {2, 3}});
  CHECK(compose(Permutation::identity(4), q) == q);
  auto c = Permutation::from_cycles(3, {{0, 1, 2}});
  CHECK(compose(c, c) == Permutation::from_cycles(3, {{0, 2, 1}}));
  auto p = Permutation({1, 2, 0, 3});
  auto r = Permutation({0, 3, 2, 1});
  for (Point x = 0; x < 4; ++x)
    CHECK(compose(p, r)(x) == p(r(x)));
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK_THROWS_AS(compose(p, Permutation::identity(3)), std::invalid_argument);
}

TEST_CASE("constructor rejects non-bijections") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 3}), std::invalid_argument);
}

TEST_CASE("displacement of Aff(Z_4,-1) is a translation by 2") {
  Quandle q = aff(4, -1);
  auto t = compose(q.left_translation(1), q.left_translation(0).inverse());
  for (Point x = 0; x < 4; ++x)
    CHECK(t(x) == (x + 2) % 4);
}

TEST_CASE("fixed points") {
  CHECK(fixed_point_count(Permutation::identity(5)) == 5);
  CHECK(fixed_point_count(Permutation::from_cycles(4, {{0, 1}})) == 2);
  Quandle q = eight_element();
  // 1-indexed rows 3 and 1 of the printed table.
  auto a = compose(q.left_translation(2), q.left_translation(0).inverse());
  CHECK(fixed_point_count(a) > 0);
  CHECK(fixed_point_count(a) < 8);
}

TEST_CASE("closure") {
  std::vector<Permutation> id{Permutation::identity(3)};
  CHECK(generate_closure(id, 3)->size() == 1);
  std::vector<Permutation> four{Permutation::from_cycles(4, {{0, 1, 2, 3}})};
  CHECK(generate_closure(four, 4)->size() == 4);
  CHECK_FALSE(generate_closure(four, 4, 3).has_value());

  Quandle q = aff(6, -1);
  auto gens = dis_generators(q);
  auto g = generate_closure(gens, 6);
  REQUIRE(g);
  CHECK(g->size() == 3);
  auto s = abstract_abelian_structure(*g);
  CHECK(s.group.moduli() == std::vector<std::uint32_t>{3});

  // Non-abelian closure picks up both product orders.
  std::vector<Permutation> s3{Permutation::from_cycles(3, {{0, 1}}),
                              Permutation::from_cycles(3, {{1, 2}})};
  auto sym = generate_closure(s3, 3);
  CHECK(sym->size() == 6);
  CHECK_FALSE(is_abelian(*sym));
  for (const auto& x : sym->elements())
    for (const auto& y : sym->elements())
      CHECK(sym->contains(compose(x, y)));
}

TEST_CASE("abelian and semiregular") {
  Quandle e = semiregular_extension(ext(2, 1, {0, 0, 1}));
  auto gens = dis_generators(e);
  CHECK(is_abelian_generators(gens));
  CHECK(is_semiregular(gens, e.size()));

  Quandle q8 = eight_element();
  CHECK_FALSE(is_semiregular(dis_generators(q8), 8));

  PermGroup trivial(3, {}, {Permutation::identity(3)});
  CHECK(is_abelian(trivial));
  CHECK(is_semiregular(trivial));
}

TEST_CASE("semiregular groups have the size of an orbit") {
  for (const auto& desc : {ext(3, 1, {0, 1}), ext(2, 1, {0, 1, 1}), ext(5, 2, {0, 0})}) {
    Quandle q = semiregular_extension(desc);
    auto g = generate_closure(dis_generators(q), q.size());
    REQUIRE(g);
    REQUIRE(is_semiregular(*g));
    CHECK(g->size() == orbits(*g)[0].size());
  }
}

TEST_CASE("orbits") {
  std::vector<Permutation> id{Permutation::identity(3)};
  CHECK(orbits(id, 3) == std::vector<std::vector<Point>>{{0}, {1}, {2}});
  CHECK(orbits(dis_generators(aff(4, -1)), 4) == std::vector<std::vector<Point>>{{0, 2}, {1, 3}});
  auto o = orbits(dis_generators(semiregular_extension(ext(3, 1, {0, 1}))), 6);
  CHECK(o == std::vector<std::vector<Point>>{{0, 1, 2}, {3, 4, 5}});
}

TEST_CASE("abstract abelian structure") {
  PermGroup trivial(2, {}, {Permutation::identity(2)});
  CHECK(abstract_abelian_structure(trivial).group.order() == 1);

  std::vector<Permutation> c4{Permutation::from_cycles(4, {{0, 1, 2, 3}})};
  CHECK(abstract_abelian_structure(*generate_closure(c4, 4)).group.moduli() ==
        std::vector<std::uint32_t>{4});

  std::vector<Permutation> klein{Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                                 Permutation::from_cycles(4, {{0, 2}, {1, 3}})};
  auto g = *generate_closure(klein, 4);
  CHECK(g.size() == 4);
  auto s = abstract_abelian_structure(g);
  CHECK(s.group.moduli() == std::vector<std::uint32_t>{2, 2});

  std::vector<Permutation> s3{Permutation::from_cycles(3, {{0, 1}}),
                              Permutation::from_cycles(3, {{1, 2}})};
  CHECK_THROWS_AS(abstract_abelian_structure(*generate_closure(s3, 3)), std::invalid_argument);
}

TEST_CASE("abstract structure is a homomorphism") {
  // Regular representations of a few groups.
  for (auto moduli : {std::vector<std::uint32_t>{2, 4}, {3, 3}, {2, 2, 2}, {8}, {4, 4}}) {
    FiniteAbelianGroup a(moduli);
    std::vector<Permutation> gens;
    for (std::size_t j = 0; j < a.rank(); ++j) {
      std::vector<Point> img(a.order());
      for (Element x = 0; x < a.order(); ++x)
        img[x] = a.add(x, a.basis(j));
      gens.emplace_back(img);
    }
    auto g = *generate_closure(gens, a.order());
    CHECK(g.size() == a.order());
    auto s = abstract_abelian_structure(g);
    CHECK(s.group.moduli() == moduli);
    const auto& el = g.elements();
    for (std::size_t i = 0; i < el.size(); ++i)
      for (std::size_t j = 0; j < el.size(); ++j)
        CHECK(s.to_group[*g.index_of(compose(el[i], el[j]))] ==
              s.group.add(s.to_group[i], s.to_group[j]));
  }
}
