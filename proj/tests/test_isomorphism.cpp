#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "quandle/isomorphism.hpp"
#include "quandle/recognition.hpp"

using namespace quandle;
using namespace fixtures;

namespace {

void check_witness(const ExtensionDescriptor& a, const ExtensionDescriptor& b,
                   const ExtIsoWitness& w) {
  auto map = witness_to_bijection(a, b, w);
  REQUIRE(is_isomorphism(semiregular_extension(a), semiregular_extension(b), map));
  REQUIRE(compose(w.psi, a.f) == compose(b.f, w.psi));
}

}  // namespace

TEST_CASE("indecomposability") {
  CHECK_FALSE(is_indecomposable(ext(3, 1, {0})));
  CHECK(is_indecomposable(ext(3, 1, {0, 1})));
  CHECK(is_indecomposable(ext(1, 1, {0, 0, 0})));
  CHECK(is_indecomposable(ext(3, 2, {0})));
  CHECK_FALSE(is_indecomposable(ext(4, 1, {0, 2})));
  CHECK(is_indecomposable(ext(4, -1, {0, 1})));
}

TEST_CASE("indecomposable means the fibers are the orbits") {
  for (const auto& d : oracle::all_descriptors(10, false)) {
    auto od = orbit_decomposition(semiregular_extension(d));
    REQUIRE(is_indecomposable(d) == (od.orbits.size() == d.k()));
  }
}

TEST_CASE("extension isomorphism on the worked examples") {
  auto a = ext(2, 1, {0, 1}), b = ext(2, 1, {1, 0});
  auto w = ext_isomorphic(a, b);
  REQUIRE(w);
  check_witness(a, b, *w);

  CHECK_FALSE(ext_isomorphic(ext(2, 1, {0, 0, 1}), ext(3, 1, {0, 1})));

  auto s = ext(3, 1, {0, 1, 1});
  auto id = ext_isomorphic(s, s);
  REQUIRE(id);
  check_witness(s, s, *id);
  auto map = witness_to_bijection(s, s, *id);
  for (Point x = 0; x < map.size(); ++x)
    CHECK(map[x] == x);

  CHECK_THROWS_AS(ext_isomorphic(ext(3, 1, {0}), ext(3, 1, {0})), std::invalid_argument);
  CHECK_FALSE(ext_isomorphic(ext(2, 1, {0, 1}), ext(1, 1, {0, 0, 0, 0})));
}

TEST_CASE("isomorphism across presentations of the group") {
  auto a = FiniteAbelianGroup(std::vector<std::uint32_t>{2, 3});
  // d_1 = (1, 0) is odd in Z_6; Im(1 - f) = 0 + Z_3 is the even part.
  ExtensionDescriptor d1{a, GroupMap::scalar(a, -1), {0, a.index(std::vector<std::int64_t>{1, 0})}};
  auto d2 = ext(6, -1, {0, 3});
  auto w = ext_isomorphic(d1, d2);
  REQUIRE(w);
  check_witness(d1, d2, *w);
}

TEST_CASE("balanced fast path") {
  CHECK_FALSE(ext_isomorphic_balanced(ext(2, 1, {0, 1}), ext(2, 1, {0, 1, 0, 1})));
  // Over (Z_3, 2) every d is balanced; k = 2 gives one class.
  CHECK(ext_isomorphic_balanced(ext(3, 2, {0, 0}), ext(3, 2, {1, 2})));
  CHECK_THROWS_AS(ext_isomorphic_balanced(ext(2, 1, {0, 0, 1}), ext(2, 1, {0, 1, 1})),
                  std::invalid_argument);
}

TEST_CASE("balanced fast path agrees with the full test") {
  std::vector<ExtensionDescriptor> bal;
  for (const auto& d : oracle::all_descriptors(12, true))
    if (is_balanced(d))
      bal.push_back(d);
  CHECK(bal.size() > 50);
  for (std::size_t i = 0; i < bal.size(); ++i)
    for (std::size_t j = i; j < bal.size(); ++j)
      if (bal[i].order() == bal[j].order())
        REQUIRE(ext_isomorphic_balanced(bal[i], bal[j]) ==
                ext_isomorphic(bal[i], bal[j]).has_value());
}

TEST_CASE("extension isomorphism agrees with brute force") {
  auto all = oracle::all_descriptors(10, true);
  std::vector<Quandle> built;
  for (const auto& d : all)
    built.push_back(semiregular_extension(d));
  std::size_t positives = 0;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i; j < all.size(); ++j) {
      if (all[i].order() != all[j].order())
        continue;
      auto w = ext_isomorphic(all[i], all[j]);
      bool brute = brute_force_isomorphism(built[i], built[j]).has_value();
      REQUIRE(w.has_value() == brute);
      if (w) {
        check_witness(all[i], all[j], *w);
        REQUIRE(is_balanced(all[i]) == is_balanced(all[j]));
        ++positives;
      }
    }
  CHECK(positives > all.size());
}

TEST_CASE("affine indecomposable extensions are balanced") {
  for (const auto& d : oracle::all_descriptors(12, true))
    if (is_affine(semiregular_extension(d)))
      REQUIRE(is_balanced(d));
}

TEST_CASE("affine isomorphism") {
  auto z4 = Z({4}), k4 = Z({2, 2});
  CHECK(affine_isomorphic(z4, GroupMap::scalar(z4, -1), k4, swap2()));
  CHECK_FALSE(affine_isomorphic(z4, GroupMap::identity(z4), z4, GroupMap::scalar(z4, -1)));
  CHECK(affine_isomorphic(z4, GroupMap::identity(z4), k4, GroupMap::identity(k4)));
}

TEST_CASE("affine isomorphism agrees with brute force") {
  struct Aff {
    FiniteAbelianGroup a;
    GroupMap f;
    Quandle q;
  };
  for (std::size_t n = 1; n <= 9; ++n) {
    std::vector<Aff> qs;
    for (const auto& a : abelian_groups_of_order(n))
      for (const auto& f : automorphism_group(a))
        qs.push_back({a, f, affine_quandle(a, f)});
    for (std::size_t i = 0; i < qs.size(); ++i)
      for (std::size_t j = i; j < qs.size(); ++j)
        REQUIRE(affine_isomorphic(qs[i].a, qs[i].f, qs[j].a, qs[j].f) ==
                brute_force_isomorphism(qs[i].q, qs[j].q).has_value());
  }
}

TEST_CASE("automorphism cache") {
  auto a = cached_automorphism_group(Z({2, 2}));
  auto b = cached_automorphism_group(Z({2, 2}));
  CHECK(a == b);
  CHECK(a->size() == 6);
}
