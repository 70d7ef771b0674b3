#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "quandle/enumeration.hpp"
#include "quandle/guard.hpp"
#include "quandle/isomorphism.hpp"
#include "quandle/recognition.hpp"

using namespace quandle;
using namespace fixtures;

namespace {

const std::vector<std::size_t> kQuasiAffine{1, 1, 2, 3, 4, 4, 6, 9, 12, 7, 10, 17, 12, 10, 14};
const std::vector<std::size_t> kAffine{1, 1, 2, 3, 4, 2, 6, 7, 11, 4, 10, 6, 12, 6, 8};
const std::vector<std::size_t> kLatin{1, 0, 1, 1, 3, 0, 5, 2, 8, 0, 9, 1, 11, 0, 3};

std::size_t count_c(const FiniteAbelianGroup& a, std::size_t k) {
  std::size_t c = 0;
  for (const auto& v : oracle::count_vectors(a.order(), k))
    c += oracle::indecomposable_counts(a, v);
  return c;
}

}  // namespace

TEST_CASE("epsilon on the worked examples") {
  auto z2 = Z({2}), z3 = Z({3});
  CHECK(epsilon(z2, GroupMap::identity(z2), 4).count() == 2);
  CHECK(epsilon(z3, GroupMap::identity(z3), 4).count() == 3);
  CHECK(epsilon(z3, GroupMap::scalar(z3, 2), 4).count() == 1);
  for (std::uint32_t m : {3u, 5u, 7u})
    for (std::size_t k = 1; k <= 5; ++k) {
      auto a = Z({m});
      CHECK(epsilon(a, GroupMap::scalar(a, 2), k).count() == 1);
    }
}

TEST_CASE("epsilon class data") {
  auto z2 = Z({2});
  auto r = epsilon(z2, GroupMap::identity(z2), 4);
  CHECK(r.quotient.order() == 2);
  REQUIRE(r.classes.size() == 2);
  CHECK(r.classes[0].counts == std::vector<std::size_t>{1, 3});
  CHECK(r.classes[1].counts == std::vector<std::size_t>{2, 2});
  CHECK(r.classes[0].descriptor.d == std::vector<Element>{0, 1, 1, 1});
  CHECK_FALSE(r.classes[0].affine);
  CHECK(r.classes[1].affine);
  for (const auto& c : r.classes)
    CHECK_FALSE(c.latin);
  auto z5 = Z({5});
  auto l = epsilon(z5, GroupMap::scalar(z5, 2), 1);
  REQUIRE(l.count() == 1);
  CHECK(l.classes[0].latin);
  CHECK(l.classes[0].affine);
}

TEST_CASE("closed forms") {
  CHECK(epsilon_3(3) == 2);
  CHECK(epsilon_2(2) == 1);
  CHECK(epsilon_2(3) == 1);
  CHECK(epsilon_3(5) == 4);
  CHECK(epsilon_3(4) == 3);
  CHECK(epsilon_3(1) == 0);
  CHECK(epsilon_3(2) == 1);
  CHECK(closed_form_order_counts(9) == 12u);
  CHECK(closed_form_order_counts(15) == 14u);
  CHECK(closed_form_order_counts(7) == 6u);
  CHECK_FALSE(closed_form_order_counts(8));
  CHECK_FALSE(closed_form_order_counts(12));
  for (std::size_t p : {3u, 5u, 7u})
    CHECK(closed_form_order_counts(2 * p) == (3 * p - 1) / 2);
}

TEST_CASE("closed forms agree with the orbit count") {
  for (std::size_t m = 1; m <= 5; ++m)
    for (const auto& a : abelian_groups_of_order(m))
      for (const auto& f : automorphism_group(a))
        for (std::size_t k = 1; k <= 6; ++k)
          if (auto c = epsilon_closed_form(a, f, k))
            REQUIRE(*c == epsilon(a, f, k).count());
  auto k4 = Z({2, 2});
  CHECK(epsilon_closed_form(k4, GroupMap::identity(k4), 3) == 1u);
  CHECK(epsilon_closed_form(Z({4}), GroupMap::identity(Z({4})), 3) == 2u);
  CHECK(epsilon_closed_form(Z({5}), GroupMap::identity(Z({5})), 3) == 2u);
}

TEST_CASE("closed order counts agree with enumeration") {
  for (std::size_t n = 1; n <= 26; ++n)
    if (auto c = closed_form_order_counts(n))
      REQUIRE(*c == enumerate_quasi_affine(n).total());
}

TEST_CASE("epsilon for f = 1 matches Burnside's lemma") {
  for (std::size_t m = 1; m <= 5; ++m)
    for (const auto& a : abelian_groups_of_order(m))
      for (std::size_t k = 1; k <= 6; ++k)
        REQUIRE(epsilon(a, GroupMap::identity(a), k).count() == oracle::burnside_epsilon(a, k));
}

// The centralizer induces a subgroup of Aut of the quotient, so the orbits
// over (A, f) refine those over the quotient with f = 1.
TEST_CASE("epsilon is bounded below by the quotient with f = 1") {
  for (std::size_t m = 1; m <= 16; ++m)
    for (const auto& a : abelian_groups_of_order(m)) {
      auto auts = automorphism_group(a);
      for (const auto& cls : conjugacy_classes(auts))
        for (std::size_t k = 1; k * m <= 32 && k <= 6; ++k) {
          auto r = epsilon(a, cls.representative, k, auts);
          auto q = r.quotient;
          auto bound = epsilon(q, GroupMap::identity(q), k).count();
          REQUIRE(r.count() >= bound);
          if (a.is_cyclic())
            REQUIRE(r.count() == bound);
        }
    }
}

TEST_CASE("the centralizer can induce fewer automorphisms than the quotient has") {
  auto a = Z({2, 2, 2});
  GroupMap f(a, a, {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}});
  std::size_t strict = 0;
  for (std::size_t k = 1; k <= 6; ++k) {
    auto r = epsilon(a, f, k);
    auto bound = epsilon(r.quotient, GroupMap::identity(r.quotient), k).count();
    CHECK(r.count() >= bound);
    strict += r.count() > bound;
  }
  CHECK(strict > 0);
}

TEST_CASE("size of the indecomposable count vectors over cyclic groups") {
  auto formula = [](std::size_t m, std::size_t k) {
    return oracle::binomial(m + k - 1, m - 1) - m;
  };
  for (std::uint32_t m : {2u, 3u, 5u})
    for (std::size_t k = 2; k <= 6; ++k)
      CHECK(count_c(Z({m}), k) == formula(m, k));
  // For composite m the support can sit in a proper coset, e.g. (0, 2) in Z_4.
  CHECK(count_c(Z({4}), 2) == 4);
  CHECK(formula(4, 2) == 6);
  CHECK(count_c(Z({1}), 3) == 1);
}

TEST_CASE("counts by order up to 15") {
  auto t = count_table(15);
  CHECK(t.quasi_affine == kQuasiAffine);
  CHECK(t.affine == kAffine);
  CHECK(t.latin == kLatin);
}

TEST_CASE("breakdown by number of orbits") {
  using B = std::vector<std::pair<std::size_t, std::size_t>>;
  auto e8 = enumerate_quasi_affine(8);
  CHECK(e8.total() == 9);
  CHECK(e8.by_k() == B{{1, 2}, {2, 4}, {4, 2}, {8, 1}});
  auto e12 = enumerate_quasi_affine(12);
  CHECK(e12.total() == 17);
  CHECK(e12.by_k() == B{{1, 1}, {2, 2}, {3, 6}, {4, 4}, {6, 3}, {12, 1}});
}

TEST_CASE("serial and parallel enumeration agree") {
  for (std::size_t n : {1u, 6u, 8u, 12u, 16u, 24u}) {
    auto s = enumerate_quasi_affine_serial(n);
    for (int jobs : {0, 1, 2, 4}) {
      auto p = enumerate_quasi_affine(n, jobs);
      REQUIRE(same_result(s, p));
    }
  }
}

TEST_CASE("class representatives") {
  for (std::size_t n = 1; n <= 12; ++n) {
    auto e = enumerate_quasi_affine(n);
    auto classes = e.classes();
    std::vector<Quandle> built;
    for (const auto* c : classes) {
      REQUIRE(c->descriptor.order() == n);
      REQUIRE(is_indecomposable(c->descriptor));
      Quandle q = semiregular_extension(c->descriptor);
      REQUIRE(is_quasi_affine(q));
      REQUIRE(is_affine(q).verdict == c->affine);
      REQUIRE(is_latin(q) == c->latin);
      built.push_back(std::move(q));
    }
    if (n <= 10)
      for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j) {
          REQUIRE_FALSE(ext_isomorphic(classes[i]->descriptor, classes[j]->descriptor));
          if (n <= 8)
            REQUIRE_FALSE(brute_force_isomorphism(built[i], built[j]));
        }
  }
}

TEST_CASE("brute-force quandle enumeration") {
  const std::vector<std::size_t> expected{1, 1, 3, 7, 22};
  for (std::size_t n = 1; n <= 5; ++n) {
    auto qs = brute_force_enumerate_quandles(n);
    CHECK(qs.size() == expected[n - 1]);
    std::size_t qa = 0;
    for (const auto& q : qs)
      qa += is_quasi_affine(q).verdict;
    CHECK(qa == kQuasiAffine[n - 1]);
  }
  CHECK_THROWS_AS(brute_force_enumerate_quandles(guards().brute_enumeration_order + 1),
                  GuardExceeded);
}

TEST_CASE("enumeration guard") {
  CHECK_THROWS_AS(enumerate_quasi_affine(guards().enumerate_order + 1), GuardExceeded);
  CHECK_THROWS_AS(enumerate_quasi_affine(0), std::invalid_argument);
}
