#include "doctest.h"
#include "oracles.hpp"
#include "immsnp/newton.hpp"
#include "immsnp/stanley_stembridge.hpp"
#include "immsnp/symmetric.hpp"

using namespace immsnp;

TEST_SUITE("stanley_stembridge") {

TEST_CASE("the two-row border strip") {
  const SkewShape s(Partition{2, 1});
  SparsePolynomial p1 = p_poly(Partition{1}, 2), p2 = p_poly(Partition{2}, 2);
  SparsePolynomial e3 = e_theta_definition(s, Partition{3}, 2, 3);
  CHECK(e3 == schur_poly(Partition{2}, 2) * mpz_class(2));
  CHECK(e3 == p2 + p1 * p1);
  CHECK(e_theta_definition(s, Partition{2, 1}, 2, 3) == p1 * p1);
  CHECK(e_theta_definition(s, Partition{1, 1, 1}, 2, 3).is_zero());

  auto all = e_theta_all(s, 2, 3);
  CHECK(all.size() == 2);
  CHECK(all.count(Partition{1, 1, 1}) == 0);

  auto px = e_theta_p_expansion(s, Partition{3});
  CHECK(px == std::map<Composition, std::int64_t>{{Composition{2}, 1}, {Composition{1, 1}, 1}});
  CHECK(e_theta_p_expansion(s, Partition{1, 1, 1}).empty());
}

TEST_CASE("definition and border formula agree") {
  for (const SkewShape& s : enumerate_border_strips(5, 5))
    for (const auto& theta : partitions_of(s.size()))
      for (int y : {2, 3}) {
        SparsePolynomial def = e_theta_definition(s, theta, y, s.size());
        CHECK(def == e_theta_border_formula(s, theta, y));
        if (!def.is_zero()) CHECK(snp_check(def).is_snp);
      }
}

TEST_CASE("E for a translated strip is unchanged") {
  // (3,2)/(1,1) is (2,1) moved one column right.
  const SkewShape a(Partition{2, 1});
  const SkewShape b(Partition{3, 2}, Partition{1, 1});
  REQUIRE(is_border_strip(b));
  for (const auto& theta : partitions_of(3))
    CHECK(e_theta_definition(a, theta, 2, 3) == e_theta_definition(b, theta, 2, 3));
}

TEST_CASE("row lengths and refinement") {
  CHECK(row_lengths(SkewShape(Partition{3, 2}, Partition{1})) == Composition{2, 2});
  const Composition gamma{2, 1, 2};
  CHECK(refinement_kostka_check(Partition{3, 2}, gamma, Composition{3}, Composition{1, 1, 1}));
  CHECK(refinement_kostka_check(Partition{3, 2}, gamma, Composition{2, 1}, Composition{1, 1, 1}));
  CHECK_THROWS_AS(refinement_kostka_check(Partition{3, 2}, gamma, Composition{2, 1}, Composition{1, 2}), Error);
  CHECK_THROWS_AS(refinement_kostka_check(Partition{3, 1}, gamma, Composition{3}, Composition{3}), Error);
  for (int n = 1; n <= 5; ++n)
    for (const Composition& gamma_n : compositions_of(n))
      for (const auto& theta : partitions_of(gamma_n.size()))
        for (const Composition& alpha : compositions_of(gamma_n.length()))
          for (const Composition& beta : refinements_of(alpha))
            CHECK(refinement_kostka_check(theta, gamma_n, alpha, beta));
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(e_theta_definition(SkewShape(Partition{2, 1}), Partition{2}, 2, 3), Error);
  CHECK_THROWS_WITH_AS(e_theta_all(SkewShape(Partition{2, 1}), 2, 2), doctest::Contains("cannot separate"), Error);
  CHECK_THROWS_AS(e_theta_border_formula(SkewShape(Partition{2, 2}), Partition{4}, 2), Error);
}

}  // TEST_SUITE
