#include <random>

#include "doctest.h"
#include "immsnp/polynomial.hpp"
#include "oracles.hpp"

using namespace immsnp;

namespace {

SparsePolynomial x(int nvars, int i) { return SparsePolynomial::variable(nvars, i); }

}  // namespace

TEST_SUITE("polynomial") {

TEST_CASE("exponent vectors") {
  ExponentVector e{2, 0, 1};
  CHECK(e.nvars() == 3);
  CHECK(e.degree() == 3);
  CHECK((e + ExponentVector{0, 1, 0}) == ExponentVector{2, 1, 1});
  CHECK(e.to_string() == "(2,0,1)");
  CHECK_THROWS_AS(ExponentVector({1, -1}), Error);
  CHECK_THROWS_AS(ExponentVector(17), Error);
  CHECK_THROWS_AS(e.set(0, 256), Error);
  CHECK_THROWS_AS((e + ExponentVector{1, 1}), Error);
}

TEST_CASE("grevlex puts higher degree first and breaks ties on the last entry") {
  CHECK(grevlex_greater(ExponentVector{0, 0, 2}, ExponentVector{1, 0, 0}));
  CHECK(grevlex_greater(ExponentVector{2, 0, 0}, ExponentVector{1, 1, 0}));
  CHECK(grevlex_greater(ExponentVector{1, 1, 0}, ExponentVector{1, 0, 1}));
  CHECK_FALSE(grevlex_greater(ExponentVector{1, 1, 0}, ExponentVector{1, 1, 0}));
}

TEST_CASE("ring operations") {
  SparsePolynomial h1 = x(2, 0) + x(2, 1);
  SparsePolynomial sq = h1 * h1;
  CHECK(sq.term_count() == 3);
  CHECK(sq.coefficient(ExponentVector{1, 1}) == 2);
  CHECK((sq + (-sq)).is_zero());
  CHECK(sq * mpz_class(1) == sq);
  CHECK(sq - sq == SparsePolynomial(2));
  CHECK_THROWS_AS(sq + x(3, 0), Error);
  CHECK(SparsePolynomial(2).max_degree() == -1);
  CHECK((sq + SparsePolynomial::constant(2, 1)).is_homogeneous() == false);
  CHECK(SparsePolynomial::from_terms(2, {{ExponentVector{1, 0}, 2}, {ExponentVector{1, 0}, -2}}).is_zero());
}

TEST_CASE("big coefficients stay exact") {
  SparsePolynomial f = x(1, 0) + SparsePolynomial::constant(1, 1);
  SparsePolynomial p = SparsePolynomial::constant(1, 1);
  for (int i = 0; i < 100; ++i) p = p * f;
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), 100, 50);
  CHECK(p.coefficient(ExponentVector{50}) == binom);
}

TEST_CASE("canonical order is independent of construction order") {
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    SparsePolynomial a = oracle::random_polynomial(rng, 3, 4, 6);
    SparsePolynomial b = oracle::random_polynomial(rng, 3, 4, 6);
    SparsePolynomial c = oracle::random_polynomial(rng, 3, 4, 6);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(poly_mul(a, b) == a * b);
    CHECK(poly_add(a, b) == a + b);
    for (std::size_t k = 1; k < (a * b).terms().size(); ++k)
      CHECK(grevlex_greater((a * b).terms()[k - 1].exponent, (a * b).terms()[k].exponent));
    PolynomialAccumulator acc(3);
    acc.add_product(a, b);
    acc.add(c, 2);
    CHECK(std::move(acc).finish() == a * b + c * mpz_class(2));
  }
}

TEST_CASE("variable permutation") {
  SparsePolynomial f = x(3, 0) * x(3, 0) + x(3, 2);
  std::vector<int> sigma{2, 1, 0};
  SparsePolynomial g = f.permute_variables(sigma);
  CHECK(g == x(3, 2) * x(3, 2) + x(3, 0));
  CHECK(g.permute_variables(sigma) == f);
}

TEST_CASE("exponents of a fixed degree") {
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 5; ++d) {
      auto a = exponents_of_degree(d, n);
      auto b = oracle::all_exponents(d, n);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
    }
}

}  // TEST_SUITE
