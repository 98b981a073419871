#include <random>

#include "doctest.h"
#include "immsnp/characters.hpp"
#include "immsnp/immanant.hpp"
#include "immsnp/symmetric.hpp"
#include "oracles.hpp"

using namespace immsnp;

TEST_SUITE("immanant") {

TEST_CASE("Jacobi-Trudi matrix entries") {
  PolynomialMatrix h = jt_matrix(SkewShape(Partition{2, 1}), 2);
  CHECK(h.order() == 2);
  CHECK(h.at(0, 0) == h_poly(2, 2));
  CHECK(h.at(0, 1) == h_poly(3, 2));
  CHECK(h.at(1, 0) == SparsePolynomial::constant(2, 1));
  CHECK(h.at(1, 1) == h_poly(1, 2));
  PolynomialMatrix z = jt_matrix(SkewShape(Partition{3, 1}, Partition{2}), 2);
  CHECK(z.at(1, 0).is_zero());  // h_{-2}
}

TEST_CASE("Giambelli matrix entries") {
  PolynomialMatrix g = giambelli_matrix(Partition{2, 2}, 3);
  CHECK(g.order() == 2);
  CHECK(g.at(0, 0) == schur_poly(Partition{2, 1}, 3));
  CHECK(g.at(0, 1) == schur_poly(Partition{2}, 3));
  CHECK(g.at(1, 0) == schur_poly(Partition{1, 1}, 3));
  CHECK(g.at(1, 1) == schur_poly(Partition{1}, 3));
  CHECK(giambelli_matrix(Partition{2, 1}, 3).order() == 1);
  CHECK_THROWS_AS(giambelli_matrix(Partition{}, 3), Error);
  CHECK(determinant(g) == schur_poly(Partition{2, 2}, 3));
}

TEST_CASE("worked immanants") {
  PolynomialMatrix h = jt_matrix(SkewShape(Partition{2, 1}), 3);
  SparsePolynomial h1 = h_poly(1, 3), h2 = h_poly(2, 3), h3 = h_poly(3, 3);
  CHECK(immanant(h, Partition{2}) == h2 * h1 + h3);
  CHECK(immanant(h, Partition{1, 1}) == h2 * h1 - h3);
  CHECK(determinant(h) == schur_poly(Partition{2, 1}, 3));
  CHECK_THROWS_AS(immanant(h, Partition{2, 1}), Error);
}

TEST_CASE("determinant and permanent against cofactor expansion") {
  std::mt19937 rng(2024);
  for (int n = 1; n <= 5; ++n)
    for (int t = 0; t < 6; ++t) {
      PolynomialMatrix a = oracle::random_matrix(rng, n, 2, 2);
      CHECK(determinant(a) == oracle::cofactor_determinant(a));
      CHECK(permanent(a) == oracle::expansion_permanent(a));
    }
}

TEST_CASE("pruned parallel evaluation matches the per-permutation reference") {
  std::mt19937 rng(99);
  for (int n = 1; n <= 5; ++n) {
    PolynomialMatrix a = oracle::random_matrix(rng, n, 2, 2);
    CHECK(class_sums(a) == class_sums_reference(a));
    for (const auto& nu : partitions_of(n)) CHECK(immanant(a, nu) == immanant_reference(a, nu));
  }
  for (const SkewShape& s : enumerate_skew_shapes(5, 4)) {
    PolynomialMatrix h = jt_matrix(s, 2);
    CHECK(class_sums(h) == class_sums_reference(h));
  }
}

TEST_CASE("dimension-weighted immanant sum is n! times the diagonal product") {
  std::mt19937 rng(5);
  for (int n = 1; n <= 4; ++n)
    for (int t = 0; t < 4; ++t) {
      PolynomialMatrix a = oracle::random_matrix(rng, n, 2, 2);
      auto table = CharacterTable::get(n);
      SparsePolynomial total(2);
      for (const auto& [nu, imm] : all_immanants(a)) total += imm * mpz_class(static_cast<long>(table->dimension(nu)));
      SparsePolynomial diag = SparsePolynomial::constant(2, 1);
      for (int i = 0; i < n; ++i) diag = diag * a.at(i, i);
      CHECK(total == diag * mpz_class(static_cast<long>(factorial(n))));
    }
}

TEST_CASE("Jacobi-Trudi immanants are symmetric") {
  for (const SkewShape& s : enumerate_skew_shapes(5, 3))
    for (const auto& [nu, imm] : all_immanants(jt_matrix(s, 3))) CHECK(is_symmetric(imm));
}

TEST_CASE("pure powers of (n-1,1) immanants of border strips") {
  for (const SkewShape& s : enumerate_border_strips(6, 4)) {
    int n = s.rows();
    if (n < 2) continue;
    Partition nu{n - 1, 1};
    for (int l : {2, 3}) {
      SparsePolynomial imm = immanant(jt_matrix(s, l), nu);
      for (int j = 0; j < l; ++j) {
        ExponentVector e(l);
        e.set(j, s.size());
        CHECK(imm.coefficient(e) == mpz_class(static_cast<long>(adjacent_product_character_sum(nu))));
      }
    }
  }
}

TEST_CASE("order bound") {
  PolynomialMatrix big(13, 1);
  CHECK_THROWS_AS(class_sums(big), ResourceBoundError);
}

}  // TEST_SUITE
