#include <random>

#include "doctest.h"
#include "immsnp/characters.hpp"
#include "oracles.hpp"

using namespace immsnp;

TEST_SUITE("characters") {

TEST_CASE("small values") {
  CHECK(mn_character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  CHECK(mn_character(Partition{2, 1}, Partition{2, 1}) == 0);
  CHECK(mn_character(Partition{2, 1}, Partition{3}) == -1);
  CHECK(mn_character(Partition{2, 2}, Partition{2, 2}) == 2);
  CHECK(mn_character(Partition{3, 1, 1}, Partition{5}) == 1);
  CHECK_THROWS_AS(mn_character(Partition{2, 1}, Partition{2}), Error);
}

TEST_CASE("trivial, sign and dimension rows") {
  for (int n = 1; n <= 8; ++n) {
    auto table = CharacterTable::get(n);
    Partition triv{n};
    Partition sign(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (const auto& rho : partitions_of(n)) {
      CHECK((*table)(triv, rho) == 1);
      int odd = rho.size() - rho.length();  // sign of a permutation of type rho is (-1)^(n - parts)
      CHECK((*table)(sign, rho) == (odd % 2 == 0 ? 1 : -1));
    }
    for (const auto& nu : partitions_of(n)) CHECK(table->dimension(nu) == oracle::hook_dimension(nu));
  }
}

TEST_CASE("standard character is fix - 1") {
  std::mt19937 rng(11);
  for (int n = 2; n <= 7; ++n) {
    Partition std_nu{n - 1, 1};
    for (int t = 0; t < 100; ++t) {
      std::vector<int> v(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
      std::shuffle(v.begin(), v.end(), rng);
      Permutation p(v);
      CHECK(standard_character(p) == p.fixed_points() - 1);
      CHECK(mn_character(std_nu, cycle_type(p)) == p.fixed_points() - 1);
    }
  }
}

TEST_CASE("orthogonality of rows and columns") {
  for (int n = 1; n <= 7; ++n) {
    auto table = CharacterTable::get(n);
    auto parts = partitions_of(n);
    std::int64_t order = factorial(n);
    std::int64_t total = 0;
    for (const auto& rho : parts) total += class_size(rho);
    CHECK(total == order);
    for (const auto& a : parts)
      for (const auto& b : parts) {
        std::int64_t row = 0;
        for (const auto& rho : parts) row += class_size(rho) * (*table)(a, rho) * (*table)(b, rho);
        CHECK(row == (a == b ? order : 0));
        std::int64_t col = 0;
        for (const auto& nu : parts) col += (*table)(nu, a) * (*table)(nu, b);
        CHECK(col == (a == b ? order / class_size(a) : 0));
      }
  }
}

TEST_CASE("Young subgroup sums: both routes and the dominance pattern") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& nu : partitions_of(n))
      for (const auto& mu : partitions_of(n)) {
        std::int64_t direct = young_subgroup_character_sum_direct(nu, mu);
        CHECK(direct == young_subgroup_character_sum_kostka(nu, mu));
        CHECK((direct != 0) == dominance_leq(mu, nu));
        if (mu == nu) CHECK(direct == young_subgroup_order(nu));
      }
}

TEST_CASE("adjacent product multiset") {
  CHECK_THROWS_AS(adjacent_product_multiset(1), Error);
  for (int n = 2; n <= 8; ++n) {
    auto ms = adjacent_product_multiset(n);
    CHECK(ms.size() == (std::size_t{1} << (n - 1)));
    auto hist = fixed_point_histogram(n);
    std::int64_t total = 0, weighted = 0;
    for (auto [k, c] : hist) {
      total += c;
      weighted += c * (k - 1);
    }
    CHECK(total == (std::int64_t{1} << (n - 1)));
    CHECK(hist[n] == 1);
    CHECK(weighted == adjacent_product_character_sum(Partition{n - 1, 1}));
    // Each product of distinct adjacent transpositions in index order is a
    // product of disjoint cycles on consecutive runs, so it occurs once.
    std::set<Permutation> distinct(ms.begin(), ms.end());
    CHECK(distinct.size() == ms.size());
  }
  CHECK(adjacent_product_character_sum(Partition{1, 1}) == 0);
  CHECK(adjacent_product_character_sum(Partition{3, 1}) == 4);
  CHECK(fixed_point_histogram(4)[0] == 2);
}

}  // TEST_SUITE
