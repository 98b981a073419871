#include <random>
#include <set>

#include "doctest.h"
#include "immsnp/combinatorics.hpp"

using namespace immsnp;

TEST_SUITE("combinatorics") {

TEST_CASE("partition construction") {
  CHECK(Partition({3, 1, 0, 0}) == Partition{3, 1});
  CHECK(Partition{3, 1}.size() == 4);
  CHECK(Partition{3, 1}[5] == 0);
  CHECK_THROWS_AS(Partition({1, 2}), Error);
  CHECK_THROWS_AS(Partition({2, -1}), Error);
  CHECK(Partition{}.empty());
  CHECK(Partition{4, 2, 1}.to_string() == "(4,2,1)");
}

TEST_CASE("partition counts match the partition function") {
  const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int d = 0; d <= 10; ++d) CHECK(partitions_of(d).size() == static_cast<std::size_t>(p[d]));
  CHECK(enumerate_partitions(5, 2).size() == 3);
  auto ps = partitions_of(4);
  CHECK(ps.front() == Partition{4});
  CHECK(ps.back() == Partition{1, 1, 1, 1});
}

TEST_CASE("dominance order") {
  CHECK(dominance_leq(Partition{2, 2}, Partition{3, 1}));
  CHECK_FALSE(dominance_leq(Partition{3, 1}, Partition{2, 2}));
  CHECK(dominance_leq(Partition{3, 3}, Partition{4, 1, 1}) == false);
  CHECK(dominance_leq(Partition{4, 1, 1}, Partition{3, 3}) == false);
  CHECK_THROWS_AS(dominance_leq(Partition{2}, Partition{3}), Error);
  // Reversal under conjugation.
  for (const auto& a : partitions_of(6))
    for (const auto& b : partitions_of(6))
      CHECK(dominance_leq(a, b) == dominance_leq(conjugate(b), conjugate(a)));
}

TEST_CASE("conjugate and Frobenius coordinates") {
  CHECK(conjugate(Partition{6, 6, 4, 4, 1, 1}) == Partition{6, 4, 4, 4, 2, 2});
  FrobeniusCoordinates f = frobenius(Partition{6, 6, 4, 4, 1, 1});
  CHECK(f.arms == std::vector<int>{5, 4, 1, 0});
  CHECK(f.legs == std::vector<int>{5, 2, 1, 0});
  CHECK(rank(Partition{2, 2}) == 2);
  CHECK_THROWS_AS(frobenius(Partition{}), Error);
  for (int d = 1; d <= 8; ++d)
    for (const auto& p : partitions_of(d)) {
      CHECK(conjugate(conjugate(p)) == p);
      CHECK(from_frobenius(frobenius(p)) == p);
    }
}

TEST_CASE("factorials and Young subgroups") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(young_subgroup_order(Partition{3, 2, 2}) == 24);
  CHECK_THROWS(factorial(21));
}

TEST_CASE("skew shapes") {
  SkewShape s(Partition{6, 5, 5, 4, 3}, Partition{3, 3, 1, 1});
  CHECK(s.size() == 15);
  CHECK(s.rows() == 5);
  CHECK(s.contains({1, 4}));
  CHECK_FALSE(s.contains({1, 3}));
  CHECK(s.cells().size() == 15);
  CHECK_THROWS_AS(SkewShape(Partition{2}, Partition{3}), Error);
  CHECK_THROWS_AS(SkewShape(Partition{2}, Partition{1, 1}), Error);
}

TEST_CASE("border strips") {
  CHECK(is_border_strip(SkewShape(Partition{2, 1})));
  CHECK_FALSE(is_border_strip(SkewShape(Partition{2, 2})));
  CHECK(is_border_strip(SkewShape(Partition{3, 3}, Partition{2})));
  CHECK_FALSE(is_border_strip(SkewShape(Partition{3, 1}, Partition{2})));  // disconnected
  // Connected without a 2x2 block, checked cell by cell.
  for (const SkewShape& s : enumerate_skew_shapes(7, 4)) {
    bool rows_ok = true;
    for (int i = 0; i < s.rows(); ++i) rows_ok = rows_ok && s.row_length(i) > 0;
    bool block = false;
    for (const Cell& c : s.cells())
      block = block || (s.contains({c.row + 1, c.col}) && s.contains({c.row, c.col + 1}) && s.contains({c.row + 1, c.col + 1}));
    // Connectivity by flood fill.
    auto cells = s.cells();
    std::vector<Cell> stack{cells.front()};
    std::set<Cell> seen{cells.front()};
    while (!stack.empty()) {
      Cell c = stack.back();
      stack.pop_back();
      for (Cell n : {Cell{c.row + 1, c.col}, Cell{c.row - 1, c.col}, Cell{c.row, c.col + 1}, Cell{c.row, c.col - 1}})
        if (s.contains(n) && seen.insert(n).second) stack.push_back(n);
    }
    bool connected = seen.size() == cells.size();
    CHECK(is_border_strip(s) == (rows_ok && !block && connected));
  }
}

TEST_CASE("border strip enumeration by row lengths") {
  auto strips = enumerate_border_strips(5, 3);
  CHECK(strips.size() == 1 + 2 + 4 + 7 + 11);  // compositions with at most 3 parts
  for (const auto& s : strips) CHECK(is_border_strip(s));
  CHECK(border_strip_from_rows(Composition{2, 1}) == SkewShape(Partition{2, 1}));
  CHECK(border_strip_from_rows(Composition{1, 3}) == SkewShape(Partition{3, 3}, Partition{2}));
}

TEST_CASE("compositions, melds, refinements") {
  CHECK(compositions_of(4).size() == 8);
  CHECK(compositions_of(4).front() == Composition{4});
  CHECK(meld(Composition{2, 1, 3}, Composition{2, 1}) == Composition{3, 3});
  CHECK(meld(Composition{1, 2}, Composition{1, 1}) == Composition{1, 2});
  CHECK_THROWS_AS(meld(Composition{1, 2}, Composition{3}), Error);
  CHECK(refines(Composition{1, 1, 2}, Composition{2, 2}));
  CHECK_FALSE(refines(Composition{1, 2, 1}, Composition{2, 2}));
  CHECK(refinements_of(Composition{3}).size() == 4);
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : compositions_of(n)) {
      auto r = refinements_of(a);
      CHECK(r.size() == (std::size_t{1} << (n - a.length())));
      for (const auto& b : r) CHECK(refines(b, a));
    }
}

TEST_CASE("permutations") {
  Permutation a = Permutation::from_one_based(std::vector<int>{2, 3, 1});
  CHECK(a(0) == 1);
  CHECK(a.sign() == 1);
  CHECK(cycle_type(a) == Partition{3});
  CHECK(a * a.inverse() == Permutation::identity(3));
  CHECK(Permutation::transposition(4, 1, 2).sign() == -1);
  CHECK(Permutation::identity(5).fixed_points() == 5);
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0}), Error);

  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::vector<int> v{0, 1, 2, 3, 4, 5};
    std::shuffle(v.begin(), v.end(), rng);
    Permutation p(v);
    std::shuffle(v.begin(), v.end(), rng);
    Permutation q(v);
    CHECK((p * q).sign() == p.sign() * q.sign());
    CHECK((p * q)(3) == p(q(3)));
    CHECK(cycle_type(p) == cycle_type(q * p * q.inverse()));
    CHECK(cycle_type(p).size() == 6);
  }
}

}  // TEST_SUITE
