#include "doctest.h"
#include "oracles.hpp"
#include "immsnp/immanant.hpp"
#include "immsnp/networks.hpp"
#include "immsnp/symmetric.hpp"

using namespace immsnp;

TEST_SUITE("networks") {

TEST_CASE("Greene network terminals and path counts") {
  PlanarNetwork net = greene_network(SkewShape(Partition{3, 2, 2}, Partition{1, 1}), 3);
  CHECK(net.starts() == std::vector<int>{0, -1, -3});
  CHECK(net.ends() == std::vector<int>{2, 0, -1});
  CHECK(net.rule(0) == LineRule::NonDecreasing);
  CHECK(enumerate_paths(net, 0, 0).size() == 1);
  CHECK(enumerate_paths(net, 1, 0).empty());
  // Weakly increasing height sequences of length k over l levels.
  CHECK(enumerate_paths(net, -3, 0).size() == 10);
  for (int l = 1; l <= 4; ++l) {
    PlanarNetwork g = greene_network(SkewShape(Partition{1}), l);
    for (int k = 0; k <= 4; ++k) CHECK(path_generating_function(g, 0, k) == h_poly(k, l));
  }
}

TEST_CASE("Giambelli path generating functions are the hook Schur entries") {
  for (int d = 1; d <= 6; ++d)
    for (const auto& lam : partitions_of(d))
      for (int l : {1, 2, 3}) {
        PlanarNetwork net = giambelli_network(lam, l);
        PolynomialMatrix g = giambelli_matrix(lam, l);
        for (int i = 0; i < net.terminal_count(); ++i)
          for (int j = 0; j < net.terminal_count(); ++j)
            CHECK(path_generating_function(net, net.starts()[static_cast<std::size_t>(j)],
                                           net.ends()[static_cast<std::size_t>(i)]) == g.at(i, j));
      }
}

TEST_CASE("family sums equal immanants") {
  SUBCASE("Jacobi-Trudi") {
    for (const SkewShape& s : enumerate_skew_shapes(6, 3))
      for (int l : {1, 2, 3}) {
        PlanarNetwork net = greene_network(s, l);
        auto families = enumerate_path_families(net);
        PolynomialMatrix h = jt_matrix(s, l);
        for (const auto& [nu, imm] : all_immanants(h)) CHECK(family_sum(families, nu, l) == imm);
        CHECK(skeleton_groups(families).failures == 0);
      }
  }
  SUBCASE("Giambelli") {
    for (int d = 1; d <= 6; ++d)
      for (const auto& lam : partitions_of(d))
        for (int l : {1, 2, 3}) {
          PlanarNetwork net = giambelli_network(lam, l);
          auto families = enumerate_path_families(net);
          PolynomialMatrix g = giambelli_matrix(lam, l);
          for (const auto& [nu, imm] : all_immanants(g)) CHECK(family_sum(families, nu, l) == imm);
          CHECK(skeleton_groups(families).failures == 0);
        }
  }
}

TEST_CASE("interval products") {
  auto m = interval_product_multiset(3, {{0, 1}, {1, 2}});
  CHECK(m.size() == 4);
  CHECK(std::is_sorted(m.begin(), m.end()));
  // e, s_2, s_1 and s_1 s_2, each once.
  CHECK(std::count(m.begin(), m.end(), Permutation::identity(3)) == 1);
  CHECK(interval_product_multiset(3, {{0, 2}}).size() == 6);
  CHECK(interval_product_multiset(2, {}) == std::vector<Permutation>{Permutation::identity(2)});
  CHECK_THROWS_AS(interval_product_multiset(2, {{0, 2}}), Error);
}

TEST_CASE("enumeration limits") {
  PlanarNetwork net = greene_network(SkewShape(Partition{5, 5}), 3);
  CHECK_THROWS_AS(enumerate_path_families(net, {4, 1000}), ResourceBoundError);
  CHECK_THROWS_AS(enumerate_path_families(net, {24, 10}), ResourceBoundError);
}

TEST_CASE("the six-row Giambelli network") {
  const Partition lam{6, 6, 4, 4, 1, 1};
  PlanarNetwork net = giambelli_network(lam, 6);
  CHECK(net.starts() == std::vector<int>{-5, -2, -1, 0});
  CHECK(net.ends() == std::vector<int>{6, 5, 2, 1});
  CHECK(net.levels() == 11);
  CHECK(net.min_x() == -5);
  CHECK(net.max_x() == 6);
  CHECK(net.rule(0) == LineRule::NonIncreasing);
  CHECK(net.rule(1) == LineRule::NonDecreasing);

  // Expected step labels by height y = 6 - depth over the interval [c, c+1].
  // A label above 6 names a variable that is zero here, so the step is absent.
  auto label = [](int k) { return k <= 6 ? k : 0; };
  for (int y = -4; y <= 0; ++y) {
    int depth = 6 - y;
    for (int c = 1; c <= 5; ++c) CHECK(net.weight_index(c, depth) == label(1 - y));
    for (int i = 0; i <= 5; ++i) CHECK(net.weight_index(-i, depth) == label(1 - y + i));
  }
  for (int y = 1; y <= 5; ++y) {
    int depth = 6 - y;
    for (int i = 0; -y - i >= -5; ++i) CHECK(net.weight_index(-y - i, depth) == label(1 + i));
    CHECK(net.weight_index(1, depth) == 0);
  }

  // The highlighted family: every path keeps its starting depth.
  const int depths[4] = {6, 6, 7, 8};
  ExponentVector total(6);
  for (int i = 0; i < 4; ++i)
    for (int c = net.starts()[static_cast<std::size_t>(i)]; c < net.ends()[static_cast<std::size_t>(i)]; ++c) {
      int w = net.weight_index(c, depths[i]);
      REQUIRE(w > 0);
      total.increment(w - 1);
    }
  CHECK(total == ExponentVector{11, 4, 4, 1, 1, 1});
}

TEST_CASE("leading coefficients of Giambelli immanants") {
  LeadingTerm t = leading_coefficient(Partition{2, 2}, Partition{2});
  CHECK(t.coefficient == 2);
  CHECK(t.exponent == ExponentVector{3, 1, 0, 0});
  CHECK(leading_coefficient(Partition{2, 2}, Partition{1, 1}).coefficient == 1);
  CHECK_THROWS_AS(leading_coefficient(Partition{2, 2}, Partition{3}), Error);
  for (int d = 1; d <= 6; ++d)
    for (const auto& lam : partitions_of(d))
      for (const auto& nu : partitions_of(rank(lam)))
        CHECK(leading_coefficient(lam, nu).coefficient == mpz_class(static_cast<long>(young_subgroup_order(nu))));
}

}  // TEST_SUITE
