#include "doctest.h"
#include "oracles.hpp"
#include "immsnp/strips.hpp"
#include "immsnp/symmetric.hpp"

using namespace immsnp;

namespace {

const SkewShape kFig1(Partition{6, 5, 5, 4, 3}, Partition{3, 3, 1, 1});

OutsideDecomposition fig1_decomposition() {
  std::vector<Strip> strips{
      Strip({{1, 4}, {1, 5}, {1, 6}}),  // theta_1
      Strip({{2, 4}, {2, 5}}),          // theta_2
      Strip({{4, 4}, {3, 4}, {3, 5}}),  // theta_3
      Strip({{4, 2}, {4, 3}, {3, 3}}),  // theta_4
      Strip({{3, 2}}),                  // theta_5
      Strip({{5, 1}, {5, 2}, {5, 3}}),  // theta_6
  };
  return OutsideDecomposition(kFig1, strips);
}

std::string steps_string(const std::vector<Step>& steps) {
  std::string s;
  for (Step st : steps) s += to_char(st);
  return s;
}

}  // namespace

TEST_SUITE("strips") {

TEST_CASE("strip construction") {
  Strip s({{2, 1}, {2, 2}, {1, 2}});
  CHECK(s.start_content() == -1);
  CHECK(s.end_content() == 1);
  CHECK(steps_string(s.steps()) == "RU");
  CHECK(s.shape() == SkewShape(Partition{2, 2}, Partition{1}));
  CHECK_THROWS_AS(Strip({{1, 1}, {1, 3}}), Error);
  CHECK_THROWS_AS(Strip({{1, 1}, {2, 1}}), Error);
  CHECK_THROWS_AS(Strip(std::vector<Cell>{}), Error);

  Strip f = Strip::from_steps(-1, {Step::Up, Step::Up, Step::Right});
  CHECK(f.start_content() == -1);
  CHECK(f.end_content() == 2);
  CHECK(f.shape() == SkewShape(Partition{2, 1, 1}));
  CHECK(is_border_strip(Strip::from_steps(3, {Step::Right, Step::Up, Step::Up, Step::Right}).shape()));
}

TEST_CASE("decomposition of the 15-box example") {
  OutsideDecomposition pi = fig1_decomposition();
  REQUIRE(pi.count() == 6);
  std::vector<std::pair<int, int>> ranges;
  for (const Strip& s : pi.strips()) ranges.emplace_back(s.start_content(), s.end_content());
  CHECK(ranges == std::vector<std::pair<int, int>>{{3, 5}, {2, 3}, {0, 2}, {-2, 0}, {-1, -1}, {-4, -2}});

  CuttingStrip phi = cutting_strip(pi);
  CHECK(phi.min_content() == -4);
  CHECK(phi.max_content() == 5);
  CHECK(steps_string(phi.steps()) == "RRRUURRRR");
  CHECK(phi.direction(0) == Step::Up);
  CHECK(phi.direction(-3) == Step::Right);
  CHECK_THROWS_AS(phi.direction(-4), Error);
}

TEST_CASE("sharp values of the 15-box example") {
  OutsideDecomposition pi = fig1_decomposition();
  CuttingStrip phi = cutting_strip(pi);
  auto shape_of = [&](int i, int j) {
    SharpResult r = sharp(pi[i - 1], pi[j - 1], phi);
    REQUIRE(r.kind == SharpResult::Kind::Shape);
    return std::make_tuple(r.p, r.q, r.strip->shape());
  };
  CHECK(shape_of(1, 5) == std::make_tuple(-1, 5, SkewShape(Partition{5, 1, 1})));
  CHECK(shape_of(2, 3) == std::make_tuple(0, 3, SkewShape(Partition{3, 1})));
  CHECK(shape_of(3, 2) == std::make_tuple(2, 2, SkewShape(Partition{1})));
  CHECK(shape_of(4, 6) == std::make_tuple(-4, 0, SkewShape(Partition{4, 4}, Partition{3})));
  CHECK(shape_of(6, 4) == std::make_tuple(-2, -2, SkewShape(Partition{1})));
  SharpResult u = sharp(pi[4], pi[0], phi);
  CHECK(u.kind == SharpResult::Kind::Undefined);
  CHECK(u.p == 3);
  CHECK(u.q == -1);
  // theta_5 ends at -1 and theta_3 starts at 0.
  CHECK(sharp(pi[4], pi[2], phi).kind == SharpResult::Kind::Empty);
  CHECK(sharp(pi[3], pi[1], phi).kind == SharpResult::Kind::Undefined);
}

TEST_CASE("invalid decompositions") {
  // Overlap.
  CHECK_THROWS_AS(OutsideDecomposition(SkewShape(Partition{2}), {Strip({{1, 1}, {1, 2}}), Strip({{1, 2}})}), Error);
  // Missing box.
  CHECK_THROWS_AS(OutsideDecomposition(SkewShape(Partition{2}), {Strip({{1, 1}})}), Error);
  // Box outside the shape.
  CHECK_THROWS_AS(OutsideDecomposition(SkewShape(Partition{1}), {Strip({{1, 1}, {1, 2}})}), Error);
  // A single box in the middle of a 3x3 square neither starts nor ends on the perimeter.
  CHECK_THROWS_WITH_AS(OutsideDecomposition(SkewShape(Partition{3, 3, 3}),
                                            {Strip({{2, 2}}), Strip({{1, 1}, {1, 2}, {1, 3}}), Strip({{2, 1}}),
                                             Strip({{2, 3}}), Strip({{3, 1}, {3, 2}, {3, 3}})}),
                       doctest::Contains("perimeter"), Error);
}

TEST_CASE("Giambelli decomposition into diagonal hooks") {
  OutsideDecomposition g = giambelli_decomposition(Partition{6, 6, 4, 4, 1, 1});
  REQUIRE(g.count() == 4);
  CHECK(g[0].shape() == SkewShape(Partition{6, 1, 1, 1, 1, 1}));
  CHECK(g[1].shape() == SkewShape(Partition{5, 1, 1}));
  CHECK(g[2].shape() == SkewShape(Partition{2, 1}));
  CHECK(g[3].shape() == SkewShape(Partition{1}));
  CHECK(g[0].start_content() == -5);
  CHECK(g[0].end_content() == 5);
  CuttingStrip phi = cutting_strip(g);
  std::string expect(5, 'U');
  expect += std::string(5, 'R');
  CHECK(steps_string(phi.steps()) == expect);
  CHECK_THROWS_AS(giambelli_decomposition(Partition{}), Error);
}

TEST_CASE("determinant of the sharp matrix is the skew Schur polynomial") {
  SUBCASE("15-box example") {
    OutsideDecomposition pi = fig1_decomposition();
    for (int l : {2, 3}) CHECK(determinant(hamel_goulden_matrix(pi, l)) == ssyt_schur(kFig1, l));
  }
  SUBCASE("diagonal hooks") {
    for (int d = 1; d <= 6; ++d)
      for (const auto& lam : partitions_of(d))
        for (int l : {2, 3}) {
          PolynomialMatrix m = hamel_goulden_matrix(giambelli_decomposition(lam), l);
          CHECK(m == giambelli_matrix(lam, l));
          CHECK(determinant(m) == schur_poly(lam, l));
        }
  }
  SUBCASE("rows give the Jacobi-Trudi matrix") {
    for (const SkewShape& s : enumerate_skew_shapes(5, 3)) {
      bool nonempty_rows = true;
      for (int i = 0; i < s.rows(); ++i) nonempty_rows = nonempty_rows && s.row_length(i) > 0;
      OutsideDecomposition rows = row_decomposition(s);
      PolynomialMatrix m = hamel_goulden_matrix(rows, 3);
      CHECK(determinant(m) == ssyt_schur(s, 3));
      if (nonempty_rows) CHECK(m == jt_matrix(s, 3));
    }
  }
}

}  // TEST_SUITE
