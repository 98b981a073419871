#pragma once

// Lattice-path networks for Jacobi-Trudi and Giambelli matrices, path
// families, skeletons, and the leading monomial of Giambelli immanants.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "immsnp/combinatorics.hpp"
#include "immsnp/polynomial.hpp"

namespace immsnp {

enum class NetworkKind { GreeneJT, Giambelli };
std::string to_string(NetworkKind k);

// How the level of a path may change when it crosses a vertical line.
enum class LineRule { NonDecreasing, NonIncreasing };

// Paths run left to right across unit column intervals [c, c+1] between the
// lines x = min_x .. max_x. A path is the list of levels of its horizontal
// steps, one per interval; vertical moves are implicit. The level sequence
// obeys the rule of each interior line it crosses. Paths start and end at
// level -infinity / the extreme level, so the first and last levels are free.
//
// Greene JT network: level = height 1..l, weight x_height, every line
//   lets the height weakly increase.
// Giambelli network: level = depth j (the path is at y = -j), lines at
//   x <= 0 go up (depth weakly decreases), lines at x > 0 go down.
class PlanarNetwork {
 public:
  NetworkKind kind() const { return kind_; }
  int nvars() const { return nvars_; }
  int min_x() const { return min_x_; }
  int max_x() const { return max_x_; }
  int levels() const { return levels_; }
  const std::vector<int>& starts() const { return starts_; }
  const std::vector<int>& ends() const { return ends_; }
  int terminal_count() const { return static_cast<int>(starts_.size()); }

  LineRule rule(int x) const;
  // Variable index (1-based) of the step over [c, c+1] at this level, or 0
  // when the step does not exist. Defined for every integer c.
  int weight_index(int c, int level) const;

  friend PlanarNetwork greene_network(const SkewShape& shape, int nvars);
  friend PlanarNetwork giambelli_network(const Partition& lambda, int nvars);

 private:
  NetworkKind kind_ = NetworkKind::GreeneJT;
  int nvars_ = 0;
  int min_x_ = 0;
  int max_x_ = 0;
  int levels_ = 0;
  int c1_ = 0;  // Giambelli: least content of the largest hook
  std::vector<int> starts_;
  std::vector<int> ends_;
};

// Terminals P_i = mu_i - i, Q_i = lambda_i - i over all rows of the shape.
PlanarNetwork greene_network(const SkewShape& shape, int nvars);
// Terminals P_i = i - lambda'_i, Q_i = lambda_i - i + 1 for i <= rank.
PlanarNetwork giambelli_network(const Partition& lambda, int nvars);

struct LatticePath {
  int start_x = 0;
  std::vector<int> levels;  // levels[k] is the level over [start_x + k, start_x + k + 1]
};

// All paths from x = from to x = to. Empty when from > to; a single empty
// path when from == to.
std::vector<LatticePath> enumerate_paths(const PlanarNetwork& net, int from, int to);
SparsePolynomial path_generating_function(const PlanarNetwork& net, int from, int to);

struct SkeletonStep {
  int col;
  int level;
  int count;
  auto operator<=>(const SkeletonStep&) const = default;
};
using Skeleton = std::vector<SkeletonStep>;  // sorted by (col, level)

struct PathFamily {
  Permutation pi;  // path i runs from P_{pi(i)} to Q_i
  std::vector<LatticePath> paths;
  ExponentVector weight;
  Skeleton skeleton;
};

struct EnumerationLimits {
  int max_total_degree = 24;
  std::int64_t max_families = 2'000'000;
};

// Throws ResourceBoundError when the network degree or family count exceeds the limits.
std::vector<PathFamily> enumerate_path_families(const PlanarNetwork& net, const EnumerationLimits& limits = {});

// Sum over families of chi^nu(pi_F) x^{weight(F)}.
SparsePolynomial family_sum(const std::vector<PathFamily>& families, const Partition& nu, int nvars);

struct Interval {
  int first;  // 0-based, inclusive
  int last;
  auto operator<=>(const Interval&) const = default;
};

struct SkeletonGroup {
  Skeleton skeleton;
  std::vector<Permutation> permutations;  // sorted multiset
  bool verified = false;
  std::vector<Interval> intervals;  // S_{J_1} S_{J_2} ... when verified
};

struct SkeletonReport {
  std::vector<SkeletonGroup> groups;
  std::size_t failures = 0;
};

// The multiset of products s_1 s_2 ... s_m with s_t in the symmetric group
// of intervals[t], as a sorted list of permutations of {0..n-1}.
std::vector<Permutation> interval_product_multiset(int n, const std::vector<Interval>& intervals);

// Groups families by skeleton and searches, per group, for an interval
// sequence whose product multiset equals the group's permutations.
SkeletonReport skeleton_groups(const std::vector<PathFamily>& families, int max_intervals = 8);

struct LeadingTerm {
  ExponentVector exponent;
  mpz_class coefficient;
};

// The dominance-largest monomial of Imm_nu G_lambda; nvars defaults to |lambda|.
LeadingTerm leading_coefficient(const Partition& lambda, const Partition& nu, int nvars = 0);

}  // namespace immsnp
