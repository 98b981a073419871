#pragma once

// Partitions, skew shapes, compositions and permutations.
//
// All types here are immutable values. Partitions are stored without
// trailing zeros; indexing past the last part yields 0 so that shapes of
// different lengths can be compared and padded on demand.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "immsnp/error.hpp"

namespace immsnp {

class Partition {
 public:
  Partition() = default;
  // Accepts trailing zeros and drops them. Throws on increasing or negative parts.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  // 0-based; returns 0 past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // Parts padded with zeros to `len` entries (len >= length()).
  std::vector<int> padded(int len) const;
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// Sorts an arbitrary non-negative vector into a partition.
Partition sorted_partition(std::span<const int> values);

bool dominance_leq(const Partition& mu, const Partition& lambda);
Partition conjugate(const Partition& lambda);
std::int64_t factorial(int n);
// prod of factorials of the parts, i.e. the order of the Young subgroup
std::int64_t young_subgroup_order(const Partition& lambda);

// Frobenius coordinates (arms | legs).
struct FrobeniusCoordinates {
  std::vector<int> arms;
  std::vector<int> legs;
  int rank() const { return static_cast<int>(arms.size()); }
  bool operator==(const FrobeniusCoordinates&) const = default;
};

FrobeniusCoordinates frobenius(const Partition& lambda);
Partition from_frobenius(const FrobeniusCoordinates& f);
int rank(const Partition& lambda);

// All partitions of d with at most max_length parts, reverse lexicographic.
std::vector<Partition> enumerate_partitions(int d, int max_length);
std::vector<Partition> partitions_of(int d);

struct Cell {
  int row;  // 1-based
  int col;  // 1-based
  int content() const { return col - row; }
  auto operator<=>(const Cell&) const = default;
};

// lambda/mu in English convention. The inner partition is padded with zeros to
// the outer length; the number of rows is the outer length.
class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner);
  explicit SkewShape(Partition outer) : SkewShape(std::move(outer), Partition{}) {}

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int rows() const { return outer_.length(); }
  int size() const { return outer_.size() - inner_.size(); }
  int row_length(int i) const { return outer_[i] - inner_[i]; }  // 0-based row
  bool contains(Cell c) const;
  // Row-major, top to bottom, left to right.
  std::vector<Cell> cells() const;
  std::string to_string() const;

  bool operator==(const SkewShape&) const = default;
  auto operator<=>(const SkewShape&) const = default;

 private:
  Partition outer_;
  Partition inner_;
};

// True iff every row is nonempty and lambda_{i+1} = mu_i + 1 for all i.
bool is_border_strip(const SkewShape& shape);

// Nonempty skew shapes lambda/mu with |lambda| <= max_size and at most
// max_rows rows, in a deterministic order.
std::vector<SkewShape> enumerate_skew_shapes(int max_size, int max_rows);

class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  std::string to_string() const;

  auto operator<=>(const Composition&) const = default;
  bool operator==(const Composition&) const = default;

 private:
  std::vector<int> parts_;
};

// Block sums of `base` over consecutive blocks whose sizes are index.parts().
Composition meld(const Composition& base, const Composition& index);
bool refines(const Composition& beta, const Composition& alpha);
// All compositions of n, reverse lexicographic.
std::vector<Composition> compositions_of(int n);
// All refinements of alpha (including alpha itself).
std::vector<Composition> refinements_of(const Composition& alpha);

// The border strip with the given row lengths (top to bottom) whose lowest
// row starts in column 1. Every border strip is a column translate of one of these.
SkewShape border_strip_from_rows(const Composition& rows);
// Border strips with at most max_size boxes and at most max_rows rows,
// by size and then reverse lexicographic row lengths.
std::vector<SkewShape> enumerate_border_strips(int max_size, int max_rows);

// A bijection on {0..n-1}. Composition is right-to-left: (a*b)(x) = a(b(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  static Permutation from_one_based(std::span<const int> images);
  static Permutation transposition(int n, int i, int j);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }
  std::vector<int> one_based() const;
  int fixed_points() const;
  int sign() const;
  Permutation inverse() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

Partition cycle_type(const Permutation& pi);

}  // namespace immsnp
