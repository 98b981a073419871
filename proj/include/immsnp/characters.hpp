#pragma once

// Irreducible characters of the symmetric groups and the character sums over
// Young subgroups and products of adjacent transposition subgroups.

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "immsnp/combinatorics.hpp"

namespace immsnp {

// chi^nu on the class of cycle type rho (Murnaghan-Nakayama rule).
std::int64_t mn_character(const Partition& nu, const Partition& rho);

// fix(pi) - 1, the character of the standard representation.
std::int64_t standard_character(const Permutation& pi);

// n! / z_rho
std::int64_t class_size(const Partition& rho);

class CharacterTable {
 public:
  explicit CharacterTable(int n);

  // Shared memoized table; safe to call from several threads.
  static std::shared_ptr<const CharacterTable> get(int n);

  int degree() const { return n_; }
  const std::vector<Partition>& partitions() const { return parts_; }
  std::int64_t operator()(const Partition& nu, const Partition& rho) const;
  std::int64_t dimension(const Partition& nu) const;

 private:
  int n_;
  std::vector<Partition> parts_;
  std::map<Partition, std::size_t> index_;
  std::vector<std::int64_t> values_;  // row nu, column rho
};

// Largest n for which the direct enumeration methods below will run.
inline constexpr int kDirectEnumerationBound = 10;

// sum over g in S_mu of chi^nu(g), by listing every element of S_mu.
std::int64_t young_subgroup_character_sum_direct(const Partition& nu, const Partition& mu);
// |S_mu| * K_{nu,mu}
std::int64_t young_subgroup_character_sum_kostka(const Partition& nu, const Partition& mu);
// Runs both routes (direct only when n <= kDirectEnumerationBound) and throws
// if they disagree.
std::int64_t young_subgroup_character_sum(const Partition& nu, const Partition& mu);

// The multiset {s_1^{e_1} s_2^{e_2} ... s_{n-1}^{e_{n-1}} : e in {0,1}^{n-1}}
// of products taken in index order, duplicates kept.
std::vector<Permutation> adjacent_product_multiset(int n);
std::int64_t adjacent_product_character_sum(const Partition& nu);
// k -> number of elements of adjacent_product_multiset(n) with k fixed points
std::map<int, std::int64_t> fixed_point_histogram(int n);

}  // namespace immsnp
