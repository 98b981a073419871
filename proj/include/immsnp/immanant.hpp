#pragma once

// Jacobi-Trudi and Giambelli matrices and exact immanants.
//
// Two evaluation paths are kept side by side:
//  * class_sums / immanant: depth-first over rows with pruning on zero
//    entries and shared prefix products, grouping permutations by cycle type;
//    the top-level branches run under OpenMP.
//  * class_sums_reference / immanant_reference: serial, one product per
//    permutation of S_n, one character evaluation per permutation. Used as the
//    oracle in tests and as the baseline in the benchmark.

#include <map>
#include <vector>

#include "immsnp/combinatorics.hpp"
#include "immsnp/polynomial.hpp"

namespace immsnp {

class PolynomialMatrix {
 public:
  PolynomialMatrix(int order, int nvars);
  PolynomialMatrix(int order, int nvars, std::vector<SparsePolynomial> row_major);

  int order() const { return order_; }
  int nvars() const { return nvars_; }
  const SparsePolynomial& at(int i, int j) const { return entries_[idx(i, j)]; }
  void set(int i, int j, SparsePolynomial p);
  bool operator==(const PolynomialMatrix&) const = default;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(order_) + static_cast<std::size_t>(j);
  }
  int order_;
  int nvars_;
  std::vector<SparsePolynomial> entries_;
};

// Entry (i,j) = h_{(lambda_i - i) - (mu_j - j)}; order = rows of the shape.
PolynomialMatrix jt_matrix(const SkewShape& shape, int nvars);
// Entry (i,j) = s_{(alpha_i | beta_j)}; order = rank(lambda).
PolynomialMatrix giambelli_matrix(const Partition& lambda, int nvars);

// cycle type rho -> sum over permutations pi of that type of prod a_{i,pi(i)}
using ClassSums = std::map<Partition, SparsePolynomial>;

ClassSums class_sums(const PolynomialMatrix& a);
ClassSums class_sums_reference(const PolynomialMatrix& a);

SparsePolynomial immanant_from_class_sums(const ClassSums& sums, const Partition& nu, int nvars);
SparsePolynomial immanant(const PolynomialMatrix& a, const Partition& nu);
SparsePolynomial immanant_reference(const PolynomialMatrix& a, const Partition& nu);
// nu -> Imm_nu A for every nu |- order, sharing one permutation pass.
std::map<Partition, SparsePolynomial> all_immanants(const PolynomialMatrix& a);

inline SparsePolynomial determinant(const PolynomialMatrix& a) {
  return immanant(a, Partition(std::vector<int>(static_cast<std::size_t>(a.order()), 1)));
}
inline SparsePolynomial permanent(const PolynomialMatrix& a) {
  return a.order() == 0 ? SparsePolynomial::constant(a.nvars(), 1) : immanant(a, Partition{a.order()});
}

}  // namespace immsnp
