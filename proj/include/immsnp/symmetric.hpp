#pragma once

// Classical symmetric polynomial bases in a fixed finite number of variables.

#include <cstdint>
#include <map>
#include <span>

#include "immsnp/combinatorics.hpp"
#include "immsnp/polynomial.hpp"

namespace immsnp {

using CoefficientMap = std::map<Partition, mpz_class>;

// Complete homogeneous h_k; 1 for k = 0 and 0 for k < 0.
SparsePolynomial h_poly(int k, int nvars);
// Monomial symmetric m_lambda; 0 when lambda has more than nvars parts.
SparsePolynomial m_poly(const Partition& lambda, int nvars);
// Power sum product p_lambda; p_() = 1.
SparsePolynomial p_poly(const Partition& lambda, int nvars);
// Sum over semistandard fillings of the shape with entries 1..nvars.
SparsePolynomial ssyt_schur(const SkewShape& shape, int nvars);
inline SparsePolynomial schur_poly(const Partition& lambda, int nvars) {
  return ssyt_schur(SkewShape(lambda), nvars);
}

// Number of SSYT of shape lambda with the given content (zeros allowed).
std::int64_t kostka(const Partition& lambda, std::span<const int> content);
inline std::int64_t kostka(const Partition& lambda, const Partition& mu) {
  return kostka(lambda, mu.parts());
}

// f = sum_mu c_mu m_mu. Throws if f is not symmetric.
CoefficientMap m_expand(const SparsePolynomial& f);
// Rebuilds sum c_mu m_mu.
SparsePolynomial from_m_expansion(const CoefficientMap& coeffs, int nvars);
// f = sum_lambda a_lambda s_lambda; requires f symmetric, homogeneous of
// degree d and nvars >= d.
CoefficientMap schur_expand(const SparsePolynomial& f);
SparsePolynomial from_schur_expansion(const CoefficientMap& coeffs, int nvars);

// True iff every variable permutation fixes f (checked on orbit coefficients).
bool is_symmetric(const SparsePolynomial& f);

}  // namespace immsnp
