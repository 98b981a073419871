#pragma once

// The coefficients E^theta(y) of F_{lambda/mu}(x,y) = sum_nu s_nu(y) Imm_nu H(lambda,mu)(x)
// in the Schur basis of the x alphabet.

#include <map>

#include "immsnp/combinatorics.hpp"
#include "immsnp/polynomial.hpp"

namespace immsnp {

// Sum over nu of s_nu(y) times [s_theta] Imm_nu H. Requires x_vars >= |lambda/mu|.
SparsePolynomial e_theta_definition(const SkewShape& shape, const Partition& theta, int y_vars, int x_vars);

// All theta at once, sharing the immanant computation. Keys are the theta
// with a nonzero E^theta.
std::map<Partition, SparsePolynomial> e_theta_all(const SkewShape& shape, int y_vars, int x_vars);

// Coefficient of p_{alpha_1} ... p_{alpha_m} for each composition alpha of the
// number of rows: K_{theta, gamma|alpha} with gamma the row lengths.
// Requires a border strip.
std::map<Composition, std::int64_t> e_theta_p_expansion(const SkewShape& shape, const Partition& theta);

SparsePolynomial e_theta_border_formula(const SkewShape& shape, const Partition& theta, int y_vars);

// The row-length composition of a skew shape.
Composition row_lengths(const SkewShape& shape);

// K_{theta, gamma|alpha} != 0 implies K_{theta, gamma|beta} != 0 for beta refining alpha.
bool refinement_kostka_check(const Partition& theta, const Composition& gamma, const Composition& alpha,
                             const Composition& beta);

}  // namespace immsnp
