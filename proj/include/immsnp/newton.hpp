#pragma once

// Supports, permutahedra, Newton polytopes and the saturation check.

#include <set>
#include <string>
#include <vector>

#include "immsnp/combinatorics.hpp"
#include "immsnp/polynomial.hpp"

namespace immsnp {

enum class SnpMethod { FastPermutahedron, GeneralHull };
std::string to_string(SnpMethod m);

struct SnpReport {
  int degree = 0;  // total degree; for inhomogeneous input the maximum degree
  bool homogeneous = true;
  int nvars = 0;
  std::size_t support_size = 0;
  std::size_t lattice_point_count = 0;
  // Lattice points of the Newton polytope missing from the support.
  std::vector<ExponentVector> missing_points;
  bool is_snp = false;
  // Dominance-maximal partitions among the sorted support exponents.
  std::vector<Partition> dominance_max;
  bool is_m_convex = false;
  SnpMethod method = SnpMethod::GeneralHull;
};

struct Permutahedron {
  Permutahedron(Partition lambda, int nvars);
  Partition lambda;
  int nvars;
};

std::vector<ExponentVector> support(const SparsePolynomial& f);

// Integer points of P_lambda: all alpha with |alpha| = |lambda| whose sorted
// rearrangement is dominated by lambda.
std::vector<ExponentVector> permutahedron_lattice_points(const Permutahedron& p);
// Same set computed by exact hull membership against the orbit of lambda.
// Only the sorted candidates are tested; P_lambda is invariant under
// coordinate permutations.
std::vector<ExponentVector> permutahedron_lattice_points_by_hull(const Permutahedron& p);

// Lattice points of P_mu contained in those of P_lambda (both by hull).
bool rado_containment(const Partition& mu, const Partition& lambda, int nvars);

// Exact rational test of p in conv(generators).
bool point_in_hull(const ExponentVector& p, const std::vector<ExponentVector>& generators);

std::vector<Partition> dominance_maximal(const std::vector<ExponentVector>& points);
bool support_is_permutation_closed(const std::vector<ExponentVector>& points);

enum class SnpPath { Auto, General };

struct SnpOptions {
  SnpPath path = SnpPath::Auto;
  bool parallel = true;
};

SnpReport snp_check(const SparsePolynomial& f, const SnpOptions& options = {});

// Exchange axiom on a constant-sum set; false for mixed sums.
bool m_convex_check(const std::vector<ExponentVector>& points);

}  // namespace immsnp
