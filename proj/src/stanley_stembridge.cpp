#include "immsnp/stanley_stembridge.hpp"

#include "immsnp/immanant.hpp"
#include "immsnp/symmetric.hpp"

namespace immsnp {

std::map<Partition, SparsePolynomial> e_theta_all(const SkewShape& shape, int y_vars, int x_vars) {
  const int big_n = shape.size();
  if (big_n == 0) throw Error("e_theta: empty shape");
  if (x_vars < big_n)
    throw Error("e_theta: " + std::to_string(x_vars) + " x variables cannot separate Schur functions of degree " +
                std::to_string(big_n));
  PolynomialMatrix h = jt_matrix(shape, x_vars);
  ClassSums sums = class_sums(h);
  std::map<Partition, SparsePolynomial> out;
  for (const Partition& nu : partitions_of(shape.rows())) {
    SparsePolynomial imm = immanant_from_class_sums(sums, nu, x_vars);
    if (imm.is_zero()) continue;
    SparsePolynomial s_nu = schur_poly(nu, y_vars);
    for (const auto& [theta, c] : schur_expand(imm)) {
      auto it = out.try_emplace(theta, SparsePolynomial(y_vars)).first;
      it->second += s_nu * c;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

SparsePolynomial e_theta_definition(const SkewShape& shape, const Partition& theta, int y_vars, int x_vars) {
  if (theta.size() != shape.size())
    throw Error("e_theta: " + theta.to_string() + " is not a partition of |" + shape.to_string() + "|");
  auto all = e_theta_all(shape, y_vars, x_vars);
  auto it = all.find(theta);
  return it == all.end() ? SparsePolynomial(y_vars) : it->second;
}

Composition row_lengths(const SkewShape& shape) {
  std::vector<int> rows;
  for (int i = 0; i < shape.rows(); ++i) rows.push_back(shape.row_length(i));
  return Composition(std::move(rows));
}

std::map<Composition, std::int64_t> e_theta_p_expansion(const SkewShape& shape, const Partition& theta) {
  if (!is_border_strip(shape)) throw Error("e_theta_border_formula: " + shape.to_string() + " is not a border strip");
  if (theta.size() != shape.size())
    throw Error("e_theta: " + theta.to_string() + " is not a partition of |" + shape.to_string() + "|");
  Composition gamma = row_lengths(shape);
  std::map<Composition, std::int64_t> out;
  for (const Composition& alpha : compositions_of(shape.rows())) {
    std::int64_t k = kostka(theta, meld(gamma, alpha).parts());
    if (k != 0) out.emplace(alpha, k);
  }
  return out;
}

SparsePolynomial e_theta_border_formula(const SkewShape& shape, const Partition& theta, int y_vars) {
  SparsePolynomial out(y_vars);
  for (const auto& [alpha, k] : e_theta_p_expansion(shape, theta)) {
    std::vector<int> parts = alpha.parts();
    out += p_poly(sorted_partition(parts), y_vars) * mpz_class(static_cast<long>(k));
  }
  return out;
}

bool refinement_kostka_check(const Partition& theta, const Composition& gamma, const Composition& alpha,
                             const Composition& beta) {
  if (!refines(beta, alpha)) throw Error("refinement_kostka_check: " + beta.to_string() + " does not refine " + alpha.to_string());
  if (gamma.size() != theta.size())
    throw Error("refinement_kostka_check: " + gamma.to_string() + " and " + theta.to_string() + " differ in size");
  if (kostka(theta, meld(gamma, alpha).parts()) == 0) return true;
  return kostka(theta, meld(gamma, beta).parts()) != 0;
}

}  // namespace immsnp
