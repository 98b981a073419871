#include "immsnp/immanant.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>
#include <numeric>

#include "immsnp/characters.hpp"
#include "immsnp/symmetric.hpp"

namespace immsnp {

PolynomialMatrix::PolynomialMatrix(int order, int nvars)
    : order_(order), nvars_(nvars),
      entries_(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), SparsePolynomial(nvars)) {}

PolynomialMatrix::PolynomialMatrix(int order, int nvars, std::vector<SparsePolynomial> row_major)
    : order_(order), nvars_(nvars), entries_(std::move(row_major)) {
  if (entries_.size() != static_cast<std::size_t>(order) * static_cast<std::size_t>(order))
    throw Error("matrix entries do not form a square of order " + std::to_string(order));
  for (const auto& e : entries_)
    if (e.nvars() != nvars) throw Error("matrix entries must share the number of variables");
}

void PolynomialMatrix::set(int i, int j, SparsePolynomial p) {
  if (p.nvars() != nvars_) throw Error("matrix entries must share the number of variables");
  entries_.at(idx(i, j)) = std::move(p);
}

PolynomialMatrix jt_matrix(const SkewShape& shape, int nvars) {
  int n = shape.rows();
  PolynomialMatrix m(n, nvars);
  const Partition& lam = shape.outer();
  const Partition& mu = shape.inner();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set(i, j, h_poly((lam[i] - (i + 1)) - (mu[j] - (j + 1)), nvars));
  return m;
}

PolynomialMatrix giambelli_matrix(const Partition& lambda, int nvars) {
  FrobeniusCoordinates f = frobenius(lambda);
  int k = f.rank();
  PolynomialMatrix m(k, nvars);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      std::vector<int> hook(static_cast<std::size_t>(f.legs[j] + 1), 1);
      hook[0] = f.arms[i] + 1;
      m.set(i, j, schur_poly(Partition(std::move(hook)), nvars));
    }
  return m;
}

namespace {

using ClassAccumulators = std::map<Partition, PolynomialAccumulator>;

void accumulate(ClassAccumulators& acc, const Partition& type, const SparsePolynomial& p, int nvars) {
  auto it = acc.find(type);
  if (it == acc.end()) it = acc.emplace(type, PolynomialAccumulator(nvars)).first;
  it->second.add(p);
}

ClassSums finish(ClassAccumulators&& acc) {
  ClassSums out;
  for (auto& [type, a] : acc) {
    SparsePolynomial p = std::move(a).finish();
    if (!p.is_zero()) out.emplace(type, std::move(p));
  }
  return out;
}

// Depth-first search below a fixed prefix of rows.
void search(const PolynomialMatrix& a, int row, std::vector<int>& images, std::vector<char>& used,
            const SparsePolynomial& prefix, ClassAccumulators& acc) {
  int n = a.order();
  if (row == n) {
    accumulate(acc, cycle_type(Permutation(images)), prefix, a.nvars());
    return;
  }
  for (int j = 0; j < n; ++j) {
    if (used[j] || a.at(row, j).is_zero()) continue;
    used[j] = 1;
    images[row] = j;
    search(a, row + 1, images, used, prefix * a.at(row, j), acc);
    used[j] = 0;
  }
}

}  // namespace

ClassSums class_sums(const PolynomialMatrix& a) {
  const int n = a.order();
  const int nvars = a.nvars();
  if (n == 0) {
    ClassSums out;
    out.emplace(Partition{}, SparsePolynomial::constant(nvars, 1));
    return out;
  }
  if (n > 12) throw ResourceBoundError("immanant matrix order", 12);

  // Top-level tasks are the admissible (row 0, row 1) column pairs.
  std::vector<std::pair<int, int>> tasks;
  for (int j0 = 0; j0 < n; ++j0) {
    if (a.at(0, j0).is_zero()) continue;
    if (n == 1) {
      tasks.emplace_back(j0, -1);
      continue;
    }
    for (int j1 = 0; j1 < n; ++j1)
      if (j1 != j0 && !a.at(1, j1).is_zero()) tasks.emplace_back(j0, j1);
  }

  std::vector<ClassAccumulators> partial(tasks.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    auto [j0, j1] = tasks[t];
    std::vector<int> images(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    images[0] = j0;
    used[j0] = 1;
    SparsePolynomial prefix = a.at(0, j0);
    int row = 1;
    if (j1 >= 0) {
      images[1] = j1;
      used[j1] = 1;
      prefix = prefix * a.at(1, j1);
      row = 2;
    }
    search(a, row, images, used, prefix, partial[t]);
  }

  // Reduce in task order.
  ClassAccumulators merged;
  for (auto& part : partial)
    for (auto& [type, acc] : part) accumulate(merged, type, std::move(acc).finish(), nvars);
  return finish(std::move(merged));
}

ClassSums class_sums_reference(const PolynomialMatrix& a) {
  const int n = a.order();
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  ClassAccumulators acc;
  do {
    SparsePolynomial prod = SparsePolynomial::constant(a.nvars(), 1);
    for (int i = 0; i < n; ++i) prod = prod * a.at(i, images[i]);
    accumulate(acc, cycle_type(Permutation(images)), prod, a.nvars());
  } while (std::next_permutation(images.begin(), images.end()));
  return finish(std::move(acc));
}

SparsePolynomial immanant_from_class_sums(const ClassSums& sums, const Partition& nu, int nvars) {
  PolynomialAccumulator acc(nvars);
  if (nu.size() == 0) {
    for (const auto& [type, p] : sums) acc.add(p);
    return std::move(acc).finish();
  }
  auto table = CharacterTable::get(nu.size());
  for (const auto& [type, p] : sums) {
    if (type.size() != nu.size())
      throw Error("immanant: partition " + nu.to_string() + " does not match matrix order");
    std::int64_t chi = (*table)(nu, type);
    if (chi != 0) acc.add(p, mpz_class(static_cast<long>(chi)));
  }
  return std::move(acc).finish();
}

SparsePolynomial immanant(const PolynomialMatrix& a, const Partition& nu) {
  if (nu.size() != a.order())
    throw Error("immanant: |nu| = " + std::to_string(nu.size()) + " but matrix order is " +
                std::to_string(a.order()));
  return immanant_from_class_sums(class_sums(a), nu, a.nvars());
}

SparsePolynomial immanant_reference(const PolynomialMatrix& a, const Partition& nu) {
  if (nu.size() != a.order())
    throw Error("immanant: |nu| = " + std::to_string(nu.size()) + " but matrix order is " +
                std::to_string(a.order()));
  const int n = a.order();
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  PolynomialAccumulator acc(a.nvars());
  do {
    std::int64_t chi = n == 0 ? 1 : mn_character(nu, cycle_type(Permutation(images)));
    if (chi == 0) continue;
    SparsePolynomial prod = SparsePolynomial::constant(a.nvars(), 1);
    for (int i = 0; i < n; ++i) prod = prod * a.at(i, images[i]);
    acc.add(prod, mpz_class(static_cast<long>(chi)));
  } while (std::next_permutation(images.begin(), images.end()));
  return std::move(acc).finish();
}

std::map<Partition, SparsePolynomial> all_immanants(const PolynomialMatrix& a) {
  ClassSums sums = class_sums(a);
  std::map<Partition, SparsePolynomial> out;
  for (const Partition& nu : partitions_of(a.order()))
    out.emplace(nu, immanant_from_class_sums(sums, nu, a.nvars()));
  return out;
}

}  // namespace immsnp
