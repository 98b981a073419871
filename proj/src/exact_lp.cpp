#include "immsnp/exact_lp.hpp"

#include "immsnp/error.hpp"

namespace immsnp {

bool exact_feasible(const std::vector<std::vector<mpq_class>>& a, const std::vector<mpq_class>& b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw Error("exact_feasible: row count mismatch");
  if (m == 0) return true;
  const std::size_t k = a[0].size();
  for (const auto& row : a)
    if (row.size() != k) throw Error("exact_feasible: ragged matrix");

  // Columns: k structural, m artificial, then the right-hand side.
  const std::size_t cols = k + m;
  std::vector<std::vector<mpq_class>> t(m, std::vector<mpq_class>(cols + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    bool flip = b[i] < 0;
    for (std::size_t j = 0; j < k; ++j) t[i][j] = flip ? mpq_class(-a[i][j]) : a[i][j];
    t[i][k + i] = 1;
    t[i][cols] = flip ? mpq_class(-b[i]) : b[i];
    basis[i] = k + i;
  }
  // Reduced costs of the phase-one objective (sum of artificials).
  std::vector<mpq_class> obj(cols + 1);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < m; ++i) obj[j] -= t[i][j];
  for (std::size_t i = 0; i < m; ++i) obj[cols] -= t[i][cols];

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;

    std::size_t leave = m;
    mpq_class best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      mpq_class ratio = t[i][cols] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    // Phase one is bounded below by zero, so an entering column always has a
    // positive pivot.
    if (leave == m) throw Error("exact_feasible: unbounded phase-one problem");

    mpq_class piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      mpq_class f = t[i][enter];
      for (std::size_t j = 0; j <= cols; ++j)
        if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
    }
    if (obj[enter] != 0) {
      mpq_class f = obj[enter];
      for (std::size_t j = 0; j <= cols; ++j)
        if (t[leave][j] != 0) obj[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  return obj[cols] == 0;
}

}  // namespace immsnp
