#include "immsnp/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <unordered_map>

namespace immsnp {

SparsePolynomial h_poly(int k, int nvars) {
  SparsePolynomial out(nvars);
  if (k < 0) return out;
  std::vector<Term> terms;
  for (const ExponentVector& e : exponents_of_degree(k, nvars)) terms.push_back({e, 1});
  return SparsePolynomial::from_terms(nvars, std::move(terms));
}

SparsePolynomial m_poly(const Partition& lambda, int nvars) {
  SparsePolynomial out(nvars);
  if (lambda.length() > nvars) return out;
  std::vector<int> v = lambda.padded(nvars);
  std::sort(v.begin(), v.end());
  std::vector<Term> terms;
  do {
    terms.push_back({ExponentVector(std::span<const int>(v)), 1});
  } while (std::next_permutation(v.begin(), v.end()));
  return SparsePolynomial::from_terms(nvars, std::move(terms));
}

SparsePolynomial p_poly(const Partition& lambda, int nvars) {
  SparsePolynomial out = SparsePolynomial::constant(nvars, 1);
  for (int k : lambda.parts()) out = out * m_poly(Partition{k}, nvars);
  return out;
}

SparsePolynomial ssyt_schur(const SkewShape& shape, int nvars) {
  std::vector<Cell> cells = shape.cells();
  const std::size_t m = cells.size();
  if (m == 0) return SparsePolynomial::constant(nvars, 1);

  // Neighbour indices (or -1) and the number of shape cells below each cell in
  // its column, which bounds the largest admissible entry.
  std::vector<int> left(m, -1), above(m, -1), below(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (cells[j].row == cells[i].row && cells[j].col == cells[i].col - 1) left[i] = static_cast<int>(j);
      if (cells[j].row == cells[i].row - 1 && cells[j].col == cells[i].col) above[i] = static_cast<int>(j);
    }
    for (std::size_t j = i + 1; j < m; ++j)
      if (cells[j].col == cells[i].col) ++below[i];
  }

  std::vector<int> value(m, 0);
  std::vector<int> counts(static_cast<std::size_t>(nvars), 0);
  std::unordered_map<ExponentVector, std::int64_t, ExponentHash> acc;

  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == m) {
      ++acc[ExponentVector(std::span<const int>(counts))];
      return;
    }
    int lo = 1;
    if (left[i] >= 0) lo = std::max(lo, value[left[i]]);
    if (above[i] >= 0) lo = std::max(lo, value[above[i]] + 1);
    int hi = nvars - below[i];
    for (int v = lo; v <= hi; ++v) {
      value[i] = v;
      ++counts[v - 1];
      rec(i + 1);
      --counts[v - 1];
    }
  };
  rec(0);

  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [e, c] : acc) terms.push_back({e, mpz_class(static_cast<long>(c))});
  return SparsePolynomial::from_terms(nvars, std::move(terms));
}

std::int64_t kostka(const Partition& lambda, std::span<const int> content) {
  int total = 0;
  for (int c : content) {
    if (c < 0) throw Error("kostka: negative content entry");
    total += c;
  }
  if (total != lambda.size())
    throw Error("kostka: size mismatch between shape " + lambda.to_string() + " and content");

  std::vector<Cell> cells = SkewShape(lambda).cells();
  const std::size_t m = cells.size();
  if (m == 0) return 1;
  int nvals = static_cast<int>(content.size());
  std::vector<int> remaining(content.begin(), content.end());
  std::vector<int> value(m, 0);

  // In a straight shape, cell (r,c) is at row-major index; its left neighbour is
  // i-1 when c > 1 and the cell above is lambda_{r-1} positions back.
  std::vector<int> left(m, -1), above(m, -1);
  {
    std::vector<int> row_start(static_cast<std::size_t>(lambda.length()), 0);
    int pos = 0;
    for (int r = 0; r < lambda.length(); ++r) {
      row_start[r] = pos;
      pos += lambda[r];
    }
    for (std::size_t i = 0; i < m; ++i) {
      int r = cells[i].row - 1, c = cells[i].col - 1;
      if (c > 0) left[i] = static_cast<int>(i) - 1;
      if (r > 0) above[i] = row_start[r - 1] + c;
    }
  }

  std::int64_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == m) {
      ++count;
      return;
    }
    int lo = 1;
    if (left[i] >= 0) lo = std::max(lo, value[left[i]]);
    if (above[i] >= 0) lo = std::max(lo, value[above[i]] + 1);
    for (int v = lo; v <= nvals; ++v) {
      if (remaining[v - 1] == 0) continue;
      value[i] = v;
      --remaining[v - 1];
      rec(i + 1);
      ++remaining[v - 1];
    }
  };
  rec(0);
  return count;
}

namespace {

mpz_class orbit_size(const std::vector<int>& padded) {
  std::map<int, int> mult;
  for (int v : padded) ++mult[v];
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), padded.size());
  for (auto [v, m] : mult) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
    out /= f;
  }
  return out;
}

// Returns the m-expansion or a description of the first violating orbit.
std::optional<std::string> try_m_expand(const SparsePolynomial& f, CoefficientMap& out) {
  std::map<Partition, std::pair<mpz_class, long>> orbits;
  for (const Term& t : f.terms()) {
    std::vector<int> v = t.exponent.to_vector();
    Partition mu = sorted_partition(v);
    auto [it, inserted] = orbits.try_emplace(mu, t.coeff, 0);
    if (!inserted && it->second.first != t.coeff)
      return "orbit of " + mu.to_string() + " has unequal coefficients " +
             it->second.first.get_str() + " and " + t.coeff.get_str() + " (at " +
             t.exponent.to_string() + ")";
    ++it->second.second;
  }
  for (auto& [mu, cc] : orbits) {
    mpz_class expected = orbit_size(mu.padded(f.nvars()));
    if (expected != cc.second)
      return "orbit of " + mu.to_string() + " is incomplete: " + std::to_string(cc.second) +
             " of " + expected.get_str() + " exponents present";
    out.emplace(mu, cc.first);
  }
  return std::nullopt;
}

}  // namespace

bool is_symmetric(const SparsePolynomial& f) {
  CoefficientMap scratch;
  return !try_m_expand(f, scratch).has_value();
}

CoefficientMap m_expand(const SparsePolynomial& f) {
  CoefficientMap out;
  if (auto err = try_m_expand(f, out)) throw Error("m_expand: polynomial is not symmetric: " + *err);
  return out;
}

SparsePolynomial from_m_expansion(const CoefficientMap& coeffs, int nvars) {
  PolynomialAccumulator acc(nvars);
  for (const auto& [mu, c] : coeffs) acc.add(m_poly(mu, nvars), c);
  return std::move(acc).finish();
}

CoefficientMap schur_expand(const SparsePolynomial& f) {
  CoefficientMap out;
  if (f.is_zero()) return out;
  if (!f.is_homogeneous()) throw Error("schur_expand: polynomial is not homogeneous");
  int d = f.max_degree();
  if (f.nvars() < d)
    throw Error("schur_expand: insufficient variables for faithful expansion (nvars " +
                std::to_string(f.nvars()) + " < degree " + std::to_string(d) + ")");
  CoefficientMap c = m_expand(f);
  // Reverse lexicographic order is a linear extension of dominance (largest
  // first), so each leading coefficient is final when reached.
  std::vector<Partition> order = partitions_of(d);
  for (std::size_t a = 0; a < order.size(); ++a) {
    auto it = c.find(order[a]);
    if (it == c.end() || it->second == 0) continue;
    mpz_class lead = it->second;
    out.emplace(order[a], lead);
    for (std::size_t b = a; b < order.size(); ++b) {
      std::int64_t k = kostka(order[a], order[b]);
      if (k != 0) c[order[b]] -= lead * mpz_class(static_cast<long>(k));
    }
  }
  for (const auto& [mu, rest] : c)
    if (rest != 0) throw Error("schur_expand: nonzero remainder at " + mu.to_string());
  return out;
}

SparsePolynomial from_schur_expansion(const CoefficientMap& coeffs, int nvars) {
  PolynomialAccumulator acc(nvars);
  for (const auto& [lambda, c] : coeffs) acc.add(schur_poly(lambda, nvars), c);
  return std::move(acc).finish();
}

}  // namespace immsnp
