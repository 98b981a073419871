#include "immsnp/newton.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_set>

#include "immsnp/exact_lp.hpp"

namespace immsnp {

std::string to_string(SnpMethod m) {
  return m == SnpMethod::FastPermutahedron ? "fast-permutahedron" : "general-hull";
}

Permutahedron::Permutahedron(Partition l, int n) : lambda(std::move(l)), nvars(n) {
  if (lambda.length() > nvars)
    throw Error("permutahedron: " + lambda.to_string() + " has more parts than " + std::to_string(nvars) +
                " variables");
}

std::vector<ExponentVector> support(const SparsePolynomial& f) {
  std::vector<ExponentVector> out;
  out.reserve(f.term_count());
  for (const Term& t : f.terms()) out.push_back(t.exponent);
  return out;
}

namespace {

std::vector<ExponentVector> sorted_points(std::vector<ExponentVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<ExponentVector> orbit(const Partition& lambda, int nvars) {
  std::vector<int> v = lambda.padded(nvars);
  std::sort(v.begin(), v.end());
  std::vector<ExponentVector> out;
  do {
    out.emplace_back(std::span<const int>(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace

std::vector<ExponentVector> permutahedron_lattice_points(const Permutahedron& p) {
  std::vector<ExponentVector> out;
  for (const ExponentVector& e : exponents_of_degree(p.lambda.size(), p.nvars)) {
    std::vector<int> v = e.to_vector();
    if (dominance_leq(sorted_partition(v), p.lambda)) out.push_back(e);
  }
  return sorted_points(std::move(out));
}

std::vector<ExponentVector> permutahedron_lattice_points_by_hull(const Permutahedron& p) {
  std::vector<ExponentVector> gens = orbit(p.lambda, p.nvars);
  std::vector<ExponentVector> out;
  for (const Partition& cand : enumerate_partitions(p.lambda.size(), p.nvars)) {
    std::vector<int> v = cand.padded(p.nvars);
    if (!point_in_hull(ExponentVector(std::span<const int>(v)), gens)) continue;
    std::vector<ExponentVector> orb = orbit(cand, p.nvars);
    out.insert(out.end(), orb.begin(), orb.end());
  }
  return sorted_points(std::move(out));
}

bool rado_containment(const Partition& mu, const Partition& lambda, int nvars) {
  if (mu.size() != lambda.size())
    throw Error("rado_containment: size mismatch " + mu.to_string() + " vs " + lambda.to_string());
  auto small = permutahedron_lattice_points_by_hull(Permutahedron(mu, nvars));
  auto big = permutahedron_lattice_points_by_hull(Permutahedron(lambda, nvars));
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool point_in_hull(const ExponentVector& p, const std::vector<ExponentVector>& generators) {
  if (generators.empty()) throw Error("point_in_hull: empty generator set");
  const int n = p.nvars();
  for (const auto& g : generators)
    if (g.nvars() != n) throw Error("point_in_hull: dimension mismatch");
  for (const auto& g : generators)
    if (g == p) return true;
  // Cheap exact rejection by the coordinate box.
  for (int i = 0; i < n; ++i) {
    int lo = generators[0][i], hi = lo;
    for (const auto& g : generators) {
      lo = std::min(lo, g[i]);
      hi = std::max(hi, g[i]);
    }
    if (p[i] < lo || p[i] > hi) return false;
  }
  std::vector<std::vector<mpq_class>> a(static_cast<std::size_t>(n + 1),
                                        std::vector<mpq_class>(generators.size()));
  std::vector<mpq_class> b(static_cast<std::size_t>(n + 1));
  for (std::size_t j = 0; j < generators.size(); ++j) {
    for (int i = 0; i < n; ++i) a[i][j] = generators[j][i];
    a[n][j] = 1;
  }
  for (int i = 0; i < n; ++i) b[i] = p[i];
  b[n] = 1;
  return exact_feasible(a, b);
}

std::vector<Partition> dominance_maximal(const std::vector<ExponentVector>& points) {
  std::set<Partition> sorted;
  for (const auto& e : points) {
    std::vector<int> v = e.to_vector();
    sorted.insert(sorted_partition(v));
  }
  std::vector<Partition> out;
  for (const Partition& a : sorted) {
    bool maximal = true;
    for (const Partition& b : sorted) {
      if (a == b || a.size() != b.size()) continue;
      if (dominance_leq(a, b)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(a);
  }
  // Largest first, matching the reverse lexicographic enumerators.
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

bool support_is_permutation_closed(const std::vector<ExponentVector>& points) {
  std::unordered_set<ExponentVector, ExponentHash> set(points.begin(), points.end());
  std::set<Partition> seen;
  for (const auto& e : points) {
    std::vector<int> v = e.to_vector();
    Partition mu = sorted_partition(v);
    if (!seen.insert(mu).second) continue;
    for (const auto& o : orbit(mu, e.nvars()))
      if (!set.count(o)) return false;
  }
  return true;
}

namespace {

void box_points(const std::vector<int>& lo, const std::vector<int>& hi, int target_sum,
                std::vector<ExponentVector>& out) {
  const int n = static_cast<int>(lo.size());
  std::vector<int> cur(lo);
  std::function<void(int, int)> rec = [&](int i, int sum) {
    if (i == n) {
      if (target_sum < 0 || sum == target_sum) out.emplace_back(std::span<const int>(cur));
      return;
    }
    for (int v = lo[i]; v <= hi[i]; ++v) {
      if (target_sum >= 0 && sum + v > target_sum) break;
      cur[i] = v;
      rec(i + 1, sum + v);
    }
  };
  rec(0, 0);
}

}  // namespace

SnpReport snp_check(const SparsePolynomial& f, const SnpOptions& options) {
  if (f.is_zero()) throw Error("snp_check: the zero polynomial has no Newton polytope");
  SnpReport r;
  r.nvars = f.nvars();
  r.homogeneous = f.is_homogeneous();
  r.degree = f.max_degree();
  std::vector<ExponentVector> supp = sorted_points(support(f));
  r.support_size = supp.size();
  r.dominance_max = dominance_maximal(supp);
  r.is_m_convex = m_convex_check(supp);

  bool fast = options.path == SnpPath::Auto && r.homogeneous && r.dominance_max.size() == 1 &&
              support_is_permutation_closed(supp);
  std::vector<ExponentVector> missing;
  if (fast) {
    r.method = SnpMethod::FastPermutahedron;
    auto lattice = permutahedron_lattice_points(Permutahedron(r.dominance_max.front(), r.nvars));
    r.lattice_point_count = lattice.size();
    std::set_difference(lattice.begin(), lattice.end(), supp.begin(), supp.end(), std::back_inserter(missing));
  } else {
    r.method = SnpMethod::GeneralHull;
    std::vector<int> lo(static_cast<std::size_t>(r.nvars)), hi(static_cast<std::size_t>(r.nvars));
    for (int i = 0; i < r.nvars; ++i) {
      lo[i] = hi[i] = supp.front()[i];
      for (const auto& e : supp) {
        lo[i] = std::min(lo[i], e[i]);
        hi[i] = std::max(hi[i], e[i]);
      }
    }
    std::vector<ExponentVector> box;
    box_points(lo, hi, r.homogeneous ? r.degree : -1, box);
    std::vector<ExponentVector> candidates;
    std::set_difference(box.begin(), box.end(), supp.begin(), supp.end(), std::back_inserter(candidates));
    // box_points emits in lexicographic order, which is the ExponentVector order.
    std::vector<char> inside(candidates.size(), 0);
#pragma omp parallel for schedule(dynamic) if (options.parallel)
    for (std::size_t i = 0; i < candidates.size(); ++i) inside[i] = point_in_hull(candidates[i], supp) ? 1 : 0;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (inside[i]) missing.push_back(candidates[i]);
    r.lattice_point_count = supp.size() + missing.size();
  }
  r.missing_points = std::move(missing);
  r.is_snp = r.missing_points.empty();
  return r;
}

bool m_convex_check(const std::vector<ExponentVector>& points) {
  if (points.empty()) return true;
  const int d = points.front().degree();
  for (const auto& e : points)
    if (e.degree() != d) return false;
  std::unordered_set<ExponentVector, ExponentHash> set(points.begin(), points.end());
  const int n = points.front().nvars();
  for (const auto& a : points) {
    for (const auto& b : points) {
      for (int i = 0; i < n; ++i) {
        if (a[i] <= b[i]) continue;
        bool found = false;
        for (int j = 0; j < n && !found; ++j) {
          if (a[j] >= b[j]) continue;
          ExponentVector c(a);
          c.set(i, a[i] - 1);
          c.set(j, a[j] + 1);
          found = set.count(c) > 0;
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

}  // namespace immsnp
