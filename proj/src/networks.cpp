#include "immsnp/networks.hpp"

#include <algorithm>
#include <functional>

#include "immsnp/characters.hpp"
#include "immsnp/immanant.hpp"
#include "immsnp/newton.hpp"

namespace immsnp {

std::string to_string(NetworkKind k) { return k == NetworkKind::GreeneJT ? "jt" : "giambelli"; }

LineRule PlanarNetwork::rule(int x) const {
  if (kind_ == NetworkKind::GreeneJT) return LineRule::NonDecreasing;
  return x <= 0 ? LineRule::NonIncreasing : LineRule::NonDecreasing;
}

int PlanarNetwork::weight_index(int c, int level) const {
  if (level < 1 || level > levels_) return 0;
  int idx = level;
  if (kind_ == NetworkKind::Giambelli) idx = c <= 0 ? level + c1_ - c : level + c1_;
  return idx >= 1 && idx <= nvars_ ? idx : 0;
}

PlanarNetwork greene_network(const SkewShape& shape, int nvars) {
  if (nvars < 1) throw Error("greene_network: need at least one variable");
  PlanarNetwork net;
  net.kind_ = NetworkKind::GreeneJT;
  net.nvars_ = nvars;
  net.levels_ = nvars;
  for (int i = 0; i < shape.rows(); ++i) {
    net.starts_.push_back(shape.inner()[static_cast<std::size_t>(i)] - (i + 1));
    net.ends_.push_back(shape.outer()[static_cast<std::size_t>(i)] - (i + 1));
  }
  if (!net.starts_.empty()) {
    net.min_x_ = std::min(*std::min_element(net.starts_.begin(), net.starts_.end()),
                          *std::min_element(net.ends_.begin(), net.ends_.end()));
    net.max_x_ = std::max(*std::max_element(net.starts_.begin(), net.starts_.end()),
                          *std::max_element(net.ends_.begin(), net.ends_.end()));
  }
  return net;
}

PlanarNetwork giambelli_network(const Partition& lambda, int nvars) {
  if (lambda.empty()) throw Error("giambelli_network: empty partition");
  if (nvars < 1) throw Error("giambelli_network: need at least one variable");
  Partition conj = conjugate(lambda);
  PlanarNetwork net;
  net.kind_ = NetworkKind::Giambelli;
  net.nvars_ = nvars;
  net.c1_ = 1 - conj[0];
  net.levels_ = nvars - net.c1_;
  net.min_x_ = net.c1_;
  net.max_x_ = lambda[0];
  for (int i = 1; i <= rank(lambda); ++i) {
    net.starts_.push_back(i - conj[static_cast<std::size_t>(i - 1)]);
    net.ends_.push_back(lambda[static_cast<std::size_t>(i - 1)] - i + 1);
  }
  return net;
}

std::vector<LatticePath> enumerate_paths(const PlanarNetwork& net, int from, int to) {
  std::vector<LatticePath> out;
  if (from > to) return out;
  LatticePath cur{from, {}};
  std::function<void(int)> rec = [&](int c) {
    if (c == to) {
      out.push_back(cur);
      return;
    }
    int lo = 1, hi = net.levels();
    if (c > from) {
      int prev = cur.levels.back();
      if (net.rule(c) == LineRule::NonDecreasing)
        lo = prev;
      else
        hi = prev;
    }
    for (int level = lo; level <= hi; ++level) {
      if (net.weight_index(c, level) == 0) continue;
      cur.levels.push_back(level);
      rec(c + 1);
      cur.levels.pop_back();
    }
  };
  rec(from);
  return out;
}

namespace {

ExponentVector path_weight(const PlanarNetwork& net, const LatticePath& p) {
  ExponentVector e(net.nvars());
  for (std::size_t k = 0; k < p.levels.size(); ++k)
    e.increment(net.weight_index(p.start_x + static_cast<int>(k), p.levels[k]) - 1);
  return e;
}

}  // namespace

SparsePolynomial path_generating_function(const PlanarNetwork& net, int from, int to) {
  PolynomialAccumulator acc(net.nvars());
  for (const LatticePath& p : enumerate_paths(net, from, to)) acc.add(path_weight(net, p), 1);
  return std::move(acc).finish();
}

std::vector<PathFamily> enumerate_path_families(const PlanarNetwork& net, const EnumerationLimits& limits) {
  const int k = net.terminal_count();
  // Degree of the family for pi is sum_i (Q_i - P_{pi(i)}), which does not depend on pi.
  int degree = 0;
  for (int i = 0; i < k; ++i) degree += net.ends()[static_cast<std::size_t>(i)] - net.starts()[static_cast<std::size_t>(i)];
  if (degree > limits.max_total_degree) throw ResourceBoundError("path family degree", limits.max_total_degree);

  std::vector<std::vector<std::vector<LatticePath>>> paths(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < k; ++i)
      paths[static_cast<std::size_t>(j)].push_back(
          enumerate_paths(net, net.starts()[static_cast<std::size_t>(j)], net.ends()[static_cast<std::size_t>(i)]));

  std::vector<PathFamily> out;
  std::vector<int> images(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) images[static_cast<std::size_t>(i)] = i;
  std::int64_t total = 0;
  do {
    std::int64_t count = 1;
    for (int i = 0; i < k && count > 0; ++i) {
      count *= static_cast<std::int64_t>(paths[static_cast<std::size_t>(images[i])][static_cast<std::size_t>(i)].size());
      if (count > limits.max_families) throw ResourceBoundError("path family count", limits.max_families);
    }
    total += count;
    if (total > limits.max_families) throw ResourceBoundError("path family count", limits.max_families);
    if (count == 0) continue;

    Permutation pi(images);
    std::vector<std::size_t> choice(static_cast<std::size_t>(k), 0);
    for (;;) {
      PathFamily f{pi, {}, ExponentVector(net.nvars()), {}};
      std::map<std::pair<int, int>, int> steps;
      for (int i = 0; i < k; ++i) {
        const LatticePath& p = paths[static_cast<std::size_t>(images[i])][static_cast<std::size_t>(i)][choice[static_cast<std::size_t>(i)]];
        f.paths.push_back(p);
        f.weight = f.weight + path_weight(net, p);
        for (std::size_t s = 0; s < p.levels.size(); ++s) ++steps[{p.start_x + static_cast<int>(s), p.levels[s]}];
      }
      for (const auto& [key, n] : steps) f.skeleton.push_back({key.first, key.second, n});
      out.push_back(std::move(f));
      int i = k - 1;
      for (; i >= 0; --i) {
        std::size_t limit = paths[static_cast<std::size_t>(images[i])][static_cast<std::size_t>(i)].size();
        if (++choice[static_cast<std::size_t>(i)] < limit) break;
        choice[static_cast<std::size_t>(i)] = 0;
      }
      if (i < 0) break;
    }
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

SparsePolynomial family_sum(const std::vector<PathFamily>& families, const Partition& nu, int nvars) {
  PolynomialAccumulator acc(nvars);
  if (families.empty()) return std::move(acc).finish();
  if (families.front().pi.degree() != nu.size())
    throw Error("family_sum: " + nu.to_string() + " does not match the number of paths");
  auto table = nu.size() > 0 ? CharacterTable::get(nu.size()) : nullptr;
  for (const PathFamily& f : families) {
    std::int64_t chi = table ? (*table)(nu, cycle_type(f.pi)) : 1;
    if (chi != 0) acc.add(f.weight, mpz_class(static_cast<long>(chi)));
  }
  return std::move(acc).finish();
}

std::vector<Permutation> interval_product_multiset(int n, const std::vector<Interval>& intervals) {
  std::vector<Permutation> cur{Permutation::identity(n)};
  for (const Interval& iv : intervals) {
    if (iv.first < 0 || iv.last >= n || iv.first > iv.last) throw Error("interval out of range");
    std::vector<int> block;
    for (int x = iv.first; x <= iv.last; ++x) block.push_back(x);
    std::vector<Permutation> group;
    std::vector<int> arr = block;
    do {
      std::vector<int> images(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x) images[static_cast<std::size_t>(x)] = x;
      for (std::size_t t = 0; t < block.size(); ++t) images[static_cast<std::size_t>(block[t])] = arr[t];
      group.emplace_back(std::move(images));
    } while (std::next_permutation(arr.begin(), arr.end()));
    std::vector<Permutation> next;
    next.reserve(cur.size() * group.size());
    for (const Permutation& a : cur)
      for (const Permutation& s : group) next.push_back(a * s);
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end());
  return cur;
}

SkeletonReport skeleton_groups(const std::vector<PathFamily>& families, int max_intervals) {
  std::map<Skeleton, std::vector<Permutation>> grouped;
  for (const PathFamily& f : families) grouped[f.skeleton].push_back(f.pi);

  SkeletonReport report;
  for (auto& [skel, perms] : grouped) {
    SkeletonGroup g{skel, std::move(perms), false, {}};
    std::sort(g.permutations.begin(), g.permutations.end());
    const int n = g.permutations.front().degree();
    const std::int64_t target = static_cast<std::int64_t>(g.permutations.size());
    std::vector<Interval> all;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) all.push_back({a, b});

    std::vector<Interval> seq;
    std::function<bool(std::int64_t)> search = [&](std::int64_t order) {
      if (order == target) {
        if (interval_product_multiset(n, seq) == g.permutations) {
          g.intervals = seq;
          return true;
        }
        return false;
      }
      if (static_cast<int>(seq.size()) >= max_intervals) return false;
      for (const Interval& iv : all) {
        std::int64_t f = factorial(iv.last - iv.first + 1);
        if (target % (order * f) != 0) continue;
        seq.push_back(iv);
        if (search(order * f)) return true;
        seq.pop_back();
      }
      return false;
    };
    g.verified = search(1);
    if (!g.verified) ++report.failures;
    report.groups.push_back(std::move(g));
  }
  return report;
}

LeadingTerm leading_coefficient(const Partition& lambda, const Partition& nu, int nvars) {
  if (nvars == 0) nvars = lambda.size();
  if (nu.size() != rank(lambda))
    throw Error("leading_coefficient: " + nu.to_string() + " is not a partition of the rank of " + lambda.to_string());
  SparsePolynomial imm = immanant(giambelli_matrix(lambda, nvars), nu);
  if (imm.is_zero()) throw Error("leading_coefficient: immanant vanishes for " + lambda.to_string());
  std::vector<Partition> top = dominance_maximal(support(imm));
  if (top.size() != 1) {
    std::string list;
    for (const Partition& p : top) list += p.to_string();
    throw Error("leading_coefficient: several dominance-maximal exponents " + list);
  }
  if (top.front().length() > nvars) throw Error("leading_coefficient: exponent longer than the variable count");
  std::vector<int> e = top.front().padded(nvars);
  ExponentVector ev{std::span<const int>(e)};
  return {ev, imm.coefficient(ev)};
}

}  // namespace immsnp
