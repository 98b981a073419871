#include "immsnp/characters.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include "immsnp/symmetric.hpp"

namespace immsnp {

namespace {

using Memo = std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t>;

// Border-strip removal on the beta-set of nu. Strips of length rho[pos] are
// removed from the shape; the memo is keyed on (remaining shape, pos).
std::int64_t mn_recurse(const std::vector<int>& shape, const std::vector<int>& rho,
                        std::size_t pos, Memo& memo) {
  if (pos == rho.size()) return shape.empty() ? 1 : 0;
  auto key = std::make_pair(shape, pos);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  int r = rho[pos];
  int len = static_cast<int>(shape.size());
  std::vector<int> beta(shape.size());
  for (int i = 0; i < len; ++i) beta[i] = shape[i] + (len - 1 - i);  // strictly decreasing

  std::int64_t total = 0;
  for (int i = 0; i < len; ++i) {
    int target = beta[i] - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int height = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++height;
    std::vector<int> nb(beta);
    nb[i] = target;
    std::sort(nb.begin(), nb.end(), std::greater<>());
    std::vector<int> next;
    for (int j = 0; j < len; ++j) {
      int part = nb[j] - (len - 1 - j);
      if (part > 0) next.push_back(part);
    }
    std::int64_t sub = mn_recurse(next, rho, pos + 1, memo);
    total += (height % 2 ? -sub : sub);
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

std::int64_t mn_character(const Partition& nu, const Partition& rho) {
  if (nu.size() != rho.size())
    throw Error("mn_character: size mismatch " + nu.to_string() + " vs " + rho.to_string());
  Memo memo;
  return mn_recurse(nu.parts(), rho.parts(), 0, memo);
}

std::int64_t standard_character(const Permutation& pi) { return pi.fixed_points() - 1; }

std::int64_t class_size(const Partition& rho) {
  std::int64_t z = 1;
  std::map<int, int> mult;
  for (int p : rho.parts()) ++mult[p];
  for (auto [part, m] : mult) {
    for (int t = 0; t < m; ++t) z *= part;
    z *= factorial(m);
  }
  return factorial(rho.size()) / z;
}

CharacterTable::CharacterTable(int n) : n_(n), parts_(partitions_of(n)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) index_.emplace(parts_[i], i);
  values_.resize(parts_.size() * parts_.size());
  // The memo is only valid for one cycle type, so it is shared down a column.
  for (std::size_t b = 0; b < parts_.size(); ++b) {
    Memo memo;
    for (std::size_t a = 0; a < parts_.size(); ++a)
      values_[a * parts_.size() + b] = mn_recurse(parts_[a].parts(), parts_[b].parts(), 0, memo);
  }
}

std::shared_ptr<const CharacterTable> CharacterTable::get(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CharacterTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const CharacterTable>(n);
  return slot;
}

std::int64_t CharacterTable::operator()(const Partition& nu, const Partition& rho) const {
  auto a = index_.find(nu);
  auto b = index_.find(rho);
  if (a == index_.end() || b == index_.end())
    throw Error("character table of S_" + std::to_string(n_) + " has no entry for " +
                nu.to_string() + ", " + rho.to_string());
  return values_[a->second * parts_.size() + b->second];
}

std::int64_t CharacterTable::dimension(const Partition& nu) const {
  return (*this)(nu, Partition(std::vector<int>(static_cast<std::size_t>(n_), 1)));
}

std::int64_t young_subgroup_character_sum_direct(const Partition& nu, const Partition& mu) {
  if (nu.size() != mu.size())
    throw Error("young_subgroup_character_sum: size mismatch " + nu.to_string() + " vs " +
                mu.to_string());
  int n = nu.size();
  if (n > kDirectEnumerationBound)
    throw ResourceBoundError("direct Young subgroup enumeration degree", kDirectEnumerationBound);
  auto table = CharacterTable::get(n);

  // Enumerate S_mu as the product of the symmetric groups on consecutive blocks.
  std::vector<int> images(static_cast<std::size_t>(n));
  std::vector<std::pair<int, int>> blocks;
  int start = 0;
  for (int p : mu.parts()) {
    blocks.emplace_back(start, start + p);
    start += p;
  }
  for (int i = 0; i < n; ++i) images[i] = i;

  std::int64_t total = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t b) {
    if (b == blocks.size()) {
      total += (*table)(nu, cycle_type(Permutation(images)));
      return;
    }
    auto [lo, hi] = blocks[b];
    std::sort(images.begin() + lo, images.begin() + hi);
    do {
      rec(b + 1);
    } while (std::next_permutation(images.begin() + lo, images.begin() + hi));
  };
  rec(0);
  return total;
}

std::int64_t young_subgroup_character_sum_kostka(const Partition& nu, const Partition& mu) {
  if (nu.size() != mu.size())
    throw Error("young_subgroup_character_sum: size mismatch " + nu.to_string() + " vs " +
                mu.to_string());
  return young_subgroup_order(mu) * kostka(nu, mu.parts());
}

std::int64_t young_subgroup_character_sum(const Partition& nu, const Partition& mu) {
  std::int64_t closed = young_subgroup_character_sum_kostka(nu, mu);
  if (nu.size() <= kDirectEnumerationBound) {
    std::int64_t direct = young_subgroup_character_sum_direct(nu, mu);
    if (direct != closed)
      throw Error("Young subgroup character sum mismatch for " + nu.to_string() + ", " +
                  mu.to_string() + ": direct " + std::to_string(direct) + " vs Kostka " +
                  std::to_string(closed));
  }
  return closed;
}

std::vector<Permutation> adjacent_product_multiset(int n) {
  if (n < 2) throw Error("adjacent product multiset needs n >= 2");
  if (n > 20) throw ResourceBoundError("adjacent product degree", 20);
  std::vector<Permutation> out;
  out.reserve(std::size_t{1} << (n - 1));
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    Permutation p = Permutation::identity(n);
    for (int i = 0; i < n - 1; ++i)
      if (mask & (1u << i)) p = p * Permutation::transposition(n, i, i + 1);
    out.push_back(std::move(p));
  }
  return out;
}

std::int64_t adjacent_product_character_sum(const Partition& nu) {
  int n = nu.size();
  if (n < 2) throw Error("adjacent_product_character_sum needs n >= 2");
  auto table = CharacterTable::get(n);
  std::int64_t total = 0;
  for (const Permutation& p : adjacent_product_multiset(n)) total += (*table)(nu, cycle_type(p));
  return total;
}

std::map<int, std::int64_t> fixed_point_histogram(int n) {
  std::map<int, std::int64_t> hist;
  for (const Permutation& p : adjacent_product_multiset(n)) ++hist[p.fixed_points()];
  return hist;
}

}  // namespace immsnp
