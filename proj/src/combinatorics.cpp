#include "immsnp/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace immsnp {

namespace {

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw Error("partition parts must be positive: " + join(parts_));
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw Error("partition parts must be weakly decreasing: " + join(parts_));
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::padded(int len) const {
  if (len < length()) throw Error("cannot pad " + to_string() + " to length " + std::to_string(len));
  std::vector<int> out(parts_);
  out.resize(static_cast<std::size_t>(len), 0);
  return out;
}

std::string Partition::to_string() const { return join(parts_); }

Partition sorted_partition(std::span<const int> values) {
  std::vector<int> v(values.begin(), values.end());
  std::sort(v.begin(), v.end(), std::greater<>());
  return Partition(std::move(v));
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size())
    throw Error("dominance_leq: size mismatch " + mu.to_string() + " vs " + lambda.to_string());
  int len = std::max(mu.length(), lambda.length());
  int a = 0, b = 0;
  for (int i = 0; i < len; ++i) {
    a += mu[i];
    b += lambda[i];
    if (a > b) return false;
  }
  return true;
}

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> out(static_cast<std::size_t>(lambda[0]), 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++out[j];
  return Partition(std::move(out));
}

std::int64_t factorial(int n) {
  if (n < 0) throw Error("factorial of negative number");
  if (n > 20) throw Error("factorial overflows 64 bits for n > 20");
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::int64_t young_subgroup_order(const Partition& lambda) {
  std::int64_t out = 1;
  for (int p : lambda.parts()) out *= factorial(p);
  return out;
}

int rank(const Partition& lambda) {
  int k = 0;
  while (k < lambda.length() && lambda[k] >= k + 1) ++k;
  return k;
}

FrobeniusCoordinates frobenius(const Partition& lambda) {
  if (lambda.empty()) throw Error("Frobenius coordinates of the empty partition are undefined");
  Partition conj = conjugate(lambda);
  FrobeniusCoordinates f;
  int k = rank(lambda);
  for (int i = 0; i < k; ++i) {
    f.arms.push_back(lambda[i] - (i + 1));
    f.legs.push_back(conj[i] - (i + 1));
  }
  return f;
}

Partition from_frobenius(const FrobeniusCoordinates& f) {
  if (f.arms.size() != f.legs.size()) throw Error("Frobenius arms/legs length mismatch");
  int k = f.rank();
  for (int i = 0; i < k; ++i) {
    if (f.arms[i] < 0 || f.legs[i] < 0) throw Error("Frobenius coordinates must be nonnegative");
    if (i > 0 && (f.arms[i] >= f.arms[i - 1] || f.legs[i] >= f.legs[i - 1]))
      throw Error("Frobenius coordinates must be strictly decreasing");
  }
  if (k == 0) return {};
  // Row i (0-based) of lambda: i < k gives arms[i] + i + 1; below the diagonal
  // block, row r has #{j : legs[j] + j >= r}.
  int rows = f.legs[0] + 1;
  std::vector<int> parts(static_cast<std::size_t>(rows), 0);
  for (int r = 0; r < rows; ++r) {
    if (r < k) {
      parts[r] = f.arms[r] + r + 1;
    } else {
      int cnt = 0;
      for (int j = 0; j < k; ++j)
        if (f.legs[j] + j >= r) ++cnt;
      parts[r] = cnt;
    }
  }
  return Partition(std::move(parts));
}

std::vector<Partition> enumerate_partitions(int d, int max_length) {
  std::vector<Partition> out;
  if (d < 0 || max_length < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_length) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(d, d);
  return out;
}

std::vector<Partition> partitions_of(int d) { return enumerate_partitions(d, d); }

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (inner_.length() > outer_.length())
    throw Error("skew shape inner partition longer than outer: " + to_string());
  for (int i = 0; i < outer_.length(); ++i)
    if (inner_[i] > outer_[i]) throw Error("skew shape inner not contained in outer: " + to_string());
}

bool SkewShape::contains(Cell c) const {
  if (c.row < 1 || c.row > rows()) return false;
  return c.col > inner_[c.row - 1] && c.col <= outer_[c.row - 1];
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  for (int i = 0; i < rows(); ++i)
    for (int j = inner_[i] + 1; j <= outer_[i]; ++j) out.push_back({i + 1, j});
  return out;
}

std::string SkewShape::to_string() const {
  if (inner_.empty()) return outer_.to_string();
  return outer_.to_string() + "/" + inner_.to_string();
}

bool is_border_strip(const SkewShape& shape) {
  int n = shape.rows();
  if (n == 0) return false;
  for (int i = 0; i < n; ++i)
    if (shape.row_length(i) <= 0) return false;
  for (int i = 0; i + 1 < n; ++i)
    if (shape.outer()[i + 1] != shape.inner()[i] + 1) return false;
  return true;
}

std::vector<SkewShape> enumerate_skew_shapes(int max_size, int max_rows) {
  std::vector<SkewShape> out;
  for (int d = 1; d <= max_size; ++d) {
    for (const Partition& outer : enumerate_partitions(d, max_rows)) {
      for (int e = 0; e < d; ++e) {
        for (const Partition& inner : enumerate_partitions(e, outer.length())) {
          bool inside = true;
          for (int i = 0; i < inner.length(); ++i)
            if (inner[i] > outer[i]) inside = false;
          if (inside) out.emplace_back(outer, inner);
        }
      }
    }
  }
  return out;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw Error("composition parts must be positive: " + join(parts_));
}

int Composition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Composition::to_string() const { return join(parts_); }

Composition meld(const Composition& base, const Composition& index) {
  if (index.size() != base.length())
    throw Error("meld: index " + index.to_string() + " does not sum to the length of " +
                base.to_string());
  std::vector<int> out;
  std::size_t pos = 0;
  for (int block : index.parts()) {
    int s = 0;
    for (int t = 0; t < block; ++t) s += base.parts()[pos++];
    out.push_back(s);
  }
  return Composition(std::move(out));
}

bool refines(const Composition& beta, const Composition& alpha) {
  if (beta.size() != alpha.size())
    throw Error("refines: sum mismatch " + beta.to_string() + " vs " + alpha.to_string());
  std::size_t pos = 0;
  for (int target : alpha.parts()) {
    int s = 0;
    while (s < target && pos < beta.parts().size()) s += beta.parts()[pos++];
    if (s != target) return false;
  }
  return pos == beta.parts().size();
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  if (n < 0) return out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = remaining; p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

std::vector<Composition> refinements_of(const Composition& alpha) {
  std::vector<std::vector<int>> acc{{}};
  for (int part : alpha.parts()) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : acc) {
      for (const Composition& c : compositions_of(part)) {
        auto v = prefix;
        v.insert(v.end(), c.parts().begin(), c.parts().end());
        next.push_back(std::move(v));
      }
    }
    acc = std::move(next);
  }
  std::vector<Composition> out;
  out.reserve(acc.size());
  for (auto& v : acc) out.emplace_back(std::move(v));
  return out;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= static_cast<int>(images_.size()) || seen[x])
      throw Error("not a permutation: " + join(images_));
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::from_one_based(std::span<const int> images) {
  std::vector<int> v;
  v.reserve(images.size());
  for (int x : images) v.push_back(x - 1);
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(int n, int i, int j) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  std::swap(v.at(i), v.at(j));
  return Permutation(std::move(v));
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> v(images_);
  for (int& x : v) ++x;
  return v;
}

int Permutation::fixed_points() const {
  int f = 0;
  for (int i = 0; i < degree(); ++i)
    if (images_[i] == i) ++f;
  return f;
}

int Permutation::sign() const {
  Partition ct = cycle_type(*this);
  int even_cycles = 0;
  for (int c : ct.parts())
    if (c % 2 == 0) ++even_cycles;
  return even_cycles % 2 ? -1 : 1;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(images_.size());
  for (int i = 0; i < degree(); ++i) v[images_[i]] = i;
  return Permutation(std::move(v));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw Error("permutation degree mismatch");
  std::vector<int> v(a.images_.size());
  for (int i = 0; i < a.degree(); ++i) v[i] = a.images_[b.images_[i]];
  return Permutation(std::move(v));
}

Partition cycle_type(const Permutation& pi) {
  int n = pi.degree();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> lengths;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = pi(j)) {
      seen[j] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  return sorted_partition(lengths);
}

SkewShape border_strip_from_rows(const Composition& rows) {
  const std::vector<int>& r = rows.parts();
  const std::size_t n = r.size();
  if (n == 0) throw Error("border strip needs at least one row");
  std::vector<int> outer(n), inner(n);
  inner[n - 1] = 0;
  outer[n - 1] = r[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) {
    inner[i] = outer[i + 1] - 1;
    outer[i] = inner[i] + r[i];
  }
  return SkewShape(Partition(outer), Partition(inner));
}

std::vector<SkewShape> enumerate_border_strips(int max_size, int max_rows) {
  std::vector<SkewShape> out;
  for (int d = 1; d <= max_size; ++d)
    for (const Composition& c : compositions_of(d))
      if (c.length() <= max_rows) out.push_back(border_strip_from_rows(c));
  return out;
}

}  // namespace immsnp
