#include "immsnp/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace immsnp {

ExponentVector::ExponentVector(int nvars) {
  if (nvars < 0 || nvars > kMaxVars)
    throw Error("number of variables must be in [0, " + std::to_string(kMaxVars) + "], got " +
                std::to_string(nvars));
  nvars_ = static_cast<std::uint8_t>(nvars);
}

ExponentVector::ExponentVector(std::span<const int> entries)
    : ExponentVector(static_cast<int>(entries.size())) {
  for (int i = 0; i < nvars_; ++i) set(i, entries[i]);
}

void ExponentVector::set(int i, int value) {
  if (i < 0 || i >= nvars_) throw Error("exponent index out of range");
  if (value < 0 || value > kMaxExponent)
    throw Error("exponent out of range [0, " + std::to_string(kMaxExponent) + "]: " +
                std::to_string(value));
  e_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(value);
}

int ExponentVector::degree() const {
  int d = 0;
  for (int i = 0; i < nvars_; ++i) d += e_[i];
  return d;
}

std::vector<int> ExponentVector::to_vector() const {
  return std::vector<int>(e_.begin(), e_.begin() + nvars_);
}

std::string ExponentVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < nvars_; ++i) os << (i ? "," : "") << int(e_[i]);
  os << ')';
  return os.str();
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  if (a.nvars_ != b.nvars_) throw Error("exponent vector length mismatch");
  ExponentVector out(a.nvars_);
  for (int i = 0; i < a.nvars_; ++i) {
    int s = a.e_[i] + b.e_[i];
    if (s > kMaxExponent) throw Error("exponent overflow");
    out.e_[i] = static_cast<std::uint8_t>(s);
  }
  return out;
}

std::size_t ExponentVector::hash() const {
  // FNV-1a over the used bytes
  std::uint64_t h = 1469598103934665603ull ^ nvars_;
  for (int i = 0; i < nvars_; ++i) {
    h ^= e_[i];
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

bool grevlex_greater(const ExponentVector& a, const ExponentVector& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  for (int i = a.nvars() - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

namespace {

void sort_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return grevlex_greater(x.exponent, y.exponent); });
}

}  // namespace

SparsePolynomial::SparsePolynomial(int nvars) : nvars_(nvars) {
  if (nvars < 1 || nvars > kMaxVars)
    throw Error("number of variables must be in [1, " + std::to_string(kMaxVars) + "], got " +
                std::to_string(nvars));
}

SparsePolynomial SparsePolynomial::constant(int nvars, const mpz_class& c) {
  SparsePolynomial p(nvars);
  if (c != 0) p.terms_.push_back({ExponentVector(nvars), c});
  return p;
}

SparsePolynomial SparsePolynomial::variable(int nvars, int index) {
  ExponentVector e(nvars);
  e.set(index, 1);
  return monomial(e);
}

SparsePolynomial SparsePolynomial::monomial(const ExponentVector& e, const mpz_class& c) {
  SparsePolynomial p(e.nvars());
  if (c != 0) p.terms_.push_back({e, c});
  return p;
}

SparsePolynomial SparsePolynomial::from_terms(int nvars, std::vector<Term> terms) {
  PolynomialAccumulator acc(nvars);
  for (const Term& t : terms) acc.add(t.exponent, t.coeff);
  return std::move(acc).finish();
}

mpz_class SparsePolynomial::coefficient(const ExponentVector& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, const ExponentVector& k) {
    return grevlex_greater(t.exponent, k);
  });
  if (it != terms_.end() && it->exponent == e) return it->coeff;
  return 0;
}

bool SparsePolynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().exponent.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.exponent.degree() == d; });
}

int SparsePolynomial::max_degree() const {
  // grevlex is graded, so the first term has the largest degree
  return terms_.empty() ? -1 : terms_.front().exponent.degree();
}

SparsePolynomial SparsePolynomial::permute_variables(std::span<const int> sigma) const {
  if (static_cast<int>(sigma.size()) != nvars_) throw Error("permute_variables: length mismatch");
  SparsePolynomial out(nvars_);
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    ExponentVector e(nvars_);
    for (int i = 0; i < nvars_; ++i) e.set(i, t.exponent[sigma[i]]);
    out.terms_.push_back({e, t.coeff});
  }
  sort_terms(out.terms_);
  return out;
}

std::string SparsePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    mpz_class c = t.coeff;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    mpz_class a = abs(c);
    bool is_const = t.exponent.degree() == 0;
    std::string sep;
    if (a != 1 || is_const) {
      os << a.get_str();
      sep = "*";
    }
    for (int i = 0; i < nvars_; ++i) {
      int e = t.exponent[i];
      if (e == 0) continue;
      os << sep << "x" << (i + 1);
      if (e > 1) os << "^" << e;
      sep = "*";
    }
  }
  return os.str();
}

void SparsePolynomial::check_same_ring(const SparsePolynomial& o, const char* op) const {
  if (nvars_ != o.nvars_)
    throw Error(std::string(op) + ": nvars mismatch " + std::to_string(nvars_) + " vs " +
                std::to_string(o.nvars_));
}

SparsePolynomial SparsePolynomial::operator-() const {
  SparsePolynomial out(*this);
  for (Term& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
  check_same_ring(o, "poly_add");
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && grevlex_greater(terms_[i].exponent, o.terms_[j].exponent))) {
      merged.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || grevlex_greater(o.terms_[j].exponent, terms_[i].exponent)) {
      merged.push_back(o.terms_[j++]);
    } else {
      mpz_class c = terms_[i].coeff + o.terms_[j].coeff;
      if (c != 0) merged.push_back({terms_[i].exponent, c});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& o) { return *this += -o; }

SparsePolynomial& SparsePolynomial::operator*=(const mpz_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (Term& t : terms_) t.coeff *= c;
  return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
  a.check_same_ring(b, "poly_mul");
  PolynomialAccumulator acc(a.nvars_);
  acc.add_product(a, b);
  return std::move(acc).finish();
}

bool SparsePolynomial::operator==(const SparsePolynomial& o) const {
  if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].exponent == o.terms_[i].exponent) || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

SparsePolynomial poly_add(const SparsePolynomial& a, const SparsePolynomial& b) { return a + b; }
SparsePolynomial poly_mul(const SparsePolynomial& a, const SparsePolynomial& b) { return a * b; }

void PolynomialAccumulator::add(const ExponentVector& e, const mpz_class& c) {
  if (e.nvars() != nvars_) throw Error("accumulator: nvars mismatch");
  if (c == 0) return;
  acc_[e] += c;
}

void PolynomialAccumulator::add(const SparsePolynomial& p, const mpz_class& scale) {
  if (p.nvars() != nvars_) throw Error("accumulator: nvars mismatch");
  if (scale == 0) return;
  for (const Term& t : p.terms()) acc_[t.exponent] += t.coeff * scale;
}

void PolynomialAccumulator::add_product(const SparsePolynomial& a, const SparsePolynomial& b,
                                        const mpz_class& scale) {
  if (a.nvars() != nvars_ || b.nvars() != nvars_) throw Error("accumulator: nvars mismatch");
  if (scale == 0) return;
  acc_.reserve(acc_.size() + a.term_count() * b.term_count() / 2);
  mpz_class tmp;
  for (const Term& x : a.terms()) {
    mpz_class xs = x.coeff * scale;
    for (const Term& y : b.terms()) {
      tmp = xs * y.coeff;
      acc_[x.exponent + y.exponent] += tmp;
    }
  }
}

SparsePolynomial PolynomialAccumulator::finish() && {
  SparsePolynomial out(nvars_);
  std::vector<Term> terms;
  terms.reserve(acc_.size());
  for (auto& [e, c] : acc_)
    if (c != 0) terms.push_back({e, std::move(c)});
  acc_.clear();
  sort_terms(terms);
  out.terms_ = std::move(terms);
  return out;
}

std::vector<ExponentVector> exponents_of_degree(int d, int nvars) {
  std::vector<ExponentVector> out;
  if (d < 0) return out;
  std::vector<int> cur(static_cast<std::size_t>(nvars), 0);
  std::function<void(int, int)> rec = [&](int i, int remaining) {
    if (i == nvars - 1) {
      cur[i] = remaining;
      out.emplace_back(std::span<const int>(cur));
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      cur[i] = v;
      rec(i + 1, remaining - v);
    }
  };
  if (nvars == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  rec(0, d);
  return out;
}

}  // namespace immsnp
