#pragma once

// Exact sparse multivariate polynomials with arbitrary-precision integer
// coefficients in a fixed number of variables.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "immsnp/error.hpp"

namespace immsnp {

inline constexpr int kMaxVars = 16;
inline constexpr int kMaxExponent = 255;

// Dense exponent vector of fixed length nvars.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(int nvars);
  explicit ExponentVector(std::span<const int> entries);
  ExponentVector(std::initializer_list<int> entries)
      : ExponentVector(std::span<const int>(entries.begin(), entries.size())) {}

  int nvars() const { return nvars_; }
  int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  void set(int i, int value);
  void increment(int i, int by = 1) { set(i, (*this)[i] + by); }
  int degree() const;
  std::vector<int> to_vector() const;
  std::string to_string() const;

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
  bool operator==(const ExponentVector& o) const { return nvars_ == o.nvars_ && e_ == o.e_; }
  // Lexicographic; used only for set/map keys, not for serialization.
  bool operator<(const ExponentVector& o) const {
    return nvars_ != o.nvars_ ? nvars_ < o.nvars_ : e_ < o.e_;
  }
  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxVars> e_{};
  std::uint8_t nvars_ = 0;
};

struct ExponentHash {
  std::size_t operator()(const ExponentVector& e) const { return e.hash(); }
};

// Canonical term order: graded reverse lexicographic, larger first.
bool grevlex_greater(const ExponentVector& a, const ExponentVector& b);

struct Term {
  ExponentVector exponent;
  mpz_class coeff;
};

class SparsePolynomial {
 public:
  SparsePolynomial() = default;
  explicit SparsePolynomial(int nvars);

  static SparsePolynomial constant(int nvars, const mpz_class& c);
  static SparsePolynomial variable(int nvars, int index);  // 0-based index
  static SparsePolynomial monomial(const ExponentVector& e, const mpz_class& c = 1);
  // Combines equal exponents and drops zeros.
  static SparsePolynomial from_terms(int nvars, std::vector<Term> terms);

  int nvars() const { return nvars_; }
  // Terms in canonical order, no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  mpz_class coefficient(const ExponentVector& e) const;
  bool is_homogeneous() const;
  int max_degree() const;  // -1 for the zero polynomial
  // Variable i of the result is variable sigma[i] of this.
  SparsePolynomial permute_variables(std::span<const int> sigma) const;
  std::string to_string() const;

  SparsePolynomial operator-() const;
  SparsePolynomial& operator+=(const SparsePolynomial& o);
  SparsePolynomial& operator-=(const SparsePolynomial& o);
  SparsePolynomial& operator*=(const mpz_class& c);
  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
  friend SparsePolynomial operator*(SparsePolynomial a, const mpz_class& c) { return a *= c; }
  friend SparsePolynomial operator*(const mpz_class& c, SparsePolynomial a) { return a *= c; }
  bool operator==(const SparsePolynomial& o) const;

 private:
  friend class PolynomialAccumulator;
  void check_same_ring(const SparsePolynomial& o, const char* op) const;
  int nvars_ = 0;
  std::vector<Term> terms_;
};

SparsePolynomial poly_add(const SparsePolynomial& a, const SparsePolynomial& b);
SparsePolynomial poly_mul(const SparsePolynomial& a, const SparsePolynomial& b);

// Hash-map accumulator for sums of many terms or products.
class PolynomialAccumulator {
 public:
  explicit PolynomialAccumulator(int nvars) : nvars_(nvars) {}
  void add(const ExponentVector& e, const mpz_class& c);
  void add(const SparsePolynomial& p, const mpz_class& scale = 1);
  void add_product(const SparsePolynomial& a, const SparsePolynomial& b, const mpz_class& scale = 1);
  SparsePolynomial finish() &&;

 private:
  int nvars_;
  std::unordered_map<ExponentVector, mpz_class, ExponentHash> acc_;
};

// All exponent vectors of total degree d in nvars variables, reverse lexicographic.
std::vector<ExponentVector> exponents_of_degree(int d, int nvars);

}  // namespace immsnp

template <>
struct std::hash<immsnp::ExponentVector> {
  std::size_t operator()(const immsnp::ExponentVector& e) const { return e.hash(); }
};
