#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "unimodal/bigint.hpp"
#include "unimodal/errors.hpp"

namespace unimodal::poly {

class NonExactDivision : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

/// Dense polynomial with arbitrary-precision integer coefficients.
///
/// Index k holds the coefficient of X^k. Trailing zeros are stripped on
/// construction, so the zero polynomial is the empty sequence and the last
/// stored coefficient of a nonzero polynomial is never zero.
class IntPoly {
 public:
  IntPoly() = default;

  IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
  }

  explicit IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
  }

  static IntPoly constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

  /// c * X^k
  static IntPoly monomial(std::size_t k, const BigInt& c = 1) {
    std::vector<BigInt> v(k + 1);
    v[k] = c;
    return IntPoly(std::move(v));
  }

  /// (1 + X)^n by the binomial row.
  static IntPoly one_plus_x_pow(std::size_t n) {
    std::vector<BigInt> v(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      v[k] = binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k));
    }
    return IntPoly(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree, or -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  std::size_t size() const { return coeffs_.size(); }

  /// Index of the lowest nonzero coefficient. Throws on the zero polynomial.
  std::size_t lowest_degree() const {
    if (is_zero()) throw ZeroPolynomial("lowest degree of the zero polynomial");
    std::size_t i = 0;
    while (coeffs_[i] == 0) ++i;
    return i;
  }

  std::span<const BigInt> coeffs() const { return coeffs_; }

  /// Coefficient of X^k; zero beyond the degree.
  const BigInt& operator[](std::size_t k) const {
    static const BigInt zero = 0;
    return k < coeffs_.size() ? coeffs_[k] : zero;
  }

  const BigInt& leading() const {
    if (is_zero()) throw ZeroPolynomial("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  BigInt eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// X^k * f
  IntPoly shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<BigInt> v(k + coeffs_.size());
    std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + static_cast<std::ptrdiff_t>(k));
    return IntPoly(std::move(v));
  }

  IntPoly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigInt> v(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
    return IntPoly(std::move(v));
  }

  bool has_nonnegative_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c >= 0; });
  }

  BigInt coefficient_sum() const {
    BigInt s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
  }

  IntPoly& operator+=(const IntPoly& g) {
    if (g.coeffs_.size() > coeffs_.size()) coeffs_.resize(g.coeffs_.size());
    for (std::size_t k = 0; k < g.coeffs_.size(); ++k) coeffs_[k] += g.coeffs_[k];
    normalize();
    return *this;
  }

  IntPoly& operator-=(const IntPoly& g) {
    if (g.coeffs_.size() > coeffs_.size()) coeffs_.resize(g.coeffs_.size());
    for (std::size_t k = 0; k < g.coeffs_.size(); ++k) coeffs_[k] -= g.coeffs_[k];
    normalize();
    return *this;
  }

  IntPoly& operator*=(const BigInt& c) {
    if (c == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
  }

  friend IntPoly operator+(IntPoly f, const IntPoly& g) { return f += g; }
  friend IntPoly operator-(IntPoly f, const IntPoly& g) { return f -= g; }
  friend IntPoly operator*(IntPoly f, const BigInt& c) { return f *= c; }

  friend IntPoly operator*(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<BigInt> v(f.size() + g.size() - 1);
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (g.coeffs_[j] != 0) mpz_addmul(v[i + j].get_mpz_t(), f.coeffs_[i].get_mpz_t(), g.coeffs_[j].get_mpz_t());
      }
    }
    return IntPoly(std::move(v));
  }

  IntPoly& operator*=(const IntPoly& g) { return *this = *this * g; }

  friend bool operator==(const IntPoly& f, const IntPoly& g) { return f.coeffs_ == g.coeffs_; }

  IntPoly pow(unsigned n) const {
    IntPoly result = constant(1);
    IntPoly base = *this;
    while (n > 0) {
      if (n & 1U) result *= base;
      n >>= 1U;
      if (n > 0) base *= base;
    }
    return result;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (k) s += ",";
      s += coeffs_[k].get_str();
    }
    return s + "]";
  }

  friend std::ostream& operator<<(std::ostream& os, const IntPoly& f) { return os << f.to_string(); }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

inline IntPoly add(const IntPoly& f, const IntPoly& g) { return f + g; }
inline IntPoly mul(const IntPoly& f, const IntPoly& g) { return f * g; }

/// Quotient of f by g, required to be exact over the integers.
inline IntPoly div_exact(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
  if (f.is_zero()) return {};
  if (f.degree() < g.degree()) throw NonExactDivision("divisor degree exceeds dividend degree");

  std::vector<BigInt> rem(f.coeffs().begin(), f.coeffs().end());
  const auto dg = static_cast<std::size_t>(g.degree());
  const auto dq = static_cast<std::size_t>(f.degree() - g.degree());
  const BigInt& lead = g.leading();
  std::vector<BigInt> quot(dq + 1);

  for (std::size_t i = dq + 1; i-- > 0;) {
    BigInt& top = rem[i + dg];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw NonExactDivision("leading coefficient does not divide at X^" + std::to_string(i + dg));
    }
    mpz_divexact(quot[i].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j <= dg; ++j) {
      if (g[j] != 0) mpz_submul(rem[i + j].get_mpz_t(), quot[i].get_mpz_t(), g[j].get_mpz_t());
    }
  }
  for (std::size_t k = 0; k < dg; ++k) {
    if (rem[k] != 0) throw NonExactDivision("nonzero remainder at X^" + std::to_string(k));
  }
  return IntPoly(std::move(quot));
}

/// f(X + 1), by expanding each X^k binomially.
inline IntPoly taylor_shift_one(const IntPoly& f) {
  if (f.is_zero()) return {};
  // Horner in the ring: f(X+1) = (...(a_n (X+1) + a_{n-1})(X+1) + ...) + a_0
  std::vector<BigInt> v(f.coeffs().begin(), f.coeffs().end());
  const std::size_t n = v.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) v[j] += v[j + 1];
  }
  return IntPoly(std::move(v));
}

}  // namespace unimodal::poly
