#pragma once

#include <cstddef>
#include <optional>

#include "unimodal/polycore/int_poly.hpp"

namespace unimodal::poly {

/// Least index k0 with a_0 <= ... <= a_k0 >= ... >= a_n, or none when the
/// coefficient sequence is not unimodal. The zero polynomial has mode 0.
///
/// Any valid peak carries the maximum value, and the first occurrence of the
/// maximum is itself a valid peak whenever one exists.
inline std::optional<std::size_t> mode(const IntPoly& f) {
  const auto c = f.coeffs();
  if (c.empty()) return 0;
  std::size_t peak = 0;
  for (std::size_t k = 1; k < c.size(); ++k) {
    if (c[k] > c[peak]) peak = k;
  }
  for (std::size_t k = 0; k < peak; ++k) {
    if (c[k] > c[k + 1]) return std::nullopt;
  }
  for (std::size_t k = peak; k + 1 < c.size(); ++k) {
    if (c[k] < c[k + 1]) return std::nullopt;
  }
  return peak;
}

inline bool is_unimodal(const IntPoly& f) { return mode(f).has_value(); }

/// f is unimodal and a_k is a maximal coefficient. On a plateau every index
/// of the plateau qualifies, not just the least one.
inline bool is_peak_index(const IntPoly& f, std::size_t k) {
  const auto m = mode(f);
  return m && f[k] == f[*m];
}

/// a_k^2 >= a_{k-1} a_{k+1} at every internal index.
inline bool is_log_concave(const IntPoly& f) {
  const auto c = f.coeffs();
  for (std::size_t k = 1; k + 1 < c.size(); ++k) {
    if (c[k] * c[k] < c[k - 1] * c[k + 1]) return false;
  }
  return true;
}

/// a_k == a_{n-k} for 0 <= k <= n, i.e. X^n f(1/X) == f. Fails when deg f > n.
inline bool is_palindromic(const IntPoly& f, long n) {
  if (n < 0) return f.is_zero();
  if (f.degree() > n) return false;
  for (long k = 0; 2 * k < n; ++k) {
    if (f[static_cast<std::size_t>(k)] != f[static_cast<std::size_t>(n - k)]) return false;
  }
  return true;
}

/// Lowest nonzero index plus degree.
inline long darga(const IntPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial("darga of the zero polynomial");
  return static_cast<long>(f.lowest_degree()) + f.degree();
}

/// Symmetric about darga/2.
inline bool is_darga_palindromic(const IntPoly& f) { return is_palindromic(f, darga(f)); }

/// X^n f(1/X) computed by index reversal; requires deg f <= n.
inline IntPoly reciprocal(const IntPoly& f, long n) {
  if (f.degree() > n) throw InvalidArgument("reciprocal degree bound below polynomial degree");
  std::vector<BigInt> v(static_cast<std::size_t>(n + 1));
  for (long k = 0; k <= f.degree(); ++k) v[static_cast<std::size_t>(n - k)] = f[static_cast<std::size_t>(k)];
  return IntPoly(std::move(v));
}

}  // namespace unimodal::poly
