#pragma once

#include <algorithm>
#include <vector>

#include "unimodal/polycore/int_poly.hpp"
#include "unimodal/polycore/properties.hpp"

namespace unimodal::poly {

class NotPalindromic : public Error {
 public:
  using Error::Error;
};

/// Coordinates of a palindromic polynomial in the basis X^k (1+X)^(n-2k),
/// 0 <= k <= n/2. `center` is n, twice the symmetry center.
struct GammaVector {
  std::vector<BigInt> gammas;
  long center = 0;

  bool is_nonnegative() const {
    return std::all_of(gammas.begin(), gammas.end(), [](const BigInt& g) { return g >= 0; });
  }

  IntPoly reconstruct() const {
    IntPoly f;
    for (std::size_t k = 0; k < gammas.size(); ++k) {
      if (gammas[k] == 0) continue;
      const auto n = static_cast<std::size_t>(center);
      f += IntPoly::one_plus_x_pow(n - 2 * k).shifted(k) * gammas[k];
    }
    return f;
  }

  friend bool operator==(const GammaVector&, const GammaVector&) = default;
};

/// The basis element X^k (1+X)^(n-2k) has lowest term X^k with coefficient
/// one, so peeling off the lowest remaining coefficient for k = 0, 1, ...
/// solves the unitriangular system over the integers.
inline GammaVector gamma_decompose(const IntPoly& f, long n) {
  if (n < 0) throw InvalidArgument("gamma center must be nonnegative");
  if (!is_palindromic(f, n)) {
    throw NotPalindromic("polynomial " + f.to_string() + " is not palindromic with center " +
                         std::to_string(n) + "/2");
  }
  GammaVector out;
  out.center = n;
  out.gammas.resize(static_cast<std::size_t>(n / 2 + 1));
  IntPoly residual = f;
  for (std::size_t k = 0; k < out.gammas.size(); ++k) {
    const BigInt g = residual[k];
    out.gammas[k] = g;
    if (g != 0) residual -= IntPoly::one_plus_x_pow(static_cast<std::size_t>(n) - 2 * k).shifted(k) * g;
  }
  // The residual of a palindromic input is palindromic and vanishes below
  // X^(n/2 + 1), hence everywhere.
  if (!residual.is_zero()) {
    throw NotPalindromic("nonzero residual after gamma decomposition: " + residual.to_string());
  }
  return out;
}

inline bool is_gamma_nonnegative(const IntPoly& f, long n) { return gamma_decompose(f, n).is_nonnegative(); }

}  // namespace unimodal::poly
