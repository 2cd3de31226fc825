#pragma once

#include <cstddef>
#include <vector>

#include "unimodal/polycore/int_poly.hpp"
#include "unimodal/polycore/properties.hpp"

namespace unimodal::poly {

/// (1+X)^(m+1) - (1+X)^r for 0 <= r <= m.
inline IntPoly boros_moll_P(long m, long r) {
  if (r < 0 || r > m) {
    throw InvalidArgument("boros_moll_P needs 0 <= r <= m, got m=" + std::to_string(m) + ", r=" + std::to_string(r));
  }
  return IntPoly::one_plus_x_pow(static_cast<std::size_t>(m + 1)) -
         IntPoly::one_plus_x_pow(static_cast<std::size_t>(r));
}

inline bool has_nondecreasing_nonnegative_coefficients(const IntPoly& f) {
  const auto c = f.coeffs();
  if (!c.empty() && c[0] < 0) return false;
  for (std::size_t k = 1; k < c.size(); ++k) {
    if (c[k] < c[k - 1]) return false;
  }
  return true;
}

inline void require_nondecreasing_nonnegative(const IntPoly& f) {
  if (!has_nondecreasing_nonnegative_coefficients(f)) {
    throw PreconditionViolated("coefficients of " + f.to_string() + " are not nonnegative and nondecreasing");
  }
}

/// Unimodality of f(X+1) for f with nonnegative nondecreasing coefficients.
inline bool shifted_is_unimodal(const IntPoly& f) {
  require_nondecreasing_nonnegative(f);
  return is_unimodal(taylor_shift_one(f));
}

/// Weights (a_0, a_1 - a_0, ..., a_n - a_{n-1}) of X f(X+1) in the basis
/// P_{n,0}, ..., P_{n,n}.
inline std::vector<BigInt> decompose_shift(const IntPoly& f) {
  require_nondecreasing_nonnegative(f);
  const auto c = f.coeffs();
  std::vector<BigInt> w(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) w[k] = k == 0 ? c[0] : c[k] - c[k - 1];
  return w;
}

/// Sum of w_k P_{n,k}, the right-hand side of the shift decomposition.
inline IntPoly recompose_shift(const std::vector<BigInt>& weights) {
  IntPoly out;
  if (weights.empty()) return out;
  const auto n = static_cast<long>(weights.size()) - 1;
  for (long k = 0; k <= n; ++k) {
    const auto& w = weights[static_cast<std::size_t>(k)];
    if (w != 0) out += boros_moll_P(n, k) * w;
  }
  return out;
}

/// Checks X f(X+1) == sum_k (a_k - a_{k-1}) P_{n,k} exactly.
inline bool shift_identity_holds(const IntPoly& f) {
  return taylor_shift_one(f).shifted(1) == recompose_shift(decompose_shift(f));
}

/// Polynomial sum_k s_k (X-1)^k built from the sequence s.
inline IntPoly from_shifted_basis(const std::vector<BigInt>& s) {
  IntPoly out;
  const IntPoly x_minus_one{-1, 1};
  IntPoly power = IntPoly::constant(1);
  for (const auto& c : s) {
    if (c != 0) out += power * c;
    power *= x_minus_one;
  }
  return out;
}

/// Example families for the shift test. Each builds the sequence
/// s_k = sum_{j=k}^m w(j) C(j,k), 0 <= k <= m, for a weight w(j).
enum class ShiftFamily {
  PowerOfBase,      // w(j) = base^j
  PowerOfIndex,     // w(j) = j^exponent
  SelfPower,        // w(j) = j^j
};

inline BigInt family_weight(ShiftFamily family, long parameter, long j) {
  switch (family) {
    case ShiftFamily::PowerOfBase:
      return pow(BigInt(parameter), static_cast<unsigned long>(j));
    case ShiftFamily::PowerOfIndex:
      return pow(BigInt(j), static_cast<unsigned long>(parameter));
    case ShiftFamily::SelfPower:
      return pow(BigInt(j), static_cast<unsigned long>(j));
  }
  return 0;
}

template <typename Weight>
std::vector<BigInt> binomial_transform_sequence(long m, Weight&& weight) {
  std::vector<BigInt> s(static_cast<std::size_t>(m + 1));
  for (long k = 0; k <= m; ++k) {
    for (long j = k; j <= m; ++j) s[static_cast<std::size_t>(k)] += weight(j) * binomial(j, k);
  }
  return s;
}

inline std::vector<BigInt> family_sequence(ShiftFamily family, long parameter, long m) {
  if (m < 0 || parameter < 1) throw InvalidArgument("family needs m >= 0 and a positive parameter");
  return binomial_transform_sequence(m, [&](long j) { return family_weight(family, parameter, j); });
}

/// Sequence c_k = sum_j prod_i C(a_i m, j)^{n_i} C(j, k) for 2 < a_1 < ... < a_r.
inline std::vector<BigInt> binomial_power_sequence(const std::vector<long>& a, const std::vector<long>& n, long m) {
  if (a.size() != n.size() || a.empty()) throw InvalidArgument("binomial_power_sequence needs matching nonempty a and n");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] <= 2 || (i > 0 && a[i] <= a[i - 1]) || n[i] < 1) {
      throw InvalidArgument("binomial_power_sequence needs 2 < a_1 < ... < a_r and positive n_i");
    }
  }
  return binomial_transform_sequence(m, [&](long j) {
    BigInt w = 1;
    for (std::size_t i = 0; i < a.size(); ++i) w *= pow(binomial(a[i] * m, j), static_cast<unsigned long>(n[i]));
    return w;
  });
}

/// Result of running a sequence through the shift test: f = sum s_k (X-1)^k
/// must have nonnegative nondecreasing coefficients, f(X+1) must reproduce s,
/// and s must come out unimodal.
struct ShiftTestResult {
  IntPoly base;
  bool precondition = false;
  bool round_trip = false;
  bool unimodal = false;
};

inline ShiftTestResult run_shift_test(const std::vector<BigInt>& s) {
  ShiftTestResult r;
  r.base = from_shifted_basis(s);
  r.precondition = has_nondecreasing_nonnegative_coefficients(r.base);
  r.round_trip = taylor_shift_one(r.base) == IntPoly(s);
  r.unimodal = r.precondition && shifted_is_unimodal(r.base);
  return r;
}

}  // namespace unimodal::poly
