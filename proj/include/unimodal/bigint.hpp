#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "unimodal/errors.hpp"

namespace unimodal {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline std::string to_string(const BigRational& v) { return v.get_str(); }

inline BigInt parse_bigint(const std::string& text) {
  BigInt v;
  if (text.empty() || v.set_str(text, 10) != 0) {
    throw InvalidArgument("not a decimal integer: '" + text + "'");
  }
  return v;
}

/// C(n, k), zero outside 0 <= k <= n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

inline BigInt factorial(std::int64_t n) {
  if (n < 0) throw InvalidArgument("factorial of a negative number");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

/// Unimodality of a plain integer sequence: weakly rising, then weakly falling.
template <typename Seq>
bool is_unimodal_sequence(const Seq& s) {
  std::size_t i = 0;
  const std::size_t n = s.size();
  while (i + 1 < n && s[i] <= s[i + 1]) ++i;
  while (i + 1 < n && s[i] >= s[i + 1]) ++i;
  return i + 1 >= n;
}

}  // namespace unimodal
