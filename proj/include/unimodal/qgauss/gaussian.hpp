#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "unimodal/injectlab/box.hpp"
#include "unimodal/polycore/int_poly.hpp"

namespace unimodal::qgauss {

using poly::IntPoly;

/// [k]_X = 1 + X + ... + X^(k-1); the zero polynomial for k = 0.
inline IntPoly q_int(long k) {
  if (k < 0) throw InvalidArgument("q_int needs k >= 0");
  return IntPoly(std::vector<BigInt>(static_cast<std::size_t>(k), BigInt(1)));
}

/// [k]_X! = [1]_X [2]_X ... [k]_X, with [0]_X! = 1.
///
/// The upper limit is k, not k-1: only this convention makes
/// [n]! / ([k]! [n-k]!) agree with the product-of-(X^i - 1) quotient.
inline IntPoly q_factorial(long k) {
  if (k < 0) throw InvalidArgument("q_factorial needs k >= 0");
  IntPoly f = IntPoly::constant(1);
  for (long m = 1; m <= k; ++m) f *= q_int(m);
  return f;
}

inline void require_nonnegative_box(long a, long b) {
  if (a < 0 || b < 0) throw InvalidArgument("Gaussian polynomial indices must be nonnegative");
}

/// G_{a,b} = prod_{i=1..b} (X^(a+i) - 1) / prod_{j=1..b} (X^j - 1), by exact
/// division. A remainder would mean a bug, so it escalates to logic_error.
inline IntPoly gaussian_quotient(long a, long b) {
  require_nonnegative_box(a, b);
  IntPoly num = IntPoly::constant(1);
  IntPoly den = IntPoly::constant(1);
  for (long i = 1; i <= b; ++i) {
    num *= IntPoly::monomial(static_cast<std::size_t>(a + i)) - IntPoly::constant(1);
    den *= IntPoly::monomial(static_cast<std::size_t>(i)) - IntPoly::constant(1);
  }
  try {
    return poly::div_exact(num, den);
  } catch (const poly::NonExactDivision& e) {
    throw std::logic_error(std::string("Gaussian quotient left a remainder: ") + e.what());
  }
}

/// Memoized q-Pascal table G_{i,j} for 0 <= i <= a, 0 <= j <= b, using
/// G_{i,j} = G_{i-1,j} + X^i G_{i,j-1}.
class PascalTable {
 public:
  PascalTable(long a, long b) : a_(a), b_(b) {
    require_nonnegative_box(a, b);
    table_.resize(static_cast<std::size_t>((a + 1) * (b + 1)));
    for (long i = 0; i <= a; ++i) {
      for (long j = 0; j <= b; ++j) {
        if (i == 0 || j == 0) {
          at(i, j) = IntPoly::constant(1);
        } else {
          at(i, j) = at(i - 1, j) + at(i, j - 1).shifted(static_cast<std::size_t>(i));
        }
      }
    }
  }

  const IntPoly& get(long i, long j) const {
    if (i < 0 || j < 0 || i > a_ || j > b_) throw InvalidArgument("Pascal table lookup outside its range");
    return table_[static_cast<std::size_t>(i * (b_ + 1) + j)];
  }

 private:
  IntPoly& at(long i, long j) { return table_[static_cast<std::size_t>(i * (b_ + 1) + j)]; }

  long a_;
  long b_;
  std::vector<IntPoly> table_;
};

inline IntPoly gaussian_pascal(long a, long b) { return PascalTable(a, b).get(a, b); }

/// (c_0, ..., c_ab) with c_k = |U_k(a,b)|, by enumerating the box.
inline std::vector<BigInt> level_counts(int a, int b, std::uint64_t budget = inject::kDefaultBoxBudget) {
  return inject::enumerate_level_sizes(a, b, budget);
}

inline IntPoly gaussian_enumerated(int a, int b, std::uint64_t budget = inject::kDefaultBoxBudget) {
  return IntPoly(level_counts(a, b, budget));
}

/// (G_{n-k,k}(q))_{k=0..n}, the q-analogue of the n-th binomial row.
inline std::vector<BigInt> q_binomial_row(long n, const BigInt& q) {
  std::vector<BigInt> row;
  PascalTable table(n, n);
  for (long k = 0; k <= n; ++k) row.push_back(table.get(n - k, k).eval(q));
  return row;
}

}  // namespace unimodal::qgauss
