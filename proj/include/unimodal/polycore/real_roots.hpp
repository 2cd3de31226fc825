#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "unimodal/polycore/int_poly.hpp"

namespace unimodal::poly {

namespace detail {

// Dense rational polynomial used only by the root-counting machinery.
using QPoly = std::vector<BigRational>;

inline void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly to_rational(const IntPoly& f) {
  QPoly p;
  p.reserve(f.size());
  for (const auto& c : f.coeffs()) p.emplace_back(c);
  return p;
}

inline QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<unsigned long>(k));
  trim(d);
  return d;
}

inline QPoly remainder(QPoly num, const QPoly& den) {
  const std::size_t dd = den.size() - 1;
  while (!num.empty() && num.size() - 1 >= dd) {
    const BigRational factor = num.back() / den.back();
    const std::size_t offset = num.size() - 1 - dd;
    for (std::size_t j = 0; j <= dd; ++j) num[offset + j] -= factor * den[j];
    num.pop_back();
    trim(num);
  }
  return num;
}

inline QPoly make_monic(QPoly p) {
  const BigRational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

inline QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : make_monic(std::move(a));
}

inline QPoly quotient(QPoly num, const QPoly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() - 1 < dd) return {};
  QPoly q(num.size() - dd);
  while (!num.empty() && num.size() - 1 >= dd) {
    const BigRational factor = num.back() / den.back();
    const std::size_t offset = num.size() - 1 - dd;
    q[offset] = factor;
    for (std::size_t j = 0; j <= dd; ++j) num[offset + j] -= factor * den[j];
    num.pop_back();
    trim(num);
  }
  trim(q);
  return q;
}

inline int sign_at(const QPoly& p, const BigRational& x) {
  BigRational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return sgn(acc);
}

inline std::size_t sign_changes(const std::vector<QPoly>& chain, const BigRational& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Number of distinct real roots of a square-free polynomial of degree >= 1.
inline std::size_t sturm_count_squarefree(const QPoly& p) {
  std::vector<QPoly> chain{p, derivative(p)};
  while (chain.back().size() > 1) {
    QPoly r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  // Cauchy bound: every root lies strictly inside (-bound, bound).
  BigRational bound = 0;
  const BigRational lead = abs(p.back());
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    BigRational ratio = abs(p[k]) / lead;
    if (ratio > bound) bound = ratio;
  }
  bound += 1;
  return sign_changes(chain, -bound) - sign_changes(chain, bound);
}

inline std::size_t distinct_real_roots(const QPoly& p) {
  if (p.size() <= 1) return 0;
  const QPoly g = gcd(p, derivative(p));
  const QPoly squarefree = g.size() <= 1 ? p : quotient(p, g);
  return sturm_count_squarefree(squarefree);
}

}  // namespace detail

/// Number of distinct real roots, by a Sturm sequence of the square-free part.
inline std::size_t count_distinct_real_roots(const IntPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial("root count of the zero polynomial");
  return detail::distinct_real_roots(detail::to_rational(f));
}

/// Number of real roots counted with multiplicity. A root of multiplicity m
/// survives in exactly the first m members of f, gcd(f, f'), gcd of that with
/// its derivative, and so on.
inline std::size_t count_real_roots(const IntPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial("root count of the zero polynomial");
  detail::QPoly h = detail::to_rational(f);
  std::size_t total = 0;
  while (h.size() > 1) {
    total += detail::distinct_real_roots(h);
    h = detail::gcd(h, detail::derivative(h));
  }
  return total;
}

inline bool is_real_rooted(const IntPoly& f) {
  return count_real_roots(f) == static_cast<std::size_t>(f.degree());
}

}  // namespace unimodal::poly
