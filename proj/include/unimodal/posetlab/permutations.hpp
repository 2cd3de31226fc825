#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "unimodal/polycore/int_poly.hpp"
#include "unimodal/posetlab/ranked_poset.hpp"

namespace unimodal::poset {

/// A permutation of [n] in one-line notation (values 1..n).
class Permutation {
 public:
  explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<bool> seen(word_.size() + 1, false);
    for (int v : word_) {
      if (v < 1 || v > static_cast<int>(word_.size()) || seen[static_cast<std::size_t>(v)]) {
        throw InvalidArgument("not a permutation of [" + std::to_string(word_.size()) + "]: " + to_string());
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
  }

  /// Parses a digit string such as "2314" (n <= 9).
  static Permutation from_digits(const std::string& digits) {
    std::vector<int> w;
    for (char c : digits) {
      if (c < '1' || c > '9') throw InvalidArgument("bad permutation digit in '" + digits + "'");
      w.push_back(c - '0');
    }
    return Permutation(std::move(w));
  }

  int size() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }
  int operator[](std::size_t i) const { return word_[i]; }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < word_.size(); ++i) {
      if (i && word_.size() > 9) s += ",";
      s += std::to_string(word_[i]);
    }
    return s;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& x, const Permutation& y) { return x.word_ <=> y.word_; }

 private:
  std::vector<int> word_;
};

/// Pairs i < j with w_i > w_j.
inline int inv(const Permutation& p) {
  int count = 0;
  for (int i = 0; i < p.size(); ++i) {
    for (int j = i + 1; j < p.size(); ++j) count += p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)] ? 1 : 0;
  }
  return count;
}

/// Positions i in [n-1] with w_i > w_{i+1}.
inline int des(const Permutation& p) {
  int count = 0;
  for (int i = 0; i + 1 < p.size(); ++i) count += p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(i + 1)] ? 1 : 0;
  return count;
}

inline std::vector<Permutation> all_permutations(int n) {
  if (n < 0 || n > 10) throw InvalidArgument("permutation enumeration needs 0 <= n <= 10");
  std::vector<Permutation> out;
  auto w = Permutation::identity(n).word();
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

/// S_n under the weak order: pi covers sigma when pi is sigma with an ascent
/// at adjacent positions swapped into a descent. Ranked by inv.
inline RankedPoset weak_bruhat(int n) {
  if (n < 1 || n > 8) throw InvalidArgument("weak_bruhat needs 1 <= n <= 8");
  const auto perms = all_permutations(n);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i].word(), i);
  RankedPoset p;
  p.size = perms.size();
  for (std::size_t i = 0; i < perms.size(); ++i) {
    p.rank.push_back(inv(perms[i]));
    p.labels.push_back(perms[i].to_string());
    auto w = perms[i].word();
    for (std::size_t j = 0; j + 1 < w.size(); ++j) {
      if (w[j] < w[j + 1]) {
        std::swap(w[j], w[j + 1]);
        p.covers.emplace_back(i, index.at(w));
        std::swap(w[j], w[j + 1]);
      }
    }
  }
  return p;
}

/// sum over S_n of X^inv.
inline poly::IntPoly inversion_generating_function(int n) {
  std::vector<BigInt> c(static_cast<std::size_t>(n * (n - 1) / 2 + 1));
  for (const auto& p : all_permutations(n)) ++c[static_cast<std::size_t>(inv(p))];
  return poly::IntPoly(std::move(c));
}

/// A_n(X) = sum over S_n of X^des, by enumeration (n <= 9).
inline poly::IntPoly eulerian_enumerated(int n) {
  if (n < 1 || n > 9) throw InvalidArgument("eulerian enumeration needs 1 <= n <= 9");
  std::vector<BigInt> c(static_cast<std::size_t>(n));
  for (const auto& p : all_permutations(n)) ++c[static_cast<std::size_t>(des(p))];
  return poly::IntPoly(std::move(c));
}

/// A_n(X) by A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1).
inline poly::IntPoly eulerian_recurrence(int n) {
  if (n < 1) throw InvalidArgument("eulerian needs n >= 1");
  std::vector<BigInt> row{1};
  for (int m = 2; m <= n; ++m) {
    std::vector<BigInt> next(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
      if (k < m - 1) next[static_cast<std::size_t>(k)] += row[static_cast<std::size_t>(k)] * (k + 1);
      if (k > 0) next[static_cast<std::size_t>(k)] += row[static_cast<std::size_t>(k - 1)] * (m - k);
    }
    row = std::move(next);
  }
  return poly::IntPoly(std::move(row));
}

inline poly::IntPoly eulerian(int n) { return n <= 9 ? eulerian_enumerated(n) : eulerian_recurrence(n); }

}  // namespace unimodal::poset
