#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "unimodal/bigint.hpp"
#include "unimodal/errors.hpp"

namespace unimodal::inject {

class InvalidPartition : public Error {
 public:
  using Error::Error;
};

/// Default cap on C(a+b, a) for exhaustive box enumeration.
inline constexpr std::uint64_t kDefaultBoxBudget = 10'000'000;

/// A partition fitting in an a x b box: b >= parts[0] >= ... >= parts[a-1] >= 0.
class BoxedPartition {
 public:
  BoxedPartition(std::vector<int> parts, int a, int b) : parts_(std::move(parts)), a_(a), b_(b) {
    if (a < 0 || b < 0) throw InvalidPartition("box dimensions must be nonnegative");
    if (parts_.size() != static_cast<std::size_t>(a)) {
      throw InvalidPartition("partition " + to_string() + " does not have " + std::to_string(a) + " parts");
    }
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      const int upper = i == 0 ? b : parts_[i - 1];
      if (parts_[i] < 0 || parts_[i] > upper) {
        throw InvalidPartition("partition " + to_string() + " does not fit the " + std::to_string(a) + "x" +
                               std::to_string(b) + " box");
      }
    }
  }

  static BoxedPartition zero(int a, int b) { return {std::vector<int>(static_cast<std::size_t>(a), 0), a, b}; }

  /// (first, ..., 0) padded to a parts; convenient for the small witness shapes.
  static BoxedPartition padded(std::vector<int> prefix, int a, int b) {
    prefix.resize(static_cast<std::size_t>(a), 0);
    return {std::move(prefix), a, b};
  }

  const std::vector<int>& parts() const { return parts_; }
  int a() const { return a_; }
  int b() const { return b_; }
  int operator[](std::size_t i) const { return parts_[i]; }

  int weight() const {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
  }

  bool is_full() const { return weight() == a_ * b_; }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const BoxedPartition&, const BoxedPartition&) = default;
  friend auto operator<=>(const BoxedPartition& x, const BoxedPartition& y) { return x.parts_ <=> y.parts_; }

 private:
  std::vector<int> parts_;
  int a_;
  int b_;
};

inline void check_box_budget(int a, int b, std::uint64_t budget) {
  if (a < 0 || b < 0) throw InvalidArgument("box dimensions must be nonnegative");
  if (binomial(a + b, a) > BigInt(std::to_string(budget))) {
    throw BudgetExceeded("box " + std::to_string(a) + "x" + std::to_string(b) + " holds C(" + std::to_string(a + b) +
                         "," + std::to_string(a) + ") partitions, above the budget of " + std::to_string(budget));
  }
}

namespace detail {

// Visits every partition in the box with the given weight (or every weight
// when target < 0) in lexicographically increasing order.
inline void walk_box(int a, int b, int target, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> parts(static_cast<std::size_t>(a), 0);
  std::function<void(int, int, int)> rec = [&](int i, int upper, int remaining) {
    if (i == a) {
      if (target < 0 || remaining == 0) visit(parts);
      return;
    }
    const int slots = a - i;
    for (int v = 0; v <= upper; ++v) {
      if (target >= 0) {
        if (v > remaining) break;
        if (v * slots < remaining) continue;
      }
      parts[static_cast<std::size_t>(i)] = v;
      rec(i + 1, v, target >= 0 ? remaining - v : 0);
    }
    parts[static_cast<std::size_t>(i)] = 0;
  };
  rec(0, b, target);
}

}  // namespace detail

/// All of U(a,b) in lexicographic order.
inline std::vector<BoxedPartition> enumerate_box(int a, int b, std::uint64_t budget = kDefaultBoxBudget) {
  check_box_budget(a, b, budget);
  std::vector<BoxedPartition> out;
  detail::walk_box(a, b, -1, [&](const std::vector<int>& p) { out.emplace_back(p, a, b); });
  return out;
}

/// U_k(a,b) in lexicographic order.
inline std::vector<BoxedPartition> level(int a, int b, int k, std::uint64_t budget = kDefaultBoxBudget) {
  check_box_budget(a, b, budget);
  if (k < 0 || k > a * b) throw InvalidArgument("level " + std::to_string(k) + " outside [0, ab]");
  std::vector<BoxedPartition> out;
  detail::walk_box(a, b, k, [&](const std::vector<int>& p) { out.emplace_back(p, a, b); });
  return out;
}

/// (|U_0(a,b)|, ..., |U_ab(a,b)|) by direct enumeration.
inline std::vector<BigInt> enumerate_level_sizes(int a, int b, std::uint64_t budget = kDefaultBoxBudget) {
  check_box_budget(a, b, budget);
  std::vector<BigInt> counts(static_cast<std::size_t>(a * b + 1));
  detail::walk_box(a, b, -1, [&](const std::vector<int>& p) {
    int w = 0;
    for (int x : p) w += x;
    ++counts[static_cast<std::size_t>(w)];
  });
  return counts;
}

/// Row i of the a x b 0/1 matrix holds parts[i] leading ones.
inline std::vector<std::vector<int>> to_matrix(const BoxedPartition& lambda) {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(lambda.a()), std::vector<int>(static_cast<std::size_t>(lambda.b()), 0));
  for (int i = 0; i < lambda.a(); ++i) {
    for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
  }
  return m;
}

/// Partition in box (b,a) whose matrix is the transpose.
inline BoxedPartition conjugate(const BoxedPartition& lambda) {
  std::vector<int> theta(static_cast<std::size_t>(lambda.b()), 0);
  for (int j = 1; j <= lambda.b(); ++j) {
    int count = 0;
    for (int p : lambda.parts()) count += p >= j ? 1 : 0;
    theta[static_cast<std::size_t>(j - 1)] = count;
  }
  return {std::move(theta), lambda.b(), lambda.a()};
}

/// n_lambda = sum_i parts[i] (b+1)^(a-1-i), the base-(b+1) reading of the parts.
inline BigInt base_value(const BoxedPartition& lambda) {
  BigInt v = 0;
  for (int p : lambda.parts()) v = v * (lambda.b() + 1) + p;
  return v;
}

/// max_i (i * parts[i]) with 1-based i.
inline int max_weighted_part(const BoxedPartition& lambda) {
  int best = 0;
  for (std::size_t i = 0; i < lambda.parts().size(); ++i) best = std::max(best, static_cast<int>(i + 1) * lambda[i]);
  return best;
}

/// Componentwise lambda <= tau in the same box.
inline bool dominated_by(const BoxedPartition& lambda, const BoxedPartition& tau) {
  if (lambda.a() != tau.a() || lambda.b() != tau.b()) return false;
  for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
    if (lambda[i] > tau[i]) return false;
  }
  return true;
}

/// Every tau at level |lambda|+1 with tau >= lambda componentwise; these are
/// exactly the single-coordinate increments that keep the parts decreasing.
inline std::vector<BoxedPartition> successors(const BoxedPartition& lambda) {
  std::vector<BoxedPartition> out;
  for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
    const int upper = i == 0 ? lambda.b() : lambda[i - 1];
    if (lambda[i] < upper) {
      auto parts = lambda.parts();
      ++parts[i];
      out.emplace_back(std::move(parts), lambda.a(), lambda.b());
    }
  }
  return out;
}

}  // namespace unimodal::inject
