#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unimodal/posetlab/ranked_poset.hpp"

namespace unimodal::poset {

/// Subsets of [n] are bitmasks: element i+1 is bit i.
using Subset = std::uint32_t;

inline std::string subset_label(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    if (s & (Subset{1} << i)) {
      if (!first) out += ",";
      out += std::to_string(i + 1);
      first = false;
    }
  }
  return out + "}";
}

inline bool is_subset(Subset x, Subset y) { return (x & y) == x; }

inline bool comparable(Subset x, Subset y) { return is_subset(x, y) || is_subset(y, x); }

/// 2^[n] under inclusion, ranked by cardinality.
inline RankedPoset subset_lattice(int n) {
  if (n < 1 || n > 20) throw InvalidArgument("subset_lattice needs 1 <= n <= 20");
  RankedPoset p;
  p.size = std::size_t{1} << n;
  p.rank.resize(p.size);
  p.labels.resize(p.size);
  for (Subset s = 0; s < p.size; ++s) {
    p.rank[s] = std::popcount(s);
    p.labels[s] = subset_label(s);
    for (int i = 0; i < n; ++i) {
      if (!(s & (Subset{1} << i))) p.covers.emplace_back(s, s | (Subset{1} << i));
    }
  }
  return p;
}

class NotAnAntichain : public Error {
 public:
  NotAnAntichain(Subset x, Subset y)
      : Error("sets " + subset_label(x) + " and " + subset_label(y) + " are comparable"), pair_(x, y) {}

  std::pair<Subset, Subset> pair() const { return pair_; }

 private:
  std::pair<Subset, Subset> pair_;
};

inline void require_antichain(const std::vector<Subset>& family, int n) {
  const Subset universe = n >= 32 ? ~Subset{0} : (Subset{1} << n) - 1;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if ((family[i] & ~universe) != 0) throw InvalidArgument("set " + subset_label(family[i]) + " is not inside [n]");
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (comparable(family[i], family[j])) throw NotAnAntichain(family[i], family[j]);
    }
  }
}

/// sum over the antichain of 1 / C(n, |A|), exactly.
inline BigRational lym_sum(const std::vector<Subset>& antichain, int n) {
  if (n < 0 || n > 31) throw InvalidArgument("lym_sum needs 0 <= n <= 31");
  require_antichain(antichain, n);
  BigRational s = 0;
  for (Subset x : antichain) s += BigRational(1, binomial(n, std::popcount(x)));
  s.canonicalize();
  return s;
}

/// k when the family is exactly the k-th layer of 2^[n].
inline std::optional<int> full_layer_rank(const std::vector<Subset>& family, int n) {
  if (family.empty()) return std::nullopt;
  const int k = std::popcount(family.front());
  for (Subset x : family) {
    if (std::popcount(x) != k) return std::nullopt;
  }
  if (BigInt(static_cast<unsigned long>(family.size())) != binomial(n, k)) return std::nullopt;
  return k;  // same-size distinct sets, as many as the layer holds
}

inline bool is_middle_rank(int n, int k) { return k == n / 2 || k == (n + 1) / 2; }

/// Largest n the exhaustive antichain search accepts without a raised cap.
inline constexpr int kDefaultAntichainCap = 5;
/// Hard ceiling: 2^[7] has about 2.4e12 antichains.
inline constexpr int kMaxAntichainN = 6;

/// Calls visit on every antichain of 2^[n], including the empty family, by a
/// depth-first include/exclude walk over subsets in increasing bitmask order.
inline std::size_t for_each_antichain(int n, const std::function<void(const std::vector<Subset>&)>& visit,
                                      int cap = kDefaultAntichainCap) {
  if (n < 1) throw InvalidArgument("antichain search needs n >= 1");
  if (n > std::min(cap, kMaxAntichainN)) {
    throw BudgetExceeded("exhaustive antichain search is capped at n = " + std::to_string(std::min(cap, kMaxAntichainN)));
  }
  const Subset total = Subset{1} << n;
  std::vector<Subset> chosen;
  std::size_t count = 0;
  std::function<void(Subset)> rec = [&](Subset next) {
    if (next == total) {
      ++count;
      visit(chosen);
      return;
    }
    rec(next + 1);
    for (Subset c : chosen) {
      if (comparable(c, next)) return;
    }
    chosen.push_back(next);
    rec(next + 1);
    chosen.pop_back();
  };
  rec(0);
  return count;
}

struct SpernerResult {
  int n = 0;
  std::size_t antichain_count = 0;
  std::size_t max_size = 0;
  BigInt bound;  // C(n, ceil(n/2))
  std::vector<std::vector<Subset>> maximum_antichains;
  bool maxima_are_middle_layers = false;
};

/// Exhaustive largest-antichain search in 2^[n].
inline SpernerResult max_antichain(int n, int cap = kDefaultAntichainCap) {
  SpernerResult r;
  r.n = n;
  r.bound = binomial(n, (n + 1) / 2);
  r.antichain_count = for_each_antichain(
      n,
      [&](const std::vector<Subset>& family) {
        if (family.size() > r.max_size) {
          r.max_size = family.size();
          r.maximum_antichains.clear();
        }
        if (family.size() == r.max_size) r.maximum_antichains.push_back(family);
      },
      cap);
  r.maxima_are_middle_layers = true;
  for (const auto& family : r.maximum_antichains) {
    const auto k = full_layer_rank(family, n);
    r.maxima_are_middle_layers = r.maxima_are_middle_layers && k && is_middle_rank(n, *k);
  }
  return r;
}

}  // namespace unimodal::poset
