#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "unimodal/polycore/int_poly.hpp"
#include "unimodal/posetlab/ranked_poset.hpp"

namespace unimodal::poset {

/// Set partition of [n], stored as a restricted growth string: label[i] is
/// the block of element i+1, blocks numbered in order of first appearance.
class SetPartition {
 public:
  /// Builds from arbitrary blocks; they must be disjoint, nonempty and cover [n].
  SetPartition(int n, const std::vector<std::vector<int>>& blocks) : labels_(static_cast<std::size_t>(n), -1) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) throw InvalidArgument("empty block in set partition");
      for (int x : blocks[b]) {
        if (x < 1 || x > n || labels_[static_cast<std::size_t>(x - 1)] != -1) {
          throw InvalidArgument("blocks are not a partition of [" + std::to_string(n) + "]");
        }
        labels_[static_cast<std::size_t>(x - 1)] = static_cast<int>(b);
      }
    }
    for (int l : labels_) {
      if (l == -1) throw InvalidArgument("blocks do not cover [" + std::to_string(n) + "]");
    }
    canonicalize();
  }

  static SetPartition from_labels(std::vector<int> labels) {
    SetPartition p;
    p.labels_ = std::move(labels);
    p.canonicalize();
    return p;
  }

  int n() const { return static_cast<int>(labels_.size()); }
  const std::vector<int>& labels() const { return labels_; }

  int block_count() const {
    int m = 0;
    for (int l : labels_) m = std::max(m, l + 1);
    return m;
  }

  std::vector<std::vector<int>> blocks() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(block_count()));
    for (std::size_t i = 0; i < labels_.size(); ++i) out[static_cast<std::size_t>(labels_[i])].push_back(static_cast<int>(i + 1));
    return out;
  }

  std::string to_string() const {
    std::string s;
    for (const auto& block : blocks()) {
      if (!s.empty()) s += "|";
      for (int x : block) s += std::to_string(x);
    }
    return s;
  }

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition& x, const SetPartition& y) { return x.labels_ <=> y.labels_; }

 private:
  SetPartition() = default;

  void canonicalize() {
    std::map<int, int> relabel;
    for (int& l : labels_) {
      auto it = relabel.find(l);
      if (it == relabel.end()) it = relabel.emplace(l, static_cast<int>(relabel.size())).first;
      l = it->second;
    }
  }

  std::vector<int> labels_;
};

/// Every block of `finer` lies inside a block of `coarser`.
inline bool refines(const SetPartition& finer, const SetPartition& coarser) {
  if (finer.n() != coarser.n()) return false;
  std::map<int, int> target;
  for (int i = 0; i < finer.n(); ++i) {
    const int f = finer.labels()[static_cast<std::size_t>(i)];
    const int c = coarser.labels()[static_cast<std::size_t>(i)];
    auto [it, inserted] = target.emplace(f, c);
    if (!inserted && it->second != c) return false;
  }
  return true;
}

/// All set partitions of [n] as restricted growth strings, in lexicographic order.
inline std::vector<SetPartition> all_set_partitions(int n) {
  if (n < 1 || n > 12) throw InvalidArgument("set partition enumeration needs 1 <= n <= 12");
  std::vector<SetPartition> out;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i, int max_label) -> void {
    if (i == n) {
      out.push_back(SetPartition::from_labels(rgs));
      return;
    }
    for (int l = 0; l <= max_label + 1; ++l) {
      rgs[static_cast<std::size_t>(i)] = l;
      self(self, i + 1, std::max(max_label, l));
    }
  };
  rgs[0] = 0;
  rec(rec, 1, 0);
  return out;
}

/// S(n,k) by S(n,k) = k S(n-1,k) + S(n-1,k-1).
inline BigInt stirling2(int n, int k) {
  if (n < 0 || k < 0) throw InvalidArgument("stirling2 needs nonnegative arguments");
  if (k > n) return 0;
  std::vector<BigInt> row(static_cast<std::size_t>(k + 1), 0);
  row[0] = 1;  // S(0,0)
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(m, k); j >= 1; --j) row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j)] * j + row[static_cast<std::size_t>(j - 1)];
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(k)];
}

/// (S(n,1), ..., S(n,n)).
inline std::vector<BigInt> stirling2_row(int n) {
  std::vector<BigInt> row;
  for (int k = 1; k <= n; ++k) row.push_back(stirling2(n, k));
  return row;
}

/// (S(n,1), ..., S(n,n)) by counting blocks over all set partitions.
inline std::vector<BigInt> stirling2_row_enumerated(int n) {
  std::vector<BigInt> row(static_cast<std::size_t>(n), 0);
  for (const auto& p : all_set_partitions(n)) ++row[static_cast<std::size_t>(p.block_count() - 1)];
  return row;
}

/// B_n(X) = sum_k S(n,k) X^k.
inline poly::IntPoly touchard_polynomial(int n) {
  std::vector<BigInt> c(static_cast<std::size_t>(n + 1), 0);
  for (int k = 1; k <= n; ++k) c[static_cast<std::size_t>(k)] = stirling2(n, k);
  return poly::IntPoly(std::move(c));
}

/// Set partitions of [n] under refinement; y covers x when y merges two
/// blocks of x. Ranked by block count, which drops by one along each cover.
inline RankedPoset partition_lattice(int n) {
  if (n < 1 || n > 9) throw InvalidArgument("partition_lattice needs 1 <= n <= 9");
  const auto parts = all_set_partitions(n);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < parts.size(); ++i) index.emplace(parts[i].labels(), i);
  RankedPoset p;
  p.size = parts.size();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const int m = parts[i].block_count();
    p.rank.push_back(m);
    p.labels.push_back(parts[i].to_string());
    for (int x = 0; x < m; ++x) {
      for (int y = x + 1; y < m; ++y) {
        auto merged = parts[i].labels();
        for (int& l : merged) {
          if (l == y) l = x;
        }
        p.covers.emplace_back(i, index.at(SetPartition::from_labels(merged).labels()));
      }
    }
  }
  return p;
}

}  // namespace unimodal::poset
