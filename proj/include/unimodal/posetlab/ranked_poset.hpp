#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "unimodal/bigint.hpp"
#include "unimodal/errors.hpp"

namespace unimodal::poset {

/// Finite poset given by its cover relation, with a rank labelling.
///
/// `covers` holds pairs (x, y) meaning y covers x. `labels` is optional
/// presentation data (one string per element) used by exporters.
struct RankedPoset {
  std::size_t size = 0;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::vector<long> rank;
  std::vector<std::string> labels;
};

inline std::vector<std::vector<std::size_t>> upper_covers(const RankedPoset& p) {
  std::vector<std::vector<std::size_t>> up(p.size);
  for (auto [x, y] : p.covers) up[x].push_back(y);
  return up;
}

/// Kahn order of the cover graph, or nullopt when it has a cycle.
inline std::optional<std::vector<std::size_t>> topological_order(const RankedPoset& p) {
  std::vector<std::size_t> indegree(p.size, 0);
  for (auto [x, y] : p.covers) ++indegree[y];
  const auto up = upper_covers(p);
  std::vector<std::size_t> order;
  order.reserve(p.size);
  std::queue<std::size_t> ready;
  for (std::size_t v = 0; v < p.size; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  while (!ready.empty()) {
    auto v = ready.front();
    ready.pop();
    order.push_back(v);
    for (auto w : up[v]) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  if (order.size() != p.size) return std::nullopt;
  return order;
}

/// True iff rho changes by +1 across every cover or by -1 across every cover.
inline bool is_rank_function(const RankedPoset& p, const std::vector<long>& rho) {
  if (rho.size() != p.size) return false;
  int direction = 0;
  for (auto [x, y] : p.covers) {
    const long step = rho[y] - rho[x];
    if (step != 1 && step != -1) return false;
    if (direction == 0) direction = static_cast<int>(step);
    if (step != direction) return false;
  }
  return true;
}

/// Acyclic covers and a valid rank labelling.
inline bool is_valid_ranked_poset(const RankedPoset& p) {
  return p.rank.size() == p.size && topological_order(p).has_value() && is_rank_function(p, p.rank);
}

/// Number of elements of each rank, with the least rank shifted to index 0.
inline std::vector<BigInt> rank_histogram(const RankedPoset& p) {
  if (p.size == 0) return {};
  const auto [lo, hi] = std::minmax_element(p.rank.begin(), p.rank.end());
  std::vector<BigInt> h(static_cast<std::size_t>(*hi - *lo + 1));
  for (long r : p.rank) ++h[static_cast<std::size_t>(r - *lo)];
  return h;
}

/// x <= y in the order generated by the covers.
inline bool less_equal(const RankedPoset& p, std::size_t x, std::size_t y) {
  if (x == y) return true;
  const auto up = upper_covers(p);
  std::vector<bool> seen(p.size, false);
  std::queue<std::size_t> frontier;
  frontier.push(x);
  seen[x] = true;
  while (!frontier.empty()) {
    auto v = frontier.front();
    frontier.pop();
    for (auto w : up[v]) {
      if (w == y) return true;
      if (!seen[w]) {
        seen[w] = true;
        frontier.push(w);
      }
    }
  }
  return false;
}

/// Number of saturated chains from a minimal element to a maximal element.
inline BigInt count_maximal_chains(const RankedPoset& p) {
  const auto order = topological_order(p);
  if (!order) throw InvalidArgument("cover relation has a cycle");
  std::vector<std::size_t> indegree(p.size, 0);
  for (auto [x, y] : p.covers) ++indegree[y];
  const auto up = upper_covers(p);
  std::vector<BigInt> paths(p.size, 0);
  BigInt total = 0;
  for (auto v : *order) {
    if (indegree[v] == 0) paths[v] = 1;
    if (up[v].empty()) total += paths[v];
    for (auto w : up[v]) paths[w] += paths[v];
  }
  return total;
}

}  // namespace unimodal::poset
