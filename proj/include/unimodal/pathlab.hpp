#pragma once

// Lattice paths, reflection across grid-invariant lines, and path counts.

#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "unimodal/bigint.hpp"
#include "unimodal/errors.hpp"

namespace unimodal::path {

struct Point {
  long x = 0;
  long y = 0;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

class PathMissesLine : public Error {
 public:
  using Error::Error;
};

class ParityViolation : public Error {
 public:
  using Error::Error;
};

/// Sequence of integer points with consecutive points at distance one.
class LatticePath {
 public:
  explicit LatticePath(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw InvalidArgument("a lattice path needs at least one vertex");
    for (std::size_t k = 0; k + 1 < vertices_.size(); ++k) {
      const long dx = std::labs(vertices_[k + 1].x - vertices_[k].x);
      const long dy = std::labs(vertices_[k + 1].y - vertices_[k].y);
      if (dx + dy != 1) throw InvalidArgument("consecutive vertices " + std::to_string(k) + " and " + std::to_string(k + 1) + " are not at unit distance");
    }
  }

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t steps() const { return vertices_.size() - 1; }
  const Point& front() const { return vertices_.front(); }
  const Point& back() const { return vertices_.back(); }

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
  friend auto operator<=>(const LatticePath& p, const LatticePath& q) { return p.vertices_ <=> q.vertices_; }

 private:
  std::vector<Point> vertices_;
};

/// The lines whose reflection maps Z^2 onto itself, each with an integer
/// offset c: horizontal y = c, vertical x = c, diagonal-up x - y = c,
/// diagonal-down x + y = c.
enum class Orientation { Horizontal, Vertical, DiagonalUp, DiagonalDown };

inline std::string_view orientation_name(Orientation o) {
  switch (o) {
    case Orientation::Horizontal:
      return "horizontal";
    case Orientation::Vertical:
      return "vertical";
    case Orientation::DiagonalUp:
      return "diagonal-up";
    case Orientation::DiagonalDown:
      return "diagonal-down";
  }
  return "?";
}

struct GridLine {
  Orientation orientation = Orientation::Horizontal;
  long offset = 0;

  bool contains(const Point& v) const {
    switch (orientation) {
      case Orientation::Horizontal:
        return v.y == offset;
      case Orientation::Vertical:
        return v.x == offset;
      case Orientation::DiagonalUp:
        return v.x - v.y == offset;
      case Orientation::DiagonalDown:
        return v.x + v.y == offset;
    }
    return false;
  }

  friend bool operator==(const GridLine&, const GridLine&) = default;
};

/// Orthogonal reflection across the line.
inline Point reflect_point(const GridLine& line, const Point& v) {
  const long c = line.offset;
  switch (line.orientation) {
    case Orientation::Horizontal:
      return {v.x, 2 * c - v.y};
    case Orientation::Vertical:
      return {2 * c - v.x, v.y};
    case Orientation::DiagonalUp:
      return {v.y + c, v.x - c};
    case Orientation::DiagonalDown:
      return {c - v.y, c - v.x};
  }
  return v;
}

/// Point reflection 2a - v through the point a. This does not fix any line;
/// it is kept alongside reflect_point for comparison.
inline Point reflect_through_point(const Point& a, const Point& v) { return {2 * a.x - v.x, 2 * a.y - v.y}; }

/// Keeps the path through its last vertex on the line and reflects the rest.
inline LatticePath reflect_path(const GridLine& line, const LatticePath& p) {
  const auto& v = p.vertices();
  std::optional<std::size_t> last;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (line.contains(v[k])) last = k;
  }
  if (!last) throw PathMissesLine("path never touches the line");
  std::vector<Point> out(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(*last + 1));
  for (std::size_t k = *last + 1; k < v.size(); ++k) out.push_back(reflect_point(line, v[k]));
  return LatticePath(std::move(out));
}

/// The grid line across which v and w swap, when one exists.
inline std::optional<GridLine> swapping_line(const Point& v, const Point& w) {
  const long sx = v.x + w.x;
  const long sy = v.y + w.y;
  const GridLine candidates[] = {
      {Orientation::Horizontal, sy / 2},
      {Orientation::Vertical, sx / 2},
      {Orientation::DiagonalUp, (sx - sy) / 2},
      {Orientation::DiagonalDown, (sx + sy) / 2},
  };
  for (const auto& line : candidates) {
    if (reflect_point(line, v) == w && reflect_point(line, w) == v && !(v == w)) return line;
  }
  return std::nullopt;
}

/// Paths from (0,0) to (k, n-k) with unit east/north steps.
inline std::vector<LatticePath> monotone_paths(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw InvalidArgument("monotone paths need 0 <= k <= n");
  if (n > 20) throw BudgetExceeded("monotone path enumeration is capped at n = 20");
  std::vector<LatticePath> out;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    if (__builtin_popcountl(mask) != k) continue;
    std::vector<Point> v{{0, 0}};
    for (int s = 0; s < n; ++s) {
      Point next = v.back();
      if (mask & (1UL << s)) {
        ++next.x;
      } else {
        ++next.y;
      }
      v.push_back(next);
    }
    out.emplace_back(std::move(v));
  }
  return out;
}

inline bool is_monotone_path(const LatticePath& p, int n, int k) {
  if (p.steps() != static_cast<std::size_t>(n) || !(p.front() == Point{0, 0}) || !(p.back() == Point{k, n - k})) return false;
  const auto& v = p.vertices();
  for (std::size_t s = 0; s + 1 < v.size(); ++s) {
    const long dx = v[s + 1].x - v[s].x;
    const long dy = v[s + 1].y - v[s].y;
    if (!((dx == 1 && dy == 0) || (dx == 0 && dy == 1))) return false;
  }
  return true;
}

inline BigInt count_monotone(int n, int k) { return static_cast<unsigned long>(monotone_paths(n, k).size()); }

struct InjectionCheck {
  int n = 0;
  int k = 0;
  GridLine line;
  std::size_t source_size = 0;
  std::size_t image_size = 0;  // distinct images
  std::size_t target_size = 0;
  bool images_in_target = false;

  bool injective() const { return images_in_target && image_size == source_size; }
};

/// Reflects every path of T_{n,k} across the bisector swapping (k, n-k) and
/// (k+1, n-k-1) and checks the images are distinct paths of T_{n,k+1}.
inline InjectionCheck monotone_injection(int n, int k) {
  if (n < 1 || k < 0 || 2 * k + 1 > n) throw InvalidArgument("monotone_injection needs 0 <= k and 2k + 1 <= n");
  const Point v{k, n - k};
  const Point w{k + 1, n - k - 1};
  const auto line = swapping_line(v, w);
  if (!line) throw std::logic_error("no grid line swaps the endpoints");
  // Invariance spot check: the line is fixed pointwise and reflection is an involution.
  for (long t = -n; t <= n; ++t) {
    for (const Point& q : {Point{t, 0}, Point{0, t}, Point{t, t}}) {
      if (reflect_point(*line, reflect_point(*line, q)) != q) throw std::logic_error("reflection is not an involution");
      if (line->contains(q) && reflect_point(*line, q) != q) throw std::logic_error("reflection moves a point of its line");
    }
  }

  InjectionCheck r;
  r.n = n;
  r.k = k;
  r.line = *line;
  const auto source = monotone_paths(n, k);
  r.source_size = source.size();
  r.target_size = monotone_paths(n, k + 1).size();
  std::set<LatticePath> images;
  r.images_in_target = true;
  for (const auto& p : source) {
    auto q = reflect_path(*line, p);
    r.images_in_target = r.images_in_target && is_monotone_path(q, n, k + 1);
    images.insert(std::move(q));
  }
  r.image_size = images.size();
  return r;
}

inline void check_free_arguments(long a, long b, long n) {
  if (a < 0 || b < 0 || n < 0) throw InvalidArgument("free path counts need nonnegative a, b, n");
  if ((n - a - b) % 2 != 0) throw ParityViolation("n must have the parity of a + b");
}

/// Walks of n unit steps in the four directions from (0,0) to (a,b), by
/// dynamic programming over the (2n+1)^2 window.
inline BigInt count_free(long a, long b, long n) {
  check_free_arguments(a, b, n);
  if (n > 18) throw BudgetExceeded("free path dynamic program is capped at n = 18");
  const long width = 2 * n + 1;
  auto idx = [&](long x, long y) { return static_cast<std::size_t>((x + n) * width + (y + n)); };
  std::vector<BigInt> cur(static_cast<std::size_t>(width * width), 0);
  cur[idx(0, 0)] = 1;
  for (long step = 0; step < n; ++step) {
    std::vector<BigInt> next(cur.size(), 0);
    for (long x = -n; x <= n; ++x) {
      for (long y = -n; y <= n; ++y) {
        const BigInt& c = cur[idx(x, y)];
        if (c == 0) continue;
        if (x + 1 <= n) next[idx(x + 1, y)] += c;
        if (x - 1 >= -n) next[idx(x - 1, y)] += c;
        if (y + 1 <= n) next[idx(x, y + 1)] += c;
        if (y - 1 >= -n) next[idx(x, y - 1)] += c;
      }
    }
    cur = std::move(next);
  }
  if (a > n || b > n) return 0;
  return cur[idx(a, b)];
}

/// C(n, (n+a-b)/2) C(n, (n-a-b)/2), with C(n,m) = 0 off range.
inline BigInt count_free_closed_form(long a, long b, long n) {
  check_free_arguments(a, b, n);
  return binomial(n, (n + a - b) / 2) * binomial(n, (n - a - b) / 2);
}

/// (C(n,j) C(n,k-j))_{j=0..k}.
inline std::vector<BigInt> sagan_sequence(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw InvalidArgument("sagan_sequence needs 0 <= k <= n");
  std::vector<BigInt> s;
  for (int j = 0; j <= k; ++j) s.push_back(binomial(n, j) * binomial(n, k - j));
  return s;
}

/// For k = 2j the sequence is symmetric about j, so its entry j-1 not
/// exceeding entry j reads C(n,j-1) C(n,j+1) <= C(n,j)^2.
inline bool sagan_middle_inequality(int n, int j) {
  if (j < 1 || 2 * j > n) throw InvalidArgument("middle inequality needs 1 <= j <= n/2");
  const auto s = sagan_sequence(n, 2 * j);
  const bool from_sequence = s[static_cast<std::size_t>(j - 1)] <= s[static_cast<std::size_t>(j)];
  const bool log_concave = binomial(n, j - 1) * binomial(n, j + 1) <= binomial(n, j) * binomial(n, j);
  return from_sequence && log_concave;
}

}  // namespace unimodal::path
