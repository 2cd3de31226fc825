#include <gtest/gtest.h>

#include <random>

#include "unimodal/pathlab.hpp"

using unimodal::BigInt;
using unimodal::binomial;
using namespace unimodal::path;

namespace {

const Orientation kOrientations[] = {Orientation::Horizontal, Orientation::Vertical, Orientation::DiagonalUp, Orientation::DiagonalDown};

LatticePath random_walk(std::mt19937_64& rng, std::size_t steps) {
  static const Point dirs[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  std::vector<Point> v{{0, 0}};
  for (std::size_t s = 0; s < steps; ++s) {
    const Point d = dirs[rng() % 4];
    v.push_back({v.back().x + d.x, v.back().y + d.y});
  }
  return LatticePath(std::move(v));
}

}  // namespace

TEST(LatticePath, Validation) {
  EXPECT_THROW(LatticePath({{0, 0}, {1, 1}}), unimodal::InvalidArgument);
  EXPECT_THROW(LatticePath({{0, 0}, {0, 0}}), unimodal::InvalidArgument);
  EXPECT_THROW(LatticePath(std::vector<Point>{}), unimodal::InvalidArgument);
  EXPECT_EQ(LatticePath({{0, 0}, {0, 1}, {-1, 1}}).steps(), 2u);
}

TEST(Reflection, Examples) {
  EXPECT_EQ(reflect_point({Orientation::DiagonalUp, 0}, {2, 5}), (Point{5, 2}));
  EXPECT_EQ(reflect_point({Orientation::Horizontal, 1}, {3, 5}), (Point{3, -3}));
  EXPECT_EQ(reflect_point({Orientation::Vertical, -2}, {3, 5}), (Point{-7, 5}));
  EXPECT_EQ(reflect_point({Orientation::DiagonalDown, 0}, {2, 5}), (Point{-5, -2}));
  EXPECT_EQ(reflect_point({Orientation::DiagonalUp, 3}, {2, 5}), (Point{8, -1}));
}

TEST(Reflection, InvolutionFixingTheLine) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> coord(-40, 40);
  for (int t = 0; t < 2000; ++t) {
    const GridLine line{kOrientations[t % 4], coord(rng)};
    const Point v{coord(rng), coord(rng)};
    const Point w = reflect_point(line, v);
    EXPECT_EQ(reflect_point(line, w), v);
    EXPECT_EQ(line.contains(v), v == w);
    // the midpoint of v and its image lies on the line (checked at 2x scale)
    const GridLine doubled{line.orientation, 2 * line.offset};
    EXPECT_TRUE(doubled.contains({v.x + w.x, v.y + w.y}));
  }
}

TEST(Reflection, PointReflectionDoesNotFixTheLine) {
  // 2a - v sends points of the diagonal x - y = 0 elsewhere unless v = a.
  const Point a{1, 1};
  EXPECT_EQ(reflect_through_point(a, {3, 3}), (Point{-1, -1}));
  EXPECT_NE(reflect_through_point(a, {3, 3}), reflect_point({Orientation::DiagonalUp, 0}, {3, 3}));
}

TEST(Reflection, PathExamples) {
  const LatticePath p({{0, 0}, {1, 0}, {1, 1}});
  EXPECT_EQ(reflect_path({Orientation::DiagonalUp, 0}, p), p);
  const LatticePath q({{0, 0}, {0, 1}, {0, 2}});
  EXPECT_EQ(reflect_path({Orientation::Horizontal, 1}, q), LatticePath({{0, 0}, {0, 1}, {0, 0}}));
  EXPECT_THROW(reflect_path({Orientation::Vertical, 5}, q), PathMissesLine);
}

TEST(Reflection, PathReflectionIsAnInvolution) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 500; ++t) {
    const LatticePath p = random_walk(rng, 1 + rng() % 12);
    const GridLine line{kOrientations[t % 4], static_cast<long>(rng() % 5) - 2};
    bool touches = false;
    for (const auto& v : p.vertices()) touches = touches || line.contains(v);
    if (!touches) {
      EXPECT_THROW(reflect_path(line, p), PathMissesLine);
      continue;
    }
    const LatticePath r = reflect_path(line, p);
    EXPECT_EQ(r.front(), p.front());
    EXPECT_EQ(r.back(), line.contains(p.back()) ? p.back() : reflect_point(line, p.back()));
    EXPECT_EQ(reflect_path(line, r), p);
  }
}

TEST(Reflection, SwappingLine) {
  const auto line = swapping_line({1, 3}, {2, 2});
  ASSERT_TRUE(line);
  EXPECT_EQ(line->orientation, Orientation::DiagonalUp);
  EXPECT_EQ(line->offset, -1);
  EXPECT_FALSE(swapping_line({0, 0}, {1, 2}));
}

TEST(Monotone, Counts) {
  EXPECT_EQ(count_monotone(4, 2), BigInt(6));
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) EXPECT_EQ(count_monotone(n, k), binomial(n, k));
  }
  EXPECT_THROW(count_monotone(3, 4), unimodal::InvalidArgument);
}

TEST(Monotone, InjectionExamples) {
  const auto four = monotone_injection(4, 1);
  EXPECT_EQ(four.source_size, 4u);
  EXPECT_EQ(four.image_size, 4u);
  EXPECT_EQ(four.target_size, 6u);
  EXPECT_TRUE(four.injective());
  const auto five = monotone_injection(5, 2);
  EXPECT_EQ(five.source_size, 10u);
  EXPECT_EQ(five.image_size, 10u);
  EXPECT_EQ(five.target_size, 10u);
  EXPECT_TRUE(five.injective());
  EXPECT_THROW(monotone_injection(4, 2), unimodal::InvalidArgument);
}

TEST(Monotone, BisectorIsTheDiagonalThroughTheSwap) {
  for (int n = 1; n <= 12; ++n) {
    for (int k = 0; 2 * k + 1 <= n; ++k) {
      const auto r = monotone_injection(n, k);
      EXPECT_EQ(r.line.orientation, Orientation::DiagonalUp);
      EXPECT_EQ(r.line.offset, 2 * k + 1 - n);
      EXPECT_TRUE(r.injective()) << n << "," << k;
    }
  }
}

TEST(FreePaths, Examples) {
  EXPECT_EQ(count_free(1, 1, 2), BigInt(2));
  EXPECT_EQ(count_free(2, 2, 4), BigInt(6));
  EXPECT_EQ(count_free(1, 2, 3), BigInt(3));
  EXPECT_EQ(count_free_closed_form(2, 2, 4), BigInt(6));
  EXPECT_EQ(count_free(0, 0, 2), BigInt(4));
  EXPECT_THROW(count_free(1, 1, 3), ParityViolation);
  EXPECT_THROW(count_free_closed_form(1, 2, 2), ParityViolation);
  EXPECT_THROW(count_free(1, 1, 20), unimodal::BudgetExceeded);
}

TEST(FreePaths, DynamicProgramMatchesClosedForm) {
  for (long a = 0; a <= 6; ++a) {
    for (long b = 0; b <= 6; ++b) {
      for (long n = (a + b) % 2; n <= 14; n += 2) EXPECT_EQ(count_free(a, b, n), count_free_closed_form(a, b, n)) << a << "," << b << "," << n;
    }
  }
  EXPECT_EQ(count_free(5, 0, 3), BigInt(0));  // out of reach in 3 steps
  EXPECT_EQ(count_free_closed_form(5, 0, 3), BigInt(0));
}

TEST(Sagan, Examples) {
  EXPECT_EQ(sagan_sequence(4, 4), (std::vector<BigInt>{1, 16, 36, 16, 1}));
  EXPECT_EQ(sagan_sequence(3, 0), (std::vector<BigInt>{1}));
  EXPECT_EQ(sagan_sequence(4, 2), (std::vector<BigInt>{6, 16, 6}));
  EXPECT_TRUE(sagan_middle_inequality(4, 1));
  EXPECT_THROW(sagan_sequence(3, 4), unimodal::InvalidArgument);
}

TEST(Sagan, UnimodalAndSymmetric) {
  for (int n = 0; n <= 20; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto s = sagan_sequence(n, k);
      EXPECT_TRUE(unimodal::is_unimodal_sequence(s));
      EXPECT_TRUE(std::equal(s.begin(), s.end(), s.rbegin()));
    }
    for (int j = 1; 2 * j <= n; ++j) EXPECT_TRUE(sagan_middle_inequality(n, j));
  }
}
