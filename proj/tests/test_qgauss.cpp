#include <gtest/gtest.h>

#include <set>

#include "unimodal/polycore.hpp"
#include "unimodal/qgauss.hpp"

using unimodal::BigInt;
using unimodal::binomial;
using namespace unimodal::qgauss;
using unimodal::poly::IntPoly;

TEST(QInt, Examples) {
  EXPECT_EQ(q_int(3), IntPoly({1, 1, 1}));
  EXPECT_TRUE(q_int(0).is_zero());
  EXPECT_EQ(q_factorial(3), IntPoly({1, 2, 2, 1}));
  EXPECT_EQ(q_factorial(0), IntPoly({1}));
  EXPECT_EQ(q_factorial(4).eval(1), BigInt(24));
}

TEST(Gaussian, QuotientExamples) {
  EXPECT_EQ(gaussian_quotient(2, 2), IntPoly({1, 1, 2, 1, 1}));
  for (long a = 0; a < 5; ++a) EXPECT_EQ(gaussian_quotient(a, 0), IntPoly({1}));
  EXPECT_EQ(gaussian_quotient(3, 2).eval(1), BigInt(10));
}

TEST(Gaussian, PascalExamples) {
  EXPECT_EQ(gaussian_pascal(1, 1), IntPoly({1, 1}));
  EXPECT_EQ(gaussian_pascal(2, 2), IntPoly({1, 1, 2, 1, 1}));
  EXPECT_EQ(gaussian_pascal(0, 5), IntPoly({1}));
}

TEST(Gaussian, EnumerationExamples) {
  EXPECT_EQ(gaussian_enumerated(2, 2), IntPoly({1, 1, 2, 1, 1}));
  for (int b = 0; b < 7; ++b) EXPECT_EQ(gaussian_enumerated(1, b), IntPoly(std::vector<BigInt>(static_cast<std::size_t>(b + 1), 1)));
  EXPECT_EQ(gaussian_enumerated(3, 3).coefficient_sum(), BigInt(20));
  EXPECT_THROW(gaussian_enumerated(12, 12, 1000), unimodal::BudgetExceeded);
}

TEST(Gaussian, RoutesAgreeIncludingZeroSides) {
  for (long a = 0; a <= 8; ++a) {
    for (long b = 0; b <= 8; ++b) {
      const IntPoly q = gaussian_quotient(a, b);
      EXPECT_EQ(q, gaussian_pascal(a, b)) << a << "x" << b;
      EXPECT_EQ(q, gaussian_enumerated(static_cast<int>(a), static_cast<int>(b))) << a << "x" << b;
    }
  }
}

TEST(Gaussian, Invariants) {
  for (long a = 0; a <= 8; ++a) {
    for (long b = 0; b <= 8; ++b) {
      const IntPoly g = gaussian_quotient(a, b);
      EXPECT_EQ(g, gaussian_quotient(b, a));
      EXPECT_EQ(g.eval(1), binomial(a + b, a));
      EXPECT_TRUE(unimodal::poly::is_palindromic(g, a * b));
      EXPECT_TRUE(unimodal::poly::is_unimodal(g));
    }
  }
}

TEST(Gaussian, PascalRecurrenceBothWays) {
  for (long a = 1; a <= 7; ++a) {
    for (long b = 1; b <= 7; ++b) {
      EXPECT_EQ(gaussian_quotient(a, b), gaussian_quotient(a - 1, b) + gaussian_quotient(a, b - 1).shifted(static_cast<std::size_t>(a)));
      EXPECT_EQ(gaussian_quotient(a, b), gaussian_quotient(a, b - 1) + gaussian_quotient(a - 1, b).shifted(static_cast<std::size_t>(b)));
    }
  }
}

TEST(Gaussian, QBinomialRowsAreLogConcaveForIntegerQ) {
  for (long n = 0; n <= 12; ++n) {
    for (long q = 1; q <= 4; ++q) {
      const auto row = q_binomial_row(n, q);
      for (std::size_t k = 1; k + 1 < row.size(); ++k) EXPECT_GE(row[k] * row[k], row[k - 1] * row[k + 1]) << n << " q=" << q;
    }
  }
  EXPECT_EQ(q_binomial_row(4, 1), (std::vector<BigInt>{1, 4, 6, 4, 1}));
}

TEST(Koh, MultiplicityVectors) {
  auto as_set = [](int b) {
    std::set<std::vector<int>> s;
    for (const auto& d : koh_multiplicity_vectors(b)) s.insert(d.values());
    return s;
  };
  EXPECT_EQ(as_set(3), (std::set<std::vector<int>>{{3, 0, 0}, {1, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(as_set(1), (std::set<std::vector<int>>{{1}}));
  EXPECT_EQ(koh_multiplicity_vectors(5).size(), 7u);
  EXPECT_EQ(koh_multiplicity_vectors(8).size(), 22u);
  EXPECT_THROW(MultiplicityVector({1, 1}), unimodal::InvalidArgument);
}

TEST(Koh, AllOnesTermExponent) {
  for (int b = 1; b <= 6; ++b) {
    std::vector<int> d(static_cast<std::size_t>(b), 0);
    d[0] = b;
    EXPECT_EQ(calibrated_rule().exponent(b, MultiplicityVector(d)), static_cast<long>(b) * (b - 1));
    // the only nontrivial factor is G_{a-2(b-1), b}
    const long a = 12;
    EXPECT_EQ(calibrated_rule().argument(a, b, b - 1, MultiplicityVector(d)), a - 2 * (b - 1));
  }
}

TEST(Koh, WidthOneBox) {
  for (long a = 1; a <= 8; ++a) {
    const auto e = koh_sum(a, 1, calibrated_rule());
    ASSERT_EQ(e.terms.size(), 1u);
    EXPECT_EQ(e.total, gaussian_quotient(a, 1));
  }
}

TEST(Koh, CalibratedFourByTwo) {
  EXPECT_EQ(koh_sum(4, 2, calibrated_rule()).total, IntPoly({1, 1, 2, 2, 3, 2, 2, 1, 1}));
}

TEST(Koh, StatedRuleDoesNotReproduceSmallBoxes) {
  EXPECT_NE(koh_agreement(1, 2, stated_rule()), KohVerdict::Agrees);
  EXPECT_EQ(koh_agreement(1, 3, stated_rule()), KohVerdict::NegativeArgument);
}

TEST(Koh, CalibrationChoosesTheFirstAgreeingCandidate) {
  const auto c = calibrate();
  ASSERT_FALSE(c.chosen.empty());
  EXPECT_EQ(c.chosen, calibrated_rule().name);
  ASSERT_EQ(c.trials.size(), candidate_rules().size());
  for (const auto& [name, failure] : c.trials) {
    if (name == c.chosen) {
      EXPECT_FALSE(failure.has_value());
      break;
    }
    EXPECT_TRUE(failure.has_value()) << name;
  }
}

TEST(Koh, CalibratedAgreesBeyondTheCalibrationRange) {
  for (long a = 1; a <= 9; ++a) {
    for (long b = 1; b <= 9; ++b) EXPECT_EQ(koh_sum(a, b, calibrated_rule()).total, gaussian_quotient(a, b)) << a << "x" << b;
  }
}

TEST(Koh, TermsAreDargaPalindromicWithDargaAb) {
  for (long a = 1; a <= 8; ++a) {
    for (long b = 1; b <= 8; ++b) {
      for (const auto& t : koh_sum(a, b, calibrated_rule()).terms) {
        if (t.vanished) {
          EXPECT_TRUE(t.poly.is_zero());
          continue;
        }
        ASSERT_TRUE(t.darga().has_value());
        EXPECT_EQ(*t.darga(), a * b) << a << "x" << b << " d=" << t.d.to_string();
        EXPECT_TRUE(unimodal::poly::is_darga_palindromic(t.poly));
        EXPECT_TRUE(unimodal::poly::is_unimodal(t.poly));
      }
    }
  }
}
