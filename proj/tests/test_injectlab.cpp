#include <gtest/gtest.h>

#include <map>
#include <set>

#include "unimodal/injectlab.hpp"

using unimodal::BigInt;
using namespace unimodal::inject;

namespace {

BoxedPartition bp(std::vector<int> parts, int a, int b) { return {std::move(parts), a, b}; }

// First level k < floor(ab/2) where the rule is undefined or not injective,
// computed without the audit engine.
std::optional<int> naive_first_failure(Rule rule, int a, int b) {
  for (int k = 0; k < (a * b) / 2; ++k) {
    std::set<BoxedPartition> images;
    for (const auto& lambda : level(a, b, k)) {
      const auto out = apply_rule(rule, lambda);
      if (!out.defined() || !images.insert(*out.image).second) return k;
    }
  }
  return std::nullopt;
}

}  // namespace

TEST(Box, Validation) {
  EXPECT_THROW(bp({1, 2}, 2, 2), InvalidPartition);
  EXPECT_THROW(bp({3, 0}, 2, 2), InvalidPartition);
  EXPECT_THROW(bp({1}, 2, 2), InvalidPartition);
  EXPECT_THROW(bp({-1, -1}, 2, 2), InvalidPartition);
  EXPECT_EQ(BoxedPartition::padded({1}, 3, 2), bp({1, 0, 0}, 3, 2));
  EXPECT_EQ(bp({2, 1}, 2, 2).to_string(), "(2,1)");
}

TEST(Box, EnumerateTwoByTwo) {
  const auto all = enumerate_box(2, 2);
  const std::set<BoxedPartition> got(all.begin(), all.end());
  const std::set<BoxedPartition> want{bp({0, 0}, 2, 2), bp({1, 0}, 2, 2), bp({1, 1}, 2, 2),
                                      bp({2, 0}, 2, 2), bp({2, 1}, 2, 2), bp({2, 2}, 2, 2)};
  EXPECT_EQ(got, want);
  EXPECT_EQ(all.size(), 6u);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
}

TEST(Box, Levels) {
  const auto l = level(2, 2, 2);
  EXPECT_EQ(std::set<BoxedPartition>(l.begin(), l.end()), (std::set<BoxedPartition>{bp({2, 0}, 2, 2), bp({1, 1}, 2, 2)}));
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      EXPECT_EQ(level(a, b, 0), std::vector<BoxedPartition>{BoxedPartition::zero(a, b)});
      std::size_t total = 0;
      for (int k = 0; k <= a * b; ++k) total += level(a, b, k).size();
      EXPECT_EQ(BigInt(static_cast<unsigned long>(total)), unimodal::binomial(a + b, a));
    }
  }
  EXPECT_THROW(level(2, 2, 5), unimodal::InvalidArgument);
  EXPECT_THROW(enumerate_box(15, 15, 1000), unimodal::BudgetExceeded);
}

TEST(Box, MatrixAndConjugate) {
  const auto lambda = bp({2, 1}, 2, 3);
  EXPECT_EQ(to_matrix(lambda), (std::vector<std::vector<int>>{{1, 1, 0}, {1, 0, 0}}));
  EXPECT_EQ(conjugate(lambda), bp({2, 1, 0}, 3, 2));

  const auto full = bp({3, 3}, 2, 3);
  EXPECT_EQ(to_matrix(full), (std::vector<std::vector<int>>{{1, 1, 1}, {1, 1, 1}}));
  EXPECT_EQ(conjugate(full), bp({2, 2, 2}, 3, 2));
}

TEST(Box, ConjugateIsAnInvolutionThatTransposes) {
  for (int a = 1; a <= 5; ++a) {
    for (int b = 1; b <= 5; ++b) {
      for (const auto& lambda : enumerate_box(a, b)) {
        const auto theta = conjugate(lambda);
        EXPECT_EQ(conjugate(theta), lambda);
        EXPECT_EQ(theta.weight(), lambda.weight());
        const auto m = to_matrix(lambda);
        const auto t = to_matrix(theta);
        for (int i = 0; i < a; ++i) {
          for (int j = 0; j < b; ++j) EXPECT_EQ(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], t[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
        }
      }
    }
  }
}

TEST(Box, BaseValueIsInjective) {
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      std::set<BigInt> seen;
      for (const auto& lambda : enumerate_box(a, b)) EXPECT_TRUE(seen.insert(base_value(lambda)).second);
    }
  }
  EXPECT_EQ(base_value(bp({1, 1}, 2, 2)), BigInt(4));
  EXPECT_EQ(base_value(bp({2, 0}, 2, 2)), BigInt(6));
}

TEST(Box, SuccessorsMatchBruteForce) {
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      for (const auto& lambda : enumerate_box(a, b)) {
        if (lambda.is_full()) continue;
        std::set<BoxedPartition> brute;
        for (const auto& tau : level(a, b, lambda.weight() + 1)) {
          if (dominated_by(lambda, tau)) brute.insert(tau);
        }
        const auto s = successors(lambda);
        EXPECT_EQ(std::set<BoxedPartition>(s.begin(), s.end()), brute) << lambda.to_string();
      }
    }
  }
}

TEST(Rules, ColumnFillDocumentedImages) {
  EXPECT_EQ(*apply_rule(Rule::ColumnFill, bp({4, 2, 0, 0}, 4, 4)).image, bp({4, 3, 0, 0}, 4, 4));
  EXPECT_EQ(*apply_rule(Rule::ColumnFill, bp({3, 3, 0, 0}, 4, 4)).image, bp({4, 3, 0, 0}, 4, 4));
}

TEST(Rules, MaxWtTieAtLevelOne) {
  const auto out = apply_rule(Rule::MaxWt, bp({1, 0}, 2, 2));
  EXPECT_FALSE(out.defined());
  EXPECT_EQ(std::set<BoxedPartition>(out.tied.begin(), out.tied.end()), (std::set<BoxedPartition>{bp({2, 0}, 2, 2), bp({1, 1}, 2, 2)}));
}

TEST(Rules, MinBaseValuePicksSmallestReading) {
  EXPECT_EQ(*apply_rule(Rule::MinBaseValue, bp({1, 0}, 2, 2)).image, bp({1, 1}, 2, 2));
}

TEST(Rules, ImagesAreSuccessors) {
  for (auto rule : kAllRules) {
    for (int a = 1; a <= 4; ++a) {
      for (int b = 1; b <= 4; ++b) {
        for (const auto& lambda : enumerate_box(a, b)) {
          if (lambda.is_full()) {
            EXPECT_THROW(apply_rule(rule, lambda), NoSuccessor);
            continue;
          }
          const auto out = apply_rule(rule, lambda);
          if (out.defined()) {
            EXPECT_TRUE(dominated_by(lambda, *out.image)) << rule_name(rule) << " " << lambda.to_string();
          }
        }
      }
    }
  }
}

TEST(Audit, DocumentedOutcomes) {
  const auto maxwt = audit(Rule::MaxWt, 2, 2);
  EXPECT_EQ(maxwt.outcome, AuditOutcome::Undefined);
  EXPECT_EQ(maxwt.k, 1);
  EXPECT_EQ(maxwt.witnesses, std::vector<BoxedPartition>{bp({1, 0}, 2, 2)});

  const auto small = audit(Rule::ColumnFill, 2, 2);
  EXPECT_EQ(small.outcome, AuditOutcome::InjectiveUpToMiddle);
  EXPECT_EQ(small.levels_checked, 2);
}

TEST(Audit, ColumnFillFirstFailsBeforeTheDocumentedLevel) {
  // Exhaustive search finds the first collision at k = 4, earlier than the
  // documented k = 2b - 2 = 6; the documented pair does collide at 6.
  const auto r = audit(Rule::ColumnFill, 4, 4);
  EXPECT_EQ(r.outcome, AuditOutcome::Collision);
  EXPECT_EQ(r.k, 4);
  EXPECT_EQ(r.witnesses, (std::vector<BoxedPartition>{bp({3, 1, 0, 0}, 4, 4), bp({4, 0, 0, 0}, 4, 4)}));
  EXPECT_EQ(*r.image, bp({4, 1, 0, 0}, 4, 4));

  const auto c = check_claim(Rule::ColumnFill, 4, 4);
  EXPECT_EQ(c.claimed_k, 6);
  EXPECT_TRUE(c.genuine);
  EXPECT_EQ(c.verdict, ClaimVerdict::DifferentFirstLevel);
}

TEST(Audit, AgreesWithNaiveSearch) {
  for (auto rule : kAllRules) {
    for (int a = 1; a <= 5; ++a) {
      for (int b = 1; b <= 5; ++b) {
        const auto r = audit(rule, a, b);
        const auto naive = naive_first_failure(rule, a, b);
        if (naive) {
          EXPECT_NE(r.outcome, AuditOutcome::InjectiveUpToMiddle) << rule_name(rule) << " " << a << "x" << b;
          EXPECT_EQ(r.k, *naive) << rule_name(rule) << " " << a << "x" << b;
        } else {
          EXPECT_EQ(r.outcome, AuditOutcome::InjectiveUpToMiddle) << rule_name(rule) << " " << a << "x" << b;
        }
        EXPECT_EQ(r.levels_checked, naive ? *naive + 1 : (a * b) / 2);
      }
    }
  }
}

TEST(Audit, CollisionWitnessesShareTheImage) {
  for (auto rule : kAllRules) {
    for (int a = 1; a <= 6; ++a) {
      for (int b = 1; b <= 6; ++b) {
        const auto r = audit(rule, a, b);
        if (r.outcome != AuditOutcome::Collision) continue;
        ASSERT_EQ(r.witnesses.size(), 2u);
        EXPECT_LT(r.witnesses[0], r.witnesses[1]);
        EXPECT_EQ(*apply_rule(rule, r.witnesses[0]).image, *r.image);
        EXPECT_EQ(*apply_rule(rule, r.witnesses[1]).image, *r.image);
      }
    }
  }
}

TEST(Claims, VerdictsUpToSixBySix) {
  for (const auto& c : verify_paper_witnesses(6, 6)) {
    if (c.verdict == ClaimVerdict::NotApplicable) {
      EXPECT_TRUE(c.a < 2 || c.b < 2 || c.claimed_k >= (c.a * c.b) / 2);
      continue;
    }
    switch (c.rule) {
      case Rule::MaxWt:
        EXPECT_EQ(c.verdict, ClaimVerdict::Confirmed) << c.a << "x" << c.b;
        break;
      case Rule::ColumnFill:
        EXPECT_TRUE(c.genuine);
        EXPECT_EQ(c.claimed_k, 2 * c.b - 2);
        EXPECT_EQ(c.audit_report->k, c.b);
        EXPECT_EQ(c.verdict, c.b == 2 ? ClaimVerdict::Confirmed : ClaimVerdict::DifferentFirstLevel);
        break;
      case Rule::RowFillTranspose:
        EXPECT_TRUE(c.genuine);
        EXPECT_EQ(c.audit_report->k, c.a);
        EXPECT_EQ(c.verdict, c.a == 2 ? ClaimVerdict::Confirmed : ClaimVerdict::DifferentFirstLevel);
        break;
      case Rule::MinBaseValue:
        EXPECT_FALSE(c.genuine);
        EXPECT_EQ(c.verdict, ClaimVerdict::NotAFailure) << c.a << "x" << c.b;
        break;
    }
  }
}

TEST(Claims, AuditIsDeterministic) {
  const auto first = verify_paper_witnesses(5, 5);
  const auto second = verify_paper_witnesses(5, 5);
  ASSERT_EQ(first.size(), second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    EXPECT_EQ(first[i].verdict, second[i].verdict);
    EXPECT_EQ(first[i].witnesses, second[i].witnesses);
  }
}
