#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unimodal/injectlab/box.hpp"
#include "unimodal/injectlab/rules.hpp"

namespace unimodal::inject {

enum class AuditOutcome { InjectiveUpToMiddle, Collision, Undefined };

inline std::string_view outcome_name(AuditOutcome o) {
  switch (o) {
    case AuditOutcome::InjectiveUpToMiddle:
      return "InjectiveUpToMiddle";
    case AuditOutcome::Collision:
      return "Collision";
    case AuditOutcome::Undefined:
      return "Undefined";
  }
  return "?";
}

/// Result of checking one rule on every level k < floor(ab/2) of one box.
///
/// Collision: `witnesses` holds two distinct partitions of level `k`, in
/// enumeration order, that share `image`. Undefined: `witnesses` holds the
/// first input of level `k` without a unique image and `candidates` the tie.
struct AuditReport {
  Rule rule = Rule::ColumnFill;
  int a = 0;
  int b = 0;
  AuditOutcome outcome = AuditOutcome::InjectiveUpToMiddle;
  int k = -1;
  std::vector<BoxedPartition> witnesses;
  std::optional<BoxedPartition> image;
  std::vector<BoxedPartition> candidates;
  int levels_checked = 0;
};

inline AuditReport audit(Rule rule, int a, int b, std::uint64_t budget = kDefaultBoxBudget) {
  check_box_budget(a, b, budget);
  AuditReport report;
  report.rule = rule;
  report.a = a;
  report.b = b;
  const int middle = (a * b) / 2;
  for (int k = 0; k < middle; ++k) {
    ++report.levels_checked;
    const auto inputs = level(a, b, k, budget);
    std::map<BoxedPartition, const BoxedPartition*> first_preimage;
    std::optional<AuditReport> collision;
    for (const auto& lambda : inputs) {
      RuleOutcome out = apply_rule(rule, lambda);
      if (!out.defined()) {
        report.outcome = AuditOutcome::Undefined;
        report.k = k;
        report.witnesses = {lambda};
        report.candidates = std::move(out.tied);
        return report;
      }
      auto [it, inserted] = first_preimage.emplace(*out.image, &lambda);
      if (!inserted && !collision) {
        collision = report;
        collision->outcome = AuditOutcome::Collision;
        collision->k = k;
        collision->witnesses = {*it->second, lambda};
        collision->image = *out.image;
      }
    }
    if (collision) return *collision;
  }
  return report;
}

/// How a documented failure claim fares against the exhaustive audit.
enum class ClaimVerdict {
  Confirmed,            // the claimed witnesses fail, at the audit's first failing level
  DifferentFirstLevel,  // the claimed witnesses fail, but the audit fails first elsewhere
  NotAFailure,          // the claimed witnesses do not fail under the rule as defined
  NotApplicable,        // the claim does not fit in this box or lies at/above the middle
};

inline std::string_view verdict_name(ClaimVerdict v) {
  switch (v) {
    case ClaimVerdict::Confirmed:
      return "Confirmed";
    case ClaimVerdict::DifferentFirstLevel:
      return "DifferentFirstLevel";
    case ClaimVerdict::NotAFailure:
      return "NotAFailure";
    case ClaimVerdict::NotApplicable:
      return "NotApplicable";
  }
  return "?";
}

struct ClaimCheck {
  Rule rule = Rule::ColumnFill;
  int a = 0;
  int b = 0;
  int claimed_k = -1;
  AuditOutcome claimed_kind = AuditOutcome::Collision;
  std::vector<BoxedPartition> witnesses;
  std::vector<std::optional<BoxedPartition>> images;
  bool genuine = false;  // the claimed witnesses really fail at the claimed level
  ClaimVerdict verdict = ClaimVerdict::NotApplicable;
  std::optional<AuditReport> audit_report;
};

namespace detail {

// Claimed failure witnesses for each rule in box (a,b); empty when the
// claimed shapes do not exist there.
inline std::optional<ClaimCheck> documented_claim(Rule rule, int a, int b) {
  ClaimCheck c;
  c.rule = rule;
  c.a = a;
  c.b = b;
  switch (rule) {
    case Rule::ColumnFill:
      if (a < 2 || b < 2) return std::nullopt;
      c.claimed_k = 2 * b - 2;
      c.witnesses = {BoxedPartition::padded({b, b - 2}, a, b), BoxedPartition::padded({b - 1, b - 1}, a, b)};
      break;
    case Rule::RowFillTranspose:
      // The shapes are given in the transposed (b,a) box.
      if (a < 2 || b < 2) return std::nullopt;
      c.claimed_k = 2 * a - 2;
      c.witnesses = {conjugate(BoxedPartition::padded({a, a - 2}, b, a)),
                     conjugate(BoxedPartition::padded({a - 1, a - 1}, b, a))};
      break;
    case Rule::MinBaseValue:
      if (a < 2 || b < 2) return std::nullopt;
      c.claimed_k = b;
      c.witnesses = {BoxedPartition::padded({b}, a, b), BoxedPartition::padded({b - 1, 1}, a, b)};
      break;
    case Rule::MaxWt:
      if (a < 2 || b < 2) return std::nullopt;
      c.claimed_k = 1;
      c.claimed_kind = AuditOutcome::Undefined;
      c.witnesses = {BoxedPartition::padded({1}, a, b)};
      break;
  }
  return c;
}

}  // namespace detail

/// Checks one rule's documented failure claim in one box against the audit.
inline ClaimCheck check_claim(Rule rule, int a, int b, std::uint64_t budget = kDefaultBoxBudget) {
  auto claim = detail::documented_claim(rule, a, b);
  if (!claim) {
    ClaimCheck none;
    none.rule = rule;
    none.a = a;
    none.b = b;
    return none;
  }
  ClaimCheck c = std::move(*claim);
  if (c.claimed_k >= (a * b) / 2) {
    c.verdict = ClaimVerdict::NotApplicable;
    return c;
  }
  for (const auto& w : c.witnesses) c.images.push_back(apply_rule(rule, w).image);

  bool on_level = true;
  for (const auto& w : c.witnesses) on_level = on_level && w.weight() == c.claimed_k;
  if (c.claimed_kind == AuditOutcome::Undefined) {
    c.genuine = on_level && !c.images[0].has_value();
  } else {
    c.genuine = on_level && c.witnesses[0] != c.witnesses[1] && c.images[0] && c.images[1] &&
                *c.images[0] == *c.images[1];
  }
  c.audit_report = audit(rule, a, b, budget);
  if (!c.genuine) {
    c.verdict = ClaimVerdict::NotAFailure;
  } else if (c.audit_report->outcome == c.claimed_kind && c.audit_report->k == c.claimed_k) {
    c.verdict = ClaimVerdict::Confirmed;
  } else {
    c.verdict = ClaimVerdict::DifferentFirstLevel;
  }
  return c;
}

/// Every rule's documented claim over all boxes 1 <= a <= amax, 1 <= b <= bmax.
inline std::vector<ClaimCheck> verify_paper_witnesses(int amax = 6, int bmax = 6,
                                                      std::uint64_t budget = kDefaultBoxBudget) {
  std::vector<ClaimCheck> out;
  for (Rule rule : kAllRules) {
    for (int a = 1; a <= amax; ++a) {
      for (int b = 1; b <= bmax; ++b) out.push_back(check_claim(rule, a, b, budget));
    }
  }
  return out;
}

}  // namespace unimodal::inject
