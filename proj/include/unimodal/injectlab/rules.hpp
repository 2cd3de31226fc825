#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unimodal/injectlab/box.hpp"

namespace unimodal::inject {

class NoSuccessor : public Error {
 public:
  using Error::Error;
};

/// The four candidate maps U_k(a,b) -> U_{k+1}(a,b).
enum class Rule {
  ColumnFill = 1,        // raise the part right after the last full row
  RowFillTranspose = 2,  // ColumnFill conjugated through the transpose
  MinBaseValue = 3,      // dominating successor with the least base-(b+1) value
  MaxWt = 4,             // dominating successor with the greatest max_i i*parts[i]
};

inline constexpr Rule kAllRules[] = {Rule::ColumnFill, Rule::RowFillTranspose, Rule::MinBaseValue, Rule::MaxWt};

inline std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::ColumnFill:
      return "ColumnFill";
    case Rule::RowFillTranspose:
      return "RowFillTranspose";
    case Rule::MinBaseValue:
      return "MinBaseValue";
    case Rule::MaxWt:
      return "MaxWt";
  }
  return "?";
}

inline Rule rule_from_number(int n) {
  if (n < 1 || n > 4) throw InvalidArgument("rule number must be 1..4, got " + std::to_string(n));
  return static_cast<Rule>(n);
}

/// Image of a rule on one input. `image` is empty when the rule is not
/// well defined there; `tied` then lists the candidates sharing the optimum.
struct RuleOutcome {
  std::optional<BoxedPartition> image;
  std::vector<BoxedPartition> tied;

  bool defined() const { return image.has_value(); }
};

namespace detail {

inline BoxedPartition column_fill(const BoxedPartition& lambda) {
  int j = 0;  // 1-based index of the last part equal to b, or 0
  for (int i = 1; i <= lambda.a(); ++i) {
    if (lambda[static_cast<std::size_t>(i - 1)] == lambda.b()) j = i;
  }
  if (j == lambda.a()) throw NoSuccessor("every part of " + lambda.to_string() + " already equals b");
  auto parts = lambda.parts();
  ++parts[static_cast<std::size_t>(j)];
  return {std::move(parts), lambda.a(), lambda.b()};
}

}  // namespace detail

inline RuleOutcome apply_rule(Rule rule, const BoxedPartition& lambda) {
  if (lambda.is_full()) throw NoSuccessor("partition " + lambda.to_string() + " fills its box");
  RuleOutcome out;
  switch (rule) {
    case Rule::ColumnFill:
      out.image = detail::column_fill(lambda);
      break;
    case Rule::RowFillTranspose:
      out.image = conjugate(detail::column_fill(conjugate(lambda)));
      break;
    case Rule::MinBaseValue: {
      // Raising part i adds (b+1)^(a-1-i), so distinct candidates never tie.
      auto cands = successors(lambda);
      std::size_t best = 0;
      BigInt best_value = base_value(cands[0]);
      for (std::size_t i = 1; i < cands.size(); ++i) {
        BigInt v = base_value(cands[i]);
        if (v < best_value) {
          best = i;
          best_value = v;
        }
      }
      out.image = cands[best];
      break;
    }
    case Rule::MaxWt: {
      auto cands = successors(lambda);
      int best = -1;
      for (const auto& c : cands) best = std::max(best, max_weighted_part(c));
      for (const auto& c : cands) {
        if (max_weighted_part(c) == best) out.tied.push_back(c);
      }
      if (out.tied.size() == 1) {
        out.image = out.tied.front();
        out.tied.clear();
      }
      break;
    }
  }
  if (out.image && (out.image->weight() != lambda.weight() + 1 || out.image->a() != lambda.a() ||
                    out.image->b() != lambda.b())) {
    throw std::logic_error("rule " + std::string(rule_name(rule)) + " produced an invalid image of " +
                           lambda.to_string());
  }
  return out;
}

}  // namespace unimodal::inject
