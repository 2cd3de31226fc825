#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unimodal/polycore/properties.hpp"
#include "unimodal/qgauss/gaussian.hpp"

namespace unimodal::qgauss {

/// (d_1, ..., d_b) with sum_i i d_i = b: the part multiplicities of a
/// partition of b.
class MultiplicityVector {
 public:
  explicit MultiplicityVector(std::vector<int> d) : d_(std::move(d)) {
    long total = 0;
    for (std::size_t i = 0; i < d_.size(); ++i) {
      if (d_[i] < 0) throw InvalidArgument("multiplicities must be nonnegative");
      total += static_cast<long>(i + 1) * d_[i];
    }
    if (d_.empty() || total != static_cast<long>(d_.size())) {
      throw InvalidArgument("multiplicity vector " + to_string() + " does not satisfy sum i*d_i = b");
    }
  }

  int b() const { return static_cast<int>(d_.size()); }

  /// d_i for 1 <= i <= b.
  int operator()(int i) const { return d_[static_cast<std::size_t>(i - 1)]; }

  const std::vector<int>& values() const { return d_; }

  long part_count() const {
    long s = 0;
    for (int x : d_) s += x;
    return s;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < d_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(d_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;
  friend auto operator<=>(const MultiplicityVector& x, const MultiplicityVector& y) { return x.d_ <=> y.d_; }

 private:
  std::vector<int> d_;
};

/// Every multiplicity vector for b, ordered by decreasing d_1 then d_2, ...
inline std::vector<MultiplicityVector> koh_multiplicity_vectors(int b) {
  if (b < 1) throw InvalidArgument("koh_multiplicity_vectors needs b >= 1");
  std::vector<MultiplicityVector> out;
  std::vector<int> d(static_cast<std::size_t>(b), 0);
  std::function<void(int, int)> rec = [&](int i, int remaining) {
    if (i > b) {
      if (remaining == 0) out.emplace_back(d);
      return;
    }
    for (int m = remaining / i; m >= 0; --m) {
      d[static_cast<std::size_t>(i - 1)] = m;
      rec(i + 1, remaining - m * i);
    }
    d[static_cast<std::size_t>(i - 1)] = 0;
  };
  rec(1, b);
  return out;
}

class KohArgumentError : public Error {
 public:
  enum class Kind { NegativeArgument, NegativeExponent };

  KohArgumentError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// What to do with a factor G_{a_i,b_i} whose a_i is negative while b_i > 0.
enum class NegativeArgumentPolicy {
  Reject,  // raise KohArgumentError
  Vanish,  // the box has negative width and holds no partitions: the factor is 0
};

/// Exponent and factor-argument formulas for assembling KOH terms. Factor i
/// (0 <= i < b) is G_{argument(a,b,i,d), d_{b-i}}.
struct KohRule {
  std::string name;
  std::function<long(long a, long b, long i, const MultiplicityVector& d)> argument;
  std::function<long(long b, const MultiplicityVector& d)> exponent;
  NegativeArgumentPolicy policy = NegativeArgumentPolicy::Reject;
};

namespace detail {

// sum_{j=0}^{i-1} 2 (i-j) d_{b-j}
inline long tail_correction(long b, long i, const MultiplicityVector& d) {
  long s = 0;
  for (long j = 0; j < i; ++j) s += 2 * (i - j) * d(static_cast<int>(b - j));
  return s;
}

// b * sum d_i - b - sum_{i<j} (j-i) d_i d_j
inline long stated_exponent(long b, const MultiplicityVector& d) {
  long cross = 0;
  for (long i = 1; i <= b; ++i) {
    for (long j = i + 1; j <= b; ++j) cross += (j - i) * d(static_cast<int>(i)) * d(static_cast<int>(j));
  }
  return b * d.part_count() - b - cross;
}

}  // namespace detail

/// Formulas exactly as printed: a_i = (b-i) b - 2i + sum_{j<i} 2(i-j) d_{b-j}.
/// The box width a does not occur in them.
inline KohRule stated_rule() {
  return {"stated",
          [](long, long b, long i, const MultiplicityVector& d) { return (b - i) * b - 2 * i + detail::tail_correction(b, i, d); },
          detail::stated_exponent, NegativeArgumentPolicy::Reject};
}

/// Candidate corrections, tried in order by calibrate().
inline std::vector<KohRule> candidate_rules() {
  auto width_only = [](long a, long b, long i, const MultiplicityVector& d) {
    return a - 2 * i + detail::tail_correction(b, i, d);
  };
  auto scaled_width = [](long a, long b, long i, const MultiplicityVector& d) {
    return (b - i) * a - 2 * i + detail::tail_correction(b, i, d);
  };
  return {
      {"width-only", width_only, detail::stated_exponent, NegativeArgumentPolicy::Reject},
      {"width-only/vanish", width_only, detail::stated_exponent, NegativeArgumentPolicy::Vanish},
      {"scaled-width", scaled_width, detail::stated_exponent, NegativeArgumentPolicy::Reject},
      {"scaled-width/vanish", scaled_width, detail::stated_exponent, NegativeArgumentPolicy::Vanish},
  };
}

/// One summand X^exponent * prod_i G_{a_i,b_i}. Factors with b_i = 0 are the
/// constant 1 and are omitted from `factors`; `vanished` marks a summand
/// killed by a negative-width factor under the Vanish policy.
struct KohTerm {
  MultiplicityVector d;
  long exponent = 0;
  std::vector<std::pair<long, long>> factors;
  IntPoly poly;
  bool vanished = false;

  std::optional<long> darga() const {
    if (poly.is_zero()) return std::nullopt;
    return poly::darga(poly);
  }
};

struct KohExpansion {
  IntPoly total;
  std::vector<KohTerm> terms;
};

class GaussianCache {
 public:
  const IntPoly& get(long a, long b) {
    auto key = std::make_pair(a, b);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, gaussian_pascal(a, b)).first;
    return it->second;
  }

 private:
  std::map<std::pair<long, long>, IntPoly> cache_;
};

inline KohExpansion koh_sum(long a, long b, const KohRule& rule) {
  if (a < 1 || b < 1) throw InvalidArgument("koh_sum needs a, b >= 1");
  KohExpansion out;
  GaussianCache cache;
  for (const auto& d : koh_multiplicity_vectors(static_cast<int>(b))) {
    KohTerm term{d, 0, {}, IntPoly{}, false};
    term.exponent = rule.exponent(b, d);
    if (term.exponent < 0) {
      throw KohArgumentError(KohArgumentError::Kind::NegativeExponent,
                             "rule " + rule.name + " gives exponent " + std::to_string(term.exponent) + " for d=" + d.to_string());
    }
    IntPoly product = IntPoly::monomial(static_cast<std::size_t>(term.exponent));
    for (long i = 0; i < b; ++i) {
      const long bi = d(static_cast<int>(b - i));
      if (bi == 0) continue;
      const long ai = rule.argument(a, b, i, d);
      term.factors.emplace_back(ai, bi);
      if (ai < 0) {
        if (rule.policy == NegativeArgumentPolicy::Reject) {
          throw KohArgumentError(KohArgumentError::Kind::NegativeArgument,
                                 "rule " + rule.name + " gives factor G_{" + std::to_string(ai) + "," + std::to_string(bi) +
                                     "} for d=" + d.to_string() + " in box " + std::to_string(a) + "x" + std::to_string(b));
        }
        term.vanished = true;
        continue;
      }
      product *= cache.get(ai, bi);
    }
    term.poly = term.vanished ? IntPoly{} : std::move(product);
    out.total += term.poly;
    out.terms.push_back(std::move(term));
  }
  return out;
}

enum class KohVerdict { Agrees, Disagrees, NegativeArgument, NegativeExponent };

inline std::string_view verdict_name(KohVerdict v) {
  switch (v) {
    case KohVerdict::Agrees:
      return "Agrees";
    case KohVerdict::Disagrees:
      return "Disagrees";
    case KohVerdict::NegativeArgument:
      return "NegativeArgument";
    case KohVerdict::NegativeExponent:
      return "NegativeExponent";
  }
  return "?";
}

/// Compares koh_sum under `rule` with the enumerated level counts.
inline KohVerdict koh_agreement(long a, long b, const KohRule& rule) {
  try {
    const auto expansion = koh_sum(a, b, rule);
    return expansion.total == gaussian_enumerated(static_cast<int>(a), static_cast<int>(b)) ? KohVerdict::Agrees
                                                                                             : KohVerdict::Disagrees;
  } catch (const KohArgumentError& e) {
    return e.kind() == KohArgumentError::Kind::NegativeArgument ? KohVerdict::NegativeArgument
                                                                : KohVerdict::NegativeExponent;
  }
}

struct CalibrationResult {
  std::string chosen;
  // For each candidate in order, the first box (a,b) where it failed, if any.
  std::vector<std::pair<std::string, std::optional<std::pair<long, long>>>> trials;
};

/// Picks the first candidate rule whose sums agree with enumeration on every
/// box 1 <= a <= amax, 1 <= b <= bmax.
inline CalibrationResult calibrate(long amax = 6, long bmax = 6) {
  CalibrationResult result;
  for (const auto& rule : candidate_rules()) {
    std::optional<std::pair<long, long>> failure;
    for (long a = 1; a <= amax && !failure; ++a) {
      for (long b = 1; b <= bmax && !failure; ++b) {
        if (koh_agreement(a, b, rule) != KohVerdict::Agrees) failure = std::make_pair(a, b);
      }
    }
    result.trials.emplace_back(rule.name, failure);
    if (!failure) {
      result.chosen = rule.name;
      return result;
    }
  }
  return result;
}

/// The calibrated rule; calibration runs once per process.
inline const KohRule& calibrated_rule() {
  static const KohRule rule = [] {
    const auto result = calibrate();
    for (auto& r : candidate_rules()) {
      if (r.name == result.chosen) return r;
    }
    throw std::logic_error("no candidate KOH rule agrees with enumeration");
  }();
  return rule;
}

}  // namespace unimodal::qgauss
