#pragma once

// JSON encodings of the library's values. Big integers are always decimal
// strings so that arbitrary precision survives transport.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "unimodal/injectlab.hpp"
#include "unimodal/pathlab.hpp"
#include "unimodal/polycore.hpp"
#include "unimodal/posetlab.hpp"
#include "unimodal/qgauss.hpp"

namespace unimodal::json {

using nlohmann::json;

inline json big(const BigInt& v) { return v.get_str(); }

inline json big_array(std::span<const BigInt> values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

inline json encode(const poly::IntPoly& f) { return big_array(f.coeffs()); }

/// Accepts an array of decimal strings (or plain JSON integers).
inline poly::IntPoly decode_poly(const json& j) {
  if (!j.is_array()) throw InvalidArgument("polynomial must be a JSON array of decimal strings");
  std::vector<BigInt> c;
  for (const auto& e : j) {
    if (e.is_string()) {
      c.push_back(parse_bigint(e.get<std::string>()));
    } else if (e.is_number_integer()) {
      c.push_back(parse_bigint(e.dump()));
    } else {
      throw InvalidArgument("polynomial coefficient is not an integer: " + e.dump());
    }
  }
  return poly::IntPoly(std::move(c));
}

inline poly::IntPoly decode_poly(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("bad JSON: ") + e.what());
  }
  return decode_poly(j);
}

inline json encode(const poly::GammaVector& g) { return {{"center", g.center}, {"gammas", big_array(g.gammas)}}; }

inline json encode(const inject::BoxedPartition& p) { return p.parts(); }

inline json encode(const inject::AuditReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(encode(w));
  json candidates = json::array();
  for (const auto& c : r.candidates) candidates.push_back(encode(c));
  json out = {
      {"rule", std::string(inject::rule_name(r.rule))},
      {"rule_number", static_cast<int>(r.rule)},
      {"a", r.a},
      {"b", r.b},
      {"outcome", std::string(inject::outcome_name(r.outcome))},
      {"witnesses", witnesses},
      {"levels_checked", r.levels_checked},
  };
  out["k"] = r.k >= 0 ? json(r.k) : json(nullptr);
  out["image"] = r.image ? encode(*r.image) : json(nullptr);
  if (!r.candidates.empty()) out["candidates"] = candidates;
  return out;
}

inline json encode(const inject::ClaimCheck& c) {
  json witnesses = json::array();
  for (const auto& w : c.witnesses) witnesses.push_back(encode(w));
  json images = json::array();
  for (const auto& i : c.images) images.push_back(i ? encode(*i) : json(nullptr));
  json out = {
      {"rule", std::string(inject::rule_name(c.rule))},
      {"rule_number", static_cast<int>(c.rule)},
      {"a", c.a},
      {"b", c.b},
      {"claimed_k", c.claimed_k},
      {"claimed_kind", std::string(inject::outcome_name(c.claimed_kind))},
      {"witnesses", witnesses},
      {"images", images},
      {"genuine", c.genuine},
      {"verdict", std::string(inject::verdict_name(c.verdict))},
  };
  if (c.audit_report) out["audit"] = encode(*c.audit_report);
  return out;
}

inline json encode(const qgauss::KohTerm& t) {
  json factors = json::array();
  for (auto [a, b] : t.factors) factors.push_back({a, b});
  const auto d = t.darga();
  return {
      {"d", t.d.values()},
      {"exponent", t.exponent},
      {"factors", factors},
      {"darga", d ? json(*d) : json(nullptr)},
      {"vanished", t.vanished},
      {"coefficients", encode(t.poly)},
  };
}

inline json encode(const poset::RankedPoset& p) {
  json covers = json::array();
  for (auto [x, y] : p.covers) covers.push_back({x, y});
  json out = {{"size", p.size}, {"rank", p.rank}, {"covers", covers}};
  if (!p.labels.empty()) out["labels"] = p.labels;
  return out;
}

inline json encode(const path::Point& v) { return {v.x, v.y}; }

inline json encode(const path::LatticePath& p) {
  json out = json::array();
  for (const auto& v : p.vertices()) out.push_back(encode(v));
  return out;
}

inline json encode(const path::GridLine& l) {
  return {{"orientation", std::string(path::orientation_name(l.orientation))}, {"offset", l.offset}};
}

/// Reads an antichain given as an array of arrays of elements of [n].
inline std::vector<poset::Subset> decode_family(const json& j, int n) {
  if (!j.is_array()) throw InvalidArgument("family must be a JSON array of arrays");
  std::vector<poset::Subset> out;
  for (const auto& set : j) {
    if (!set.is_array()) throw InvalidArgument("family member must be an array of elements");
    poset::Subset s = 0;
    for (const auto& e : set) {
      if (!e.is_number_integer()) throw InvalidArgument("set element must be an integer");
      const int x = e.get<int>();
      if (x < 1 || x > n) throw InvalidArgument("element " + std::to_string(x) + " is not in [" + std::to_string(n) + "]");
      s |= poset::Subset{1} << (x - 1);
    }
    out.push_back(s);
  }
  return out;
}

inline json encode_family(const std::vector<poset::Subset>& family) {
  json out = json::array();
  for (auto s : family) {
    json set = json::array();
    for (int i = 0; i < 32; ++i) {
      if (s & (poset::Subset{1} << i)) set.push_back(i + 1);
    }
    out.push_back(set);
  }
  return out;
}

}  // namespace unimodal::json
