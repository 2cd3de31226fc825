// Command-line front end. Every subcommand prints one JSON report:
//   {"v":1, "command":..., "inputs":{...}, "outcome":..., "artifacts":{...}}
// Exit codes: 0 success, 1 a checked property is false, 2 usage or bad input,
// 3 budget exceeded.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <unistd.h>

#include "CLI11.hpp"
#include "unimodal/acceptance.hpp"

using nlohmann::json;
namespace enc = unimodal::json;
namespace poly = unimodal::poly;
namespace qg = unimodal::qgauss;
namespace inj = unimodal::inject;
namespace ps = unimodal::poset;
namespace pth = unimodal::path;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Report {
  std::string command;
  json inputs = json::object();
  std::string outcome = "value";  // pass | fail | value
  json artifacts = json::object();

  int exit_code() const { return outcome == "fail" ? kExitFalse : kExitOk; }
};

struct Globals {
  std::uint64_t budget = inj::kDefaultBoxBudget;
  bool timing = false;
  bool table = false;
};

std::string pass_fail(bool ok) { return ok ? "pass" : "fail"; }

// ---- gauss ----------------------------------------------------------------

struct GaussArgs {
  long a = 0;
  long b = 0;
  std::string method = "quotient";
  std::string koh_rule = "calibrated";
  bool terms = false;
};

Report run_gauss(const GaussArgs& g, const Globals& glob) {
  Report r{"gauss"};
  r.inputs = {{"a", g.a}, {"b", g.b}, {"method", g.method}};
  if (g.a < 0 || g.b < 0) throw unimodal::InvalidArgument("a and b must be nonnegative");
  poly::IntPoly result;
  if (g.method == "quotient") {
    result = qg::gaussian_quotient(g.a, g.b);
  } else if (g.method == "pascal") {
    result = qg::gaussian_pascal(g.a, g.b);
  } else if (g.method == "enum") {
    result = qg::gaussian_enumerated(static_cast<int>(g.a), static_cast<int>(g.b), glob.budget);
  } else {
    r.inputs["koh_rule"] = g.koh_rule;
    const qg::KohRule rule = g.koh_rule == "stated" ? qg::stated_rule() : qg::calibrated_rule();
    r.artifacts["rule"] = rule.name;
    try {
      const auto expansion = qg::koh_sum(g.a, g.b, rule);
      result = expansion.total;
      if (g.terms) {
        json terms = json::array();
        for (const auto& t : expansion.terms) terms.push_back(enc::encode(t));
        r.artifacts["terms"] = terms;
      }
      r.artifacts["agreement"] = std::string(qg::verdict_name(qg::koh_agreement(g.a, g.b, rule)));
      r.outcome = pass_fail(result == qg::gaussian_quotient(g.a, g.b));
    } catch (const qg::KohArgumentError& e) {
      r.outcome = "fail";
      r.artifacts["error"] = e.what();
      return r;
    }
  }
  r.artifacts["coeffs"] = enc::encode(result);
  return r;
}

// ---- check ----------------------------------------------------------------

struct CheckArgs {
  std::string coeffs;
  std::optional<long> center;
  bool unimodal = false;
  bool log_concave = false;
  bool palindromic = false;
  bool gamma = false;
  bool real_rooted = false;
};

Report run_check(CheckArgs c) {
  Report r{"check"};
  const poly::IntPoly f = enc::decode_poly(c.coeffs);
  r.inputs = {{"coeffs", enc::encode(f)}};
  if (!(c.unimodal || c.log_concave || c.palindromic || c.gamma || c.real_rooted)) {
    c.unimodal = c.log_concave = c.palindromic = c.gamma = true;
    c.real_rooted = !f.is_zero();
  }
  const long n = c.center.value_or(std::max(0L, f.degree()));
  if (c.center) r.inputs["center"] = *c.center;

  bool all = true;
  auto note = [&](const char* key, bool value) {
    r.artifacts[key] = value;
    all = all && value;
  };
  if (c.unimodal) note("unimodal", poly::is_unimodal(f));
  if (const auto m = poly::mode(f)) {
    r.artifacts["mode"] = *m;
  } else {
    r.artifacts["mode"] = nullptr;
  }
  if (c.log_concave) note("log_concave", poly::is_log_concave(f));
  if (c.palindromic) note("palindromic", poly::is_palindromic(f, n));
  if (c.gamma) {
    if (poly::is_palindromic(f, n)) {
      const auto g = poly::gamma_decompose(f, n);
      r.artifacts["gamma_vector"] = enc::encode(g);
      note("gamma_nonnegative", g.is_nonnegative());
    } else {
      r.artifacts["gamma_vector"] = nullptr;
      note("gamma_nonnegative", false);
    }
  }
  if (c.real_rooted) {
    if (f.is_zero()) throw unimodal::InvalidArgument("real-rootedness is undefined for the zero polynomial");
    note("real_rooted", poly::is_real_rooted(f));
    r.artifacts["real_roots"] = poly::count_real_roots(f);
  }
  r.outcome = pass_fail(all);
  return r;
}

// ---- injection-audit ------------------------------------------------------

struct AuditArgs {
  std::string rule = "all";
  int amax = 6;
  int bmax = 6;
  bool verify_paper = false;
};

std::vector<inj::Rule> selected_rules(const std::string& rule) {
  if (rule == "all") return {std::begin(inj::kAllRules), std::end(inj::kAllRules)};
  try {
    return {inj::rule_from_number(std::stoi(rule))};
  } catch (const std::invalid_argument&) {
    throw unimodal::InvalidArgument("--rule must be all, 1, 2, 3 or 4");
  }
}

Report run_audit(const AuditArgs& a, const Globals& glob) {
  Report r{"injection-audit"};
  r.inputs = {{"rule", a.rule}, {"amax", a.amax}, {"bmax", a.bmax}, {"verify_paper", a.verify_paper}};
  if (a.amax < 1 || a.bmax < 1) throw unimodal::InvalidArgument("--amax and --bmax must be at least 1");
  const auto rules = selected_rules(a.rule);
  json reports = json::array();
  for (auto rule : rules) {
    for (int x = 1; x <= a.amax; ++x) {
      for (int y = 1; y <= a.bmax; ++y) reports.push_back(enc::encode(inj::audit(rule, x, y, glob.budget)));
    }
  }
  r.artifacts["audits"] = reports;
  if (a.verify_paper) {
    json claims = json::array();
    for (const auto& c : inj::verify_paper_witnesses(a.amax, a.bmax, glob.budget)) {
      if (std::find(rules.begin(), rules.end(), c.rule) != rules.end()) claims.push_back(enc::encode(c));
    }
    r.artifacts["claims"] = claims;
  }
  return r;
}

std::string partition_text(const json& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i].get<int>());
  return s + ")";
}

void print_audit_table(const Report& r) {
  std::printf("%-18s %3s %3s  %-20s %4s  %s\n", "rule", "a", "b", "outcome", "k", "witnesses");
  for (const auto& row : r.artifacts["audits"]) {
    std::string witnesses;
    for (const auto& w : row["witnesses"]) witnesses += (witnesses.empty() ? "" : " ") + partition_text(w);
    const std::string k = row["k"].is_null() ? "-" : std::to_string(row["k"].get<int>());
    std::printf("%-18s %3d %3d  %-20s %4s  %s\n", row["rule"].get<std::string>().c_str(), row["a"].get<int>(), row["b"].get<int>(),
                row["outcome"].get<std::string>().c_str(), k.c_str(), witnesses.c_str());
  }
  if (r.artifacts.contains("claims")) {
    std::printf("\n%-18s %3s %3s  %9s %9s  %s\n", "claim", "a", "b", "claimed_k", "first_k", "verdict");
    for (const auto& c : r.artifacts["claims"]) {
      std::string first = "-";
      if (c.contains("audit") && !c["audit"]["k"].is_null()) first = std::to_string(c["audit"]["k"].get<int>());
      std::printf("%-18s %3d %3d  %9d %9s  %s\n", c["rule"].get<std::string>().c_str(), c["a"].get<int>(), c["b"].get<int>(),
                  c["claimed_k"].get<int>(), first.c_str(), c["verdict"].get<std::string>().c_str());
    }
  }
}

// ---- posets ---------------------------------------------------------------

Report run_sperner(int n, bool exhaustive, int cap) {
  Report r{"sperner"};
  r.inputs = {{"n", n}, {"exhaustive", exhaustive}};
  if (n < 0 || n > 20) throw unimodal::InvalidArgument("sperner needs 0 <= n <= 20");
  const auto hist = ps::rank_histogram(ps::subset_lattice(n));
  r.artifacts["rank_histogram"] = enc::big_array(hist);
  r.artifacts["bound"] = enc::big(unimodal::binomial(n, (n + 1) / 2));
  if (!exhaustive) return r;
  const auto s = ps::max_antichain(n, cap);
  json maxima = json::array();
  for (const auto& family : s.maximum_antichains) maxima.push_back(enc::encode_family(family));
  r.artifacts["antichain_count"] = s.antichain_count;
  r.artifacts["max_size"] = s.max_size;
  r.artifacts["maximum_antichains"] = maxima;
  r.artifacts["middle_layers_only"] = s.maxima_are_middle_layers;
  r.outcome = pass_fail(unimodal::BigInt(static_cast<unsigned long>(s.max_size)) == s.bound && s.maxima_are_middle_layers);
  return r;
}

Report run_lym(int n, const std::string& family_text) {
  Report r{"lym"};
  if (n < 0 || n > 20) throw unimodal::InvalidArgument("lym needs 0 <= n <= 20");
  json j;
  try {
    j = json::parse(family_text);
  } catch (const json::parse_error& e) {
    throw unimodal::InvalidArgument(std::string("bad JSON: ") + e.what());
  }
  const auto family = enc::decode_family(j, n);
  r.inputs = {{"n", n}, {"antichain", enc::encode_family(family)}};
  const unimodal::BigRational s = ps::lym_sum(family, n);
  const auto layer = ps::full_layer_rank(family, n);
  r.artifacts["sum"] = s.get_str();
  r.artifacts["equality"] = s == 1;
  r.artifacts["full_layer"] = layer ? json(*layer) : json(nullptr);
  r.outcome = pass_fail(s <= 1);
  return r;
}

Report run_bruhat(int n, bool export_poset) {
  Report r{"bruhat"};
  r.inputs = {{"n", n}};
  const auto p = ps::weak_bruhat(n);
  const auto hist = ps::rank_histogram(p);
  r.artifacts["rank_histogram"] = enc::big_array(hist);
  r.artifacts["inversion_polynomial"] = enc::encode(ps::inversion_generating_function(n));
  r.artifacts["matches_q_factorial"] = ps::inversion_generating_function(n) == qg::q_factorial(n);
  const bool uni = unimodal::is_unimodal_sequence(hist);
  r.artifacts["unimodal"] = uni;
  if (export_poset) r.artifacts["poset"] = enc::encode(p);
  r.outcome = pass_fail(uni);
  return r;
}

Report run_stirling(int n) {
  Report r{"stirling"};
  r.inputs = {{"n", n}};
  if (n < 1) throw unimodal::InvalidArgument("stirling needs n >= 1");
  const auto row = ps::stirling2_row(n);
  r.artifacts["row"] = enc::big_array(row);
  const bool uni = unimodal::is_unimodal_sequence(row);
  r.artifacts["unimodal"] = uni;
  bool ok = uni;
  if (n <= 10) {
    const bool agree = row == ps::stirling2_row_enumerated(n);
    r.artifacts["enumeration_agrees"] = agree;
    ok = ok && agree;
  }
  r.outcome = pass_fail(ok);
  return r;
}

Report run_eulerian(int n) {
  Report r{"eulerian"};
  r.inputs = {{"n", n}};
  if (n < 1) throw unimodal::InvalidArgument("eulerian needs n >= 1");
  const auto an = ps::eulerian(n);
  const bool pal = poly::is_palindromic(an, n - 1);
  const bool real = poly::is_real_rooted(an);
  const bool uni = poly::is_unimodal(an);
  const bool sum = an.coefficient_sum() == unimodal::factorial(n);
  r.artifacts["coeffs"] = enc::encode(an);
  r.artifacts["palindromic"] = pal;
  bool gamma = false;
  if (pal) {
    const auto g = poly::gamma_decompose(an, n - 1);
    gamma = g.is_nonnegative();
    r.artifacts["gamma_vector"] = enc::encode(g);
  }
  r.artifacts["gamma_nonnegative"] = gamma;
  r.artifacts["real_rooted"] = real;
  r.artifacts["unimodal"] = uni;
  r.artifacts["sum_is_factorial"] = sum;
  r.outcome = pass_fail(pal && gamma && real && uni && sum);
  return r;
}

// ---- paths ----------------------------------------------------------------

Report run_fab(long a, long b, long n) {
  Report r{"paths fab"};
  r.inputs = {{"a", a}, {"b", b}, {"n", n}};
  const auto dp = pth::count_free(a, b, n);
  const auto closed = pth::count_free_closed_form(a, b, n);
  r.artifacts["count"] = enc::big(dp);
  r.artifacts["closed_form"] = enc::big(closed);
  r.outcome = pass_fail(dp == closed);
  return r;
}

Report run_monotone(int n, int k) {
  Report r{"paths monotone"};
  r.inputs = {{"n", n}, {"k", k}};
  r.artifacts["count"] = enc::big(pth::count_monotone(n, k));
  if (k < 0 || 2 * k + 1 > n) return r;
  const auto c = pth::monotone_injection(n, k);
  r.artifacts["line"] = enc::encode(c.line);
  r.artifacts["source_size"] = c.source_size;
  r.artifacts["image_size"] = c.image_size;
  r.artifacts["target_size"] = c.target_size;
  r.artifacts["injective"] = c.injective();
  r.outcome = pass_fail(c.injective());
  return r;
}

Report run_sagan(int n, int k) {
  Report r{"paths sagan"};
  r.inputs = {{"n", n}, {"k", k}};
  const auto s = pth::sagan_sequence(n, k);
  const bool uni = unimodal::is_unimodal_sequence(s);
  r.artifacts["sequence"] = enc::big_array(s);
  r.artifacts["unimodal"] = uni;
  r.outcome = pass_fail(uni);
  return r;
}

// ---- report ---------------------------------------------------------------

void write_atomically(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw unimodal::InvalidArgument("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) {
      fs::remove(tmp);
      throw unimodal::InvalidArgument("write to " + tmp.string() + " failed");
    }
  }
  fs::rename(tmp, target);
}

Report run_report(const unimodal::acceptance::Options& opt, bool timing) {
  Report r{"report"};
  r.inputs = {{"all", true}, {"amax", opt.audit_amax}, {"bmax", opt.audit_bmax}, {"seed", opt.seed}};
  json criteria = json::array();
  bool all = true;
  for (const auto& c : unimodal::acceptance::run_all(opt)) {
    criteria.push_back(unimodal::acceptance::encode(c, timing));
    all = all && (timing ? c.passed() : c.exact);
  }
  r.artifacts["criteria"] = criteria;
  r.artifacts["audit_table"] = unimodal::acceptance::audit_table(opt.audit_amax, opt.audit_bmax);
  r.outcome = pass_fail(all);
  return r;
}

json render(const Report& r, std::optional<double> elapsed_ms) {
  json out = {{"v", 1}, {"command", r.command}, {"inputs", r.inputs}, {"outcome", r.outcome}, {"artifacts", r.artifacts}};
  if (elapsed_ms) out["elapsed_ms"] = *elapsed_ms;
  return out;
}

void print_table(const Report& r) {
  if (r.command == "injection-audit") {
    print_audit_table(r);
    return;
  }
  std::printf("command: %s\noutcome: %s\n", r.command.c_str(), r.outcome.c_str());
  for (const auto& [key, value] : r.artifacts.items()) std::printf("%s: %s\n", key.c_str(), value.dump().c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact unimodality and log-concavity toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals glob;
  app.add_option("--budget", glob.budget, "cap on enumerated partitions per box")->capture_default_str();
  app.add_flag("--timing", glob.timing, "include elapsed wall-clock time in the report");
  app.add_flag("--table", glob.table, "plain-text output instead of JSON");

  std::function<Report()> action;

  GaussArgs gauss;
  auto* g = app.add_subcommand("gauss", "Gaussian polynomial G_{a,b}");
  g->add_option("a", gauss.a)->required();
  g->add_option("b", gauss.b)->required();
  g->add_option("--method", gauss.method)->check(CLI::IsMember({"quotient", "pascal", "enum", "koh"}))->capture_default_str();
  g->add_option("--koh-rule", gauss.koh_rule)->check(CLI::IsMember({"stated", "calibrated"}))->capture_default_str();
  g->add_flag("--terms", gauss.terms, "list the individual KOH terms");
  g->callback([&] {
    if (gauss.terms || g->count("--koh-rule")) gauss.method = "koh";
    action = [&] { return run_gauss(gauss, glob); };
  });

  CheckArgs check;
  auto* c = app.add_subcommand("check", "properties of a coefficient sequence");
  c->add_option("coeffs", check.coeffs, "JSON array of decimal strings")->required();
  c->add_option("--center", check.center, "palindromic centre n (default: degree)");
  c->add_flag("--unimodal", check.unimodal);
  c->add_flag("--log-concave", check.log_concave);
  c->add_flag("--palindromic", check.palindromic);
  c->add_flag("--gamma", check.gamma);
  c->add_flag("--real-rooted", check.real_rooted);
  c->callback([&] { action = [&] { return run_check(check); }; });

  AuditArgs audit;
  auto* ia = app.add_subcommand("injection-audit", "audit the candidate level injections on boxes");
  ia->add_option("--rule", audit.rule)->capture_default_str();
  ia->add_option("--amax", audit.amax)->capture_default_str();
  ia->add_option("--bmax", audit.bmax)->capture_default_str();
  ia->add_flag("--verify-paper", audit.verify_paper, "check the documented failure witnesses");
  ia->callback([&] { action = [&] { return run_audit(audit, glob); }; });

  int n = 0;
  int k = 0;
  bool exhaustive = false;
  int cap = ps::kDefaultAntichainCap;
  auto* sp = app.add_subcommand("sperner", "largest antichains of the subset lattice");
  sp->add_option("n", n)->required();
  sp->add_flag("--exhaustive", exhaustive);
  sp->add_option("--cap", cap, "largest n for exhaustive search")->capture_default_str()->check(CLI::Range(0, ps::kMaxAntichainN));
  sp->callback([&] { action = [&] { return run_sperner(n, exhaustive, cap); }; });

  std::string family;
  auto* ly = app.add_subcommand("lym", "LYM sum of an antichain");
  ly->add_option("n", n)->required();
  ly->add_option("antichain", family, "JSON array of subsets, e.g. [[1,2],[3]]")->required();
  ly->callback([&] { action = [&] { return run_lym(n, family); }; });

  bool export_poset = false;
  auto* br = app.add_subcommand("bruhat", "weak Bruhat order on S_n");
  br->add_option("n", n)->required();
  br->add_flag("--export", export_poset, "include the cover relations");
  br->callback([&] { action = [&] { return run_bruhat(n, export_poset); }; });

  auto* st = app.add_subcommand("stirling", "Stirling numbers of the second kind");
  st->add_option("n", n)->required();
  st->callback([&] { action = [&] { return run_stirling(n); }; });

  auto* eu = app.add_subcommand("eulerian", "Eulerian polynomial A_n");
  eu->add_option("n", n)->required();
  eu->callback([&] { action = [&] { return run_eulerian(n); }; });

  auto* paths = app.add_subcommand("paths", "lattice path counts");
  paths->require_subcommand(1);
  long pa = 0;
  long pb = 0;
  long pn = 0;
  auto* fab = paths->add_subcommand("fab", "walks from (0,0) to (a,b) in n unit steps");
  fab->add_option("a", pa)->required();
  fab->add_option("b", pb)->required();
  fab->add_option("n", pn)->required();
  fab->callback([&] { action = [&] { return run_fab(pa, pb, pn); }; });
  auto* mono = paths->add_subcommand("monotone", "monotone paths T_{n,k} and the reflection injection");
  mono->add_option("n", n)->required();
  mono->add_option("k", k)->required();
  mono->callback([&] { action = [&] { return run_monotone(n, k); }; });
  auto* sagan = paths->add_subcommand("sagan", "the sequence C(n,j) C(n,k-j)");
  sagan->add_option("n", n)->required();
  sagan->add_option("k", k)->required();
  sagan->callback([&] { action = [&] { return run_sagan(n, k); }; });

  unimodal::acceptance::Options opt;
  bool all = false;
  std::string out_path;
  auto* rep = app.add_subcommand("report", "run the full acceptance suite");
  rep->add_flag("--all", all)->required();
  rep->add_option("--amax", opt.audit_amax)->capture_default_str();
  rep->add_option("--bmax", opt.audit_bmax)->capture_default_str();
  rep->add_option("--seed", opt.seed)->capture_default_str();
  rep->add_option("--out", out_path, "write the report to this file")->required();
  rep->callback([&] { action = [&] { return run_report(opt, glob.timing); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    const Report r = action();
    std::optional<double> elapsed;
    if (glob.timing) elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const std::string text = render(r, elapsed).dump(2) + "\n";
    if (!out_path.empty()) {
      write_atomically(out_path, text);
      std::printf("{\"outcome\": \"%s\", \"out\": %s}\n", r.outcome.c_str(), json(out_path).dump().c_str());
    } else if (glob.table) {
      print_table(r);
    } else {
      std::fwrite(text.data(), 1, text.size(), stdout);
    }
    return r.exit_code();
  } catch (const unimodal::BudgetExceeded& e) {
    std::fprintf(stderr, "budget exceeded: %s\n", e.what());
    return kExitBudget;
  } catch (const unimodal::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
}
