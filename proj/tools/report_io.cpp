#include "report_io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "somix/errors.hpp"
#include "somix/weyl.hpp"

namespace somix::io {

namespace {

json real(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }
json real(const HighReal& x) { return real(to_double(x)); }

template <class T>
json optional_real(const std::optional<T>& x) {
  return x ? real(*x) : json(nullptr);
}

json integers(const std::vector<BigInt>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

json reals(const std::vector<HighReal>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(real(x));
  return out;
}

json law_json(const AngleLaw& law) {
  const char* kind = law.kind == AngleLaw::Kind::fixed               ? "fixed"
                     : law.kind == AngleLaw::Kind::truncated_uniform ? "truncated_uniform"
                                                                     : "uniform";
  json out{{"kind", kind}};
  out["parameter"] = law.kind == AngleLaw::Kind::uniform ? json(nullptr) : json(law.parameter);
  return out;
}

json budget_json(const LabelBudget& b) {
  return {{"n", b.n}, {"max_total", b.max_total}, {"max_top", b.max_top}};
}

json check_json(const CheckResult& c) {
  json witness = json::object();
  for (const auto& w : c.witness) witness[w.name] = w.value;
  return {{"name", c.name},
          {"status", to_string(c.status)},
          {"witness", witness},
          {"statistic", optional_real(c.statistic)}};
}

json regime_json(const RegimeReport& r) {
  json tags = json::array();
  for (auto t : r.tags) tags.push_back(to_string(t));
  return {{"primary", to_string(r.primary)},
          {"tags", tags},
          {"ratio_at_pi", real(r.ratio_at_pi)},
          {"r1_decay", optional_real(r.r1_decay)},
          {"r2_decay", optional_real(r.r2_decay)},
          {"r3_decay", optional_real(r.r3_decay)},
          {"best", real(r.best)}};
}

json w_json(const WValues& w) {
  return {{"values", reals(w.w)},
          {"min", real(w.min)},
          {"max", real(w.max)},
          {"min_nonempty", optional_real(w.min_nonempty)},
          {"exponent", optional_real(w.exponent)},
          {"gap_claim_holds", w.gap_claim_holds}};
}

json terms_json(const RosenthalTerms& t) {
  return {{"T", reals(t.t)},
          {"mu", reals(t.mu)},
          {"sign", t.sign},
          {"ratio_at_pi", real(t.ratio_at_pi())},
          {"upper_bound_at_pi", real(t.upper_bound_at_pi())}};
}

json dim_ratio_json(const DimRatioBound& r) {
  json chain = json::array();
  for (const auto& line : r.chain) chain.push_back({{"name", line.name}, {"log_value", optional_real(line.log_value)}});
  return {{"exact_ratio", r.exact_ratio.str()},
          {"equals_dimension", r.equals_dimension},
          {"k", r.k},
          {"chain", chain}};
}

// --- validation -----------------------------------------------------------

[[noreturn]] void violation(const std::string& where, const std::string& what) {
  throw DomainError("schema violation at " + where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) violation(where, "expected object");
  auto it = obj.find(key);
  if (it == obj.end()) violation(where, std::string("missing '") + key + "'");
  return *it;
}

void expect_string(const json& obj, const char* key, const std::string& where) {
  if (!field(obj, key, where).is_string()) violation(where + "." + key, "expected string");
}

void expect_integer(const json& obj, const char* key, const std::string& where) {
  if (!field(obj, key, where).is_number_integer()) violation(where + "." + key, "expected integer");
}

void expect_real_or_null(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_number() && !v.is_null()) violation(where + "." + key, "expected number or null");
}

void expect_decimal_string(const json& v, const std::string& where) {
  if (!v.is_string()) violation(where, "expected decimal string");
  const std::string s = v.get<std::string>();
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) violation(where, "empty integer");
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') violation(where, "not a decimal integer");
}

void expect_decimal_array(const json& obj, const char* key, const std::string& where) {
  const json& arr = field(obj, key, where);
  if (!arr.is_array()) violation(where + "." + key, "expected array");
  for (std::size_t i = 0; i < arr.size(); ++i)
    expect_decimal_string(arr[i], where + "." + key + "[" + std::to_string(i) + "]");
}

void expect_real_array(const json& obj, const char* key, const std::string& where) {
  const json& arr = field(obj, key, where);
  if (!arr.is_array()) violation(where + "." + key, "expected array");
  for (const auto& v : arr)
    if (!v.is_number() && !v.is_null()) violation(where + "." + key, "expected numbers");
}

void expect_label(const json& obj, const char* key, const std::string& where) {
  expect_string(obj, key, where);
  const OddLabel label = OddLabel::parse(field(obj, key, where).get<std::string>());
  if (!validate_odd(label)) violation(where + "." + key, "invalid label");
}

void validate_profile(const json& p, const std::string& where) {
  expect_label(p, "label", where);
  expect_decimal_string(field(p, "d", where), where + ".d");
  expect_decimal_array(p, "alpha", where);
  expect_decimal_array(p, "beta", where);
  BigInt sum = 0;
  for (const auto& a : p["alpha"]) sum += BigInt(a.get<std::string>());
  if (sum != BigInt(p["d"].get<std::string>())) violation(where, "sum(alpha) != d");
}

void validate_lemma_record(const json& r, const std::string& where) {
  validate_profile(r, where);
  expect_real_or_null(r, "ratio_at_pi", where);
  const json& checks = field(r, "checks", where);
  if (!checks.is_array() || checks.size() != 3) violation(where + ".checks", "expected 3 checks");
  for (const auto& c : checks) {
    expect_string(c, "name", where + ".checks");
    const auto status = field(c, "status", where + ".checks").get<std::string>();
    if (status != "pass" && status != "fail" && status != "not_applicable")
      violation(where + ".checks", "bad status '" + status + "'");
    if (!field(c, "witness", where + ".checks").is_object()) violation(where + ".checks", "witness must be object");
  }
  const json& regime = field(r, "regime", where);
  expect_string(regime, "primary", where + ".regime");
  for (const char* k : {"r1_decay", "r2_decay", "r3_decay", "best"}) expect_real_or_null(regime, k, where + ".regime");
  const json& terms = field(r, "terms", where);
  expect_real_array(terms, "T", where + ".terms");
  expect_real_array(terms, "mu", where + ".terms");
  expect_real_array(field(r, "w", where), "values", where + ".w");
  const json& dim = field(r, "dim_ratio", where);
  expect_string(dim, "exact_ratio", where + ".dim_ratio");
  if (!field(dim, "chain", where + ".dim_ratio").is_array()) violation(where + ".dim_ratio.chain", "expected array");
}

}  // namespace

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json to_json(const FourierProfile& profile) {
  return {{"schema", kProfileSchema},
          {"label", profile.label.to_string()},
          {"n", profile.label.n()},
          {"d", profile.d.str()},
          {"alpha", integers(profile.alpha)},
          {"beta", integers(profile.beta)}};
}

json to_json(const LemmaReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(check_json(c));
  return {{"label", r.label.to_string()},
          {"n", r.label.n()},
          {"d", r.d.str()},
          {"alpha", integers(r.alpha)},
          {"beta", integers(r.beta)},
          {"ratio_at_pi", real(r.ratio_at_pi)},
          {"checks", checks},
          {"regime", regime_json(r.regime)},
          {"terms", terms_json(r.terms)},
          {"w", w_json(r.w)},
          {"dim_ratio", dim_ratio_json(r.dim_ratio)},
          {"cube_root_constant", optional_real(r.cube_root_constant)}};
}

json lemma_document(const std::vector<LemmaReport>& reports, double eps) {
  json records = json::array();
  std::size_t pass1 = 0, pass2 = 0, pass3 = 0, na3 = 0, gap_violations = 0;
  json failures = json::array();
  std::optional<double> max_ratio;
  std::string max_label;
  json regimes = json::object();
  for (const auto& r : reports) {
    records.push_back(to_json(r));
    pass1 += r.checks[0].passed();
    pass2 += r.checks[1].passed();
    pass3 += r.checks[2].passed();
    na3 += r.checks[2].status == CheckStatus::not_applicable;
    gap_violations += !r.w.gap_claim_holds;
    for (const auto& c : r.checks)
      if (c.status == CheckStatus::fail) failures.push_back({{"label", r.label.to_string()}, {"check", c.name}});
    if (r.cube_root_constant && (!max_ratio || *r.cube_root_constant > *max_ratio)) {
      max_ratio = r.cube_root_constant;
      max_label = r.label.to_string();
    }
    const std::string tag = to_string(r.regime.primary);
    regimes[tag] = regimes.value(tag, 0) + 1;
  }
  json summary{{"labels", reports.size()},
               {"eps", eps},
               {"lemma1_pass", pass1},
               {"lemma2_pass", pass2},
               {"lemma3_pass", pass3},
               {"lemma3_not_applicable", na3},
               {"lemma3_max_ratio", optional_real(max_ratio)},
               {"lemma3_max_label", max_ratio ? json(max_label) : json(nullptr)},
               {"w_gap_claim_violations", gap_violations},
               {"failures", failures},
               {"regimes", regimes}};
  return {{"schema", kLemmaSchema}, {"records", records}, {"summary", summary}};
}

json terms_document(const OddLabel& label) {
  return {{"schema", kTermsSchema},
          {"label", label.to_string()},
          {"n", label.n()},
          {"terms", terms_json(rosenthal_terms(label))},
          {"w", w_json(w_values(label))},
          {"dim_ratio", dim_ratio_json(dim_ratio_bound(label))}};
}

json to_json(const BoundReport& report) {
  json points = json::array();
  for (std::size_t i = 0; i < report.points.size(); ++i) {
    const auto& p = report.points[i];
    json top = json::array();
    for (const auto& c : p.top) top.push_back({{"label", c.label.to_string()}, {"contribution", real(c.contribution)}});
    points.push_back({{"t", p.t},
                      {"bound_sq", real(p.bound_sq)},
                      {"bound_tv", real(p.bound_tv)},
                      {"bound_tv_half", real(p.bound_tv_half)},
                      {"boundary_max", real(report.boundary_max[i])},
                      {"top", top}});
  }
  json coefficients = json::array();
  for (const auto& c : report.coefficients)
    coefficients.push_back({{"label", c.label.to_string()}, {"d", c.d.str()}, {"rho", real(c.rho)}});
  json stuck = json::array();
  for (const auto& a : report.non_convergent) stuck.push_back(a.to_string());
  return {{"schema", kBoundSchema},
          {"n", report.n},
          {"law", law_json(report.law)},
          {"budget", budget_json(report.budget)},
          {"points", points},
          {"coefficients", coefficients},
          {"non_convergent", stuck},
          {"truncation_note", report.truncation_note}};
}

json to_json(const MixingEstimate& e, int n, const AngleLaw& law) {
  return {{"schema", kMixingSchema},
          {"n", n},
          {"law", law_json(law)},
          {"budget", budget_json(e.budget)},
          {"target", e.target},
          {"t", e.t},
          {"bound_tv_at_t", real(e.bound_tv_at_t)},
          {"bound_tv_before", real(e.bound_tv_before)},
          {"top_label", e.top_label.to_string()},
          {"top_contribution", real(e.top_contribution)}};
}

json to_json(const TraceStats& stats) {
  json steps = json::array();
  for (const auto& s : stats.steps)
    steps.push_back({{"t", s.t},
                     {"mean_tr", real(s.trace.mean)},
                     {"se_tr", real(s.trace.se)},
                     {"mean_tr2", real(s.trace_squared.mean)},
                     {"se_tr2", real(s.trace_squared.se)},
                     {"mean_trsq", real(s.trace_of_square.mean)},
                     {"se_trsq", real(s.trace_of_square.se)}});
  const auto& c = stats.config;
  return {{"schema", kTraceSchema},
          {"N", c.N},
          {"kind", to_string(c.kind)},
          {"law", law_json(c.law)},
          {"steps", c.steps},
          {"trials", c.trials},
          {"seed", std::to_string(c.seed)},
          {"stats", steps}};
}

json to_json(const DecayReport& r) {
  json points = json::array();
  for (const auto& p : r.points)
    points.push_back({{"t", p.t}, {"mean", real(p.mean)}, {"se", real(p.se)}, {"expected", real(p.expected)}, {"z", real(p.z)}});
  return {{"schema", kDecaySchema},
          {"label", r.label.to_string()},
          {"character", r.character},
          {"d", r.d.str()},
          {"rho", real(r.rho)},
          {"max_abs_z", real(r.max_abs_z)},
          {"points", points}};
}

void validate_document(const json& doc) {
  expect_string(doc, "schema", "$");
  const std::string schema = doc["schema"].get<std::string>();
  if (schema == kProfileSchema) {
    validate_profile(doc, "$");
  } else if (schema == kLemmaSchema) {
    const json& records = field(doc, "records", "$");
    if (!records.is_array()) violation("$.records", "expected array");
    for (std::size_t i = 0; i < records.size(); ++i) validate_lemma_record(records[i], "$.records[" + std::to_string(i) + "]");
    const json& summary = field(doc, "summary", "$");
    expect_integer(summary, "labels", "$.summary");
    if (summary["labels"].get<std::size_t>() != records.size()) violation("$.summary.labels", "count mismatch");
  } else if (schema == kTermsSchema) {
    expect_label(doc, "label", "$");
    expect_real_array(field(doc, "terms", "$"), "T", "$.terms");
    expect_real_array(field(doc, "terms", "$"), "mu", "$.terms");
    expect_real_array(field(doc, "w", "$"), "values", "$.w");
  } else if (schema == kBoundSchema) {
    expect_integer(doc, "n", "$");
    expect_string(field(doc, "law", "$"), "kind", "$.law");
    const json& points = field(doc, "points", "$");
    if (!points.is_array() || points.empty()) violation("$.points", "expected nonempty array");
    for (const auto& p : points) {
      expect_integer(p, "t", "$.points");
      for (const char* k : {"bound_sq", "bound_tv", "bound_tv_half", "boundary_max"}) expect_real_or_null(p, k, "$.points");
    }
    for (const auto& c : field(doc, "coefficients", "$")) {
      expect_label(c, "label", "$.coefficients");
      expect_decimal_string(field(c, "d", "$.coefficients"), "$.coefficients.d");
      expect_real_or_null(c, "rho", "$.coefficients");
    }
  } else if (schema == kMixingSchema) {
    expect_integer(doc, "t", "$");
    expect_label(doc, "top_label", "$");
    expect_real_or_null(doc, "bound_tv_at_t", "$");
  } else if (schema == kTraceSchema) {
    expect_integer(doc, "N", "$");
    expect_decimal_string(field(doc, "seed", "$"), "$.seed");
    for (const auto& s : field(doc, "stats", "$")) {
      expect_integer(s, "t", "$.stats");
      for (const char* k : {"mean_tr", "se_tr", "mean_tr2", "se_tr2", "mean_trsq", "se_trsq"}) expect_real_or_null(s, k, "$.stats");
    }
  } else if (schema == kDecaySchema) {
    expect_label(doc, "label", "$");
    expect_decimal_string(field(doc, "d", "$"), "$.d");
    for (const auto& p : field(doc, "points", "$"))
      for (const char* k : {"mean", "se", "expected", "z"}) expect_real_or_null(p, k, "$.points");
  } else {
    violation("$.schema", "unknown schema '" + schema + "'");
  }
}

void write_lemma_csv(std::ostream& out, const std::vector<LemmaReport>& reports) {
  out << "label,d,r_pi,regime,min_W,max_W,lemma1,lemma2,lemma3\n";
  for (const auto& r : reports) {
    out << '"' << r.label.to_string() << "\"," << r.d << ',' << format_real(r.ratio_at_pi) << ','
        << to_string(r.regime.primary) << ',' << format_real(to_double(r.w.min)) << ','
        << format_real(to_double(r.w.max)) << ',' << to_string(r.checks[0].status) << ','
        << to_string(r.checks[1].status) << ',' << to_string(r.checks[2].status) << '\n';
  }
}

void write_bound_csv(std::ostream& out, const BoundReport& report) {
  out << "t,bound_sq,bound_tv,bound_tv_half,top_label,top_contribution\n";
  for (const auto& p : report.points) {
    out << p.t << ',' << format_real(to_double(p.bound_sq)) << ',' << format_real(p.bound_tv) << ','
        << format_real(p.bound_tv_half) << ',';
    if (p.top.empty())
      out << ",\n";
    else
      out << '"' << p.top.front().label.to_string() << "\"," << format_real(to_double(p.top.front().contribution)) << '\n';
  }
}

void write_trace_csv(std::ostream& out, const TraceStats& stats) {
  out << "t,mean_tr,se_tr,mean_tr2,se_tr2,mean_trsq,se_trsq\n";
  for (const auto& s : stats.steps)
    out << s.t << ',' << format_real(s.trace.mean) << ',' << format_real(s.trace.se) << ','
        << format_real(s.trace_squared.mean) << ',' << format_real(s.trace_squared.se) << ','
        << format_real(s.trace_of_square.mean) << ',' << format_real(s.trace_of_square.se) << '\n';
}

}  // namespace somix::io
