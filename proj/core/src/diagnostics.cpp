#include "somix/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "somix/errors.hpp"
#include "somix/parallel.hpp"
#include "somix/weyl.hpp"

namespace somix {

namespace {

std::string str(const BigInt& x) { return x.str(); }

std::string str(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

BigInt factorial(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// L_j prod_{r != j} (L_r^2 - L_j^2) on the doubled shifts.
BigInt display_denominator(const std::vector<long long>& L, std::size_t j) {
  BigInt den = L[j];
  for (std::size_t r = 0; r < L.size(); ++r)
    if (r != j) den *= BigInt(L[r]) * L[r] - BigInt(L[j]) * L[j];
  return den;
}

std::vector<HighReal> terms_of(const std::vector<long long>& L, std::vector<int>* signs) {
  const int n = static_cast<int>(L.size());
  const BigInt top = factorial(2 * n - 1);
  std::vector<HighReal> t(L.size());
  if (signs) signs->assign(L.size(), 1);
  for (std::size_t j = 0; j < L.size(); ++j) {
    BigInt den = display_denominator(L, j);
    int sign = den < 0 ? -1 : 1;
    if (den < 0) den = -den;
    // sin(L_j pi / 2) = (-1)^{(L_j - 1)/2} for odd L_j.
    if (((L[j] - 1) / 2) % 2 != 0) sign = -sign;
    if (signs) (*signs)[j] = sign;
    t[j] = HighReal(BigRational(top, den));
  }
  return t;
}

std::optional<double> log_or_empty(double log_value) {
  if (std::isinf(log_value) && log_value < 0) return std::nullopt;
  return log_value;
}

}  // namespace

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "not_applicable";
  }
  return "?";
}

const char* to_string(Regime regime) {
  switch (regime) {
    case Regime::r1: return "R1";
    case Regime::r2: return "R2";
    case Regime::r3: return "R3";
    case Regime::unclassified: return "unclassified";
  }
  return "?";
}

CheckResult check_lemma1(const FourierProfile& profile) {
  CheckResult result{"lemma1", CheckStatus::pass, {}, std::nullopt};
  const int m = profile.m();
  for (int j = 1; j < m; ++j) {
    if (profile.alpha[j] < profile.alpha[j + 1]) {
      result.status = CheckStatus::fail;
      result.witness = {{"j", std::to_string(j)},
                        {"alpha_j", str(profile.alpha[j])},
                        {"alpha_j+1", str(profile.alpha[j + 1])}};
      return result;
    }
  }
  result.witness = {{"m", std::to_string(m)},
                    {"alpha_1", str(profile.alpha_at(1))},
                    {"alpha_m", str(profile.alpha_at(m))}};
  return result;
}

CheckResult check_lemma2(const FourierProfile& profile) {
  CheckResult result{"lemma2", CheckStatus::pass, {}, std::nullopt};
  const int m = profile.m();
  auto fail = [&](const char* relation, int j, std::vector<Witness> extra) {
    result.status = CheckStatus::fail;
    result.witness = {{"relation", relation}, {"j", std::to_string(j)}};
    result.witness.insert(result.witness.end(), extra.begin(), extra.end());
  };

  const BigInt lhs0 = 2 * profile.beta_at(0);
  const BigInt rhs0 = 2 * profile.alpha_at(0) - profile.alpha_at(1);
  if (lhs0 != rhs0) {
    fail("2beta_0 = 2alpha_0 - alpha_1", 0, {{"lhs", str(lhs0)}, {"rhs", str(rhs0)}});
    return result;
  }
  for (int j = 1; j <= m; ++j) {
    const BigInt lhs = 2 * profile.beta_at(j);
    const BigInt rhs = profile.alpha_at(j) - profile.alpha_at(j + 1);
    if (lhs != rhs) {
      fail("2beta_j = alpha_j - alpha_j+1", j, {{"lhs", str(lhs)}, {"rhs", str(rhs)}});
      return result;
    }
  }
  for (int j = 0; j < m; ++j) {
    const BigInt lhs = (2 * j + 3) * profile.beta_at(j);
    const BigInt rhs = (2 * j + 1) * profile.beta_at(j + 1);
    if (lhs < rhs) {
      fail("(2j+3)beta_j >= (2j+1)beta_j+1", j, {{"lhs", str(lhs)}, {"rhs", str(rhs)}});
      return result;
    }
  }
  result.witness = {{"beta_0", str(profile.beta_at(0))},
                    {"alpha_0", str(profile.alpha_at(0))},
                    {"alpha_1", str(profile.alpha_at(1))},
                    {"relations_checked", std::to_string(2 * m + 1)}};
  return result;
}

CheckResult check_lemma3(const FourierProfile& profile, double constant) {
  CheckResult result{"lemma3", CheckStatus::not_applicable, {}, std::nullopt};
  const BigInt& a0 = profile.alpha[0];
  const BigInt a1 = profile.alpha_at(1);
  result.witness = {{"alpha_0", str(a0)}, {"alpha_1", str(a1)}, {"d", str(profile.d)}};
  if (a0 <= a1) return result;

  const HighReal t0 = profile.alpha_tilde(0);
  const HighReal gap = t0 - profile.alpha_tilde(1);
  const double ratio = to_double(t0 / cbrt(gap));
  result.statistic = ratio;
  result.status = ratio <= constant ? CheckStatus::pass : CheckStatus::fail;
  result.witness.push_back({"ratio", str(ratio)});
  result.witness.push_back({"constant", str(constant)});
  return result;
}

HighReal RosenthalTerms::ratio_at_pi() const {
  HighReal sum = 0;
  for (std::size_t j = 0; j < t.size(); ++j) sum += sign[j] * t[j];
  return sum;
}

HighReal RosenthalTerms::upper_bound_at_pi() const {
  HighReal sum = 0;
  for (const auto& x : t) sum += x;
  return sum;
}

RosenthalTerms rosenthal_terms(const OddLabel& label) {
  require_valid(label);
  RosenthalTerms out;
  out.t = terms_of(label.doubled_shifts(), &out.sign);
  out.mu = terms_of(OddLabel::trivial(label.n()).doubled_shifts(), nullptr);
  return out;
}

WValues w_values(const OddLabel& label) {
  require_valid(label);
  const int n = label.n();
  WValues out;
  out.w.reserve(static_cast<std::size_t>(n));
  for (int s = 1; s <= n; ++s) {
    BigRational w = 1;
    const BigInt shifted_s = label.parts[s - 1] + s;
    for (int r = s + 1; r <= n; ++r) {
      const BigInt shifted_r = label.parts[r - 1] + r;
      BigInt num = shifted_r * shifted_r - shifted_s * shifted_s;
      if (num < 0) num = -num;
      w *= BigRational(num, BigInt(r * r - s * s));
    }
    out.w.emplace_back(w);
  }
  out.min = *std::min_element(out.w.begin(), out.w.end());
  out.max = *std::max_element(out.w.begin(), out.w.end());
  if (n > 1) out.min_nonempty = *std::min_element(out.w.begin(), out.w.end() - 1);
  if (out.min > 1) out.exponent = to_double(log(out.max) / log(out.min));
  out.gap_claim_holds = out.max <= pow(out.min, 2 * n);
  return out;
}

DimRatioBound dim_ratio_bound(const OddLabel& label) {
  require_valid(label);
  const int n = label.n();
  const auto L = label.doubled_shifts();
  const auto L0 = OddLabel::trivial(n).doubled_shifts();
  const auto& a = label.parts;

  DimRatioBound out;
  out.exact_ratio = 1;
  for (int q = 0; q < n; ++q) {
    out.exact_ratio *= BigRational(L[q], L0[q]);
    for (int s = 0; s < q; ++s)
      out.exact_ratio *= BigRational(BigInt(L[q]) * L[q] - BigInt(L[s]) * L[s],
                                     BigInt(L0[q]) * L0[q] - BigInt(L0[s]) * L0[s]);
  }
  out.equals_dimension = out.exact_ratio == BigRational(dimension(label));

  int zeros = 0;
  while (zeros < n && a[zeros] == 0) ++zeros;
  out.k = n - zeros;
  const int prefix = zeros;  // n - k

  // 1-based helpers.
  auto part = [&](int r) { return static_cast<double>(a[r - 1]); };

  out.chain.push_back({"exact", to_double(log(HighReal(out.exact_ratio)))});

  double line2 = 0.0;
  for (int j = prefix + 1; j <= n; ++j) line2 += std::log((part(j) + j - 0.5) / (j - 0.5));
  for (int s = 1; s <= prefix; ++s)
    for (int r = prefix + 1; r <= n; ++r)
      line2 += std::log((part(r) + r - s) / (r - s)) +
               std::log((part(r) + r + s - 1) / (r + s - 1));
  out.chain.push_back({"zero_prefix_product", line2});

  double line3 = 0.0;
  for (int r = prefix + 1; r <= n; ++r) {
    double harmonic = 0.0;
    for (int s = 1; s <= prefix; ++s) harmonic += 1.0 / (r - s) + 1.0 / (r + s);
    line3 += part(r) * harmonic;
  }
  out.chain.push_back({"exponential_bound", line3});

  double line4 = 0.0;
  for (int r = prefix + 1; r <= n; ++r) {
    if (a[r - 1] == 0) continue;
    line4 += part(r) * (std::log(static_cast<double>(r - 1) / (r - prefix)) +
                        std::log(static_cast<double>(r + prefix) / (r + 1)));
  }
  out.chain.push_back({"harmonic_ratio_bound", log_or_empty(line4)});

  double line5 = 0.0;
  for (int j = 1; j <= out.k; ++j) line5 += part(prefix + j) * (std::log(n) - std::log(j));
  out.chain.push_back({"power_bound", line5});
  return out;
}

RegimeReport classify_regime(const FourierProfile& profile, double eps) {
  constexpr double pi = std::numbers::pi;
  if (!(eps > 0.0 && eps < pi - 1.0))
    throw DomainError("eps=" + std::to_string(eps) + " outside (0, pi - 1)");

  RegimeReport out;
  const int n = profile.label.n();
  const int top = profile.label.top();
  out.ratio_at_pi = to_double(profile.ratio_at_pi());
  constexpr double gate = 1.0 / 6.0;

  if (out.ratio_at_pi > gate) {
    out.primary = Regime::r1;
    out.tags.push_back(Regime::r1);
    if (top > 0) out.r1_decay = 1.0 - (1.0 - std::cos(eps)) * (1.0 - out.ratio_at_pi) / (2.0 * top);
  } else if (out.ratio_at_pi < gate) {
    out.primary = Regime::r3;
    out.tags.push_back(Regime::r3);
    out.r3_decay = integrated_ratio(profile, eps);
  }

  // At theta = pi, sin(theta/2)^{2n-1} = 1.
  const WValues w = w_values(profile.label);
  double r2 = 1.0;
  if (w.min_nonempty) r2 = std::min(1.0, n / to_double(*w.min_nonempty));
  out.r2_decay = r2;
  if (r2 < 1.0) out.tags.push_back(Regime::r2);

  out.best = 1.0;
  for (const auto& estimate : {out.r1_decay, out.r2_decay, out.r3_decay})
    if (estimate) out.best = std::min(out.best, *estimate);
  return out;
}

bool LemmaReport::lemma_passed(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c.passed();
  return false;
}

LemmaReport make_lemma_report(const OddLabel& label, double eps, const Tolerances& tol) {
  const FourierProfile profile = fourier_profile(label);
  LemmaReport report;
  report.label = label;
  report.d = profile.d;
  report.alpha = profile.alpha;
  report.beta = profile.beta;
  report.ratio_at_pi = to_double(profile.ratio_at_pi());
  report.checks = {check_lemma1(profile), check_lemma2(profile),
                   check_lemma3(profile, tol.lemma3_constant)};
  report.cube_root_constant = report.checks[2].statistic;
  report.regime = classify_regime(profile, eps);
  report.terms = rosenthal_terms(label);
  report.w = w_values(label);
  report.dim_ratio = dim_ratio_bound(label);
  return report;
}

std::vector<LemmaReport> lemma_sweep(const std::vector<OddLabel>& labels, double eps,
                                     unsigned threads, const Tolerances& tol) {
  return parallel_map(labels.size(), threads,
                      [&](std::size_t i) { return make_lemma_report(labels[i], eps, tol); });
}

}  // namespace somix
