#pragma once

#include <optional>
#include <string>
#include <vector>

#include "somix/branching.hpp"
#include "somix/labels.hpp"
#include "somix/numeric.hpp"

namespace somix {

enum class CheckStatus { pass, fail, not_applicable };

const char* to_string(CheckStatus status);

struct Witness {
  std::string name;
  std::string value;
};

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::vector<Witness> witness;
  // Scalar summary where one exists (Lemma 3's cube-root ratio).
  std::optional<double> statistic;

  bool passed() const { return status == CheckStatus::pass; }
};

// alpha_1 >= alpha_2 >= ... >= alpha_m. alpha_0 is deliberately left out.
CheckResult check_lemma1(const FourierProfile& profile);

// 2 beta_j = alpha_j - alpha_{j+1} (j >= 1), 2 beta_0 = 2 alpha_0 - alpha_1 and
// (2j+3) beta_j >= (2j+1) beta_{j+1} (j >= 0), all in exact integers.
CheckResult check_lemma2(const FourierProfile& profile);

// alpha~_0 / (alpha~_0 - alpha~_1)^{1/3} <= constant, gated on alpha_0 > alpha_1
// (not_applicable otherwise).
CheckResult check_lemma3(const FourierProfile& profile,
                         double constant = kDefaultTolerances.lemma3_constant);

struct RosenthalTerms {
  // T_a(j) = (2n-1)!/2^{2n-1} / |l_j prod_{r!=j} (l_r^2 - l_j^2)|, j = 1..n.
  std::vector<HighReal> t;
  // Sign of the j-th term of the Weyl display at theta = pi, so that
  // r_a(pi) = sum_j sign[j] * t[j].
  std::vector<int> sign;
  // mu(j) = T_{0^n}(j); a probability vector on {1..n}.
  std::vector<HighReal> mu;

  HighReal ratio_at_pi() const;
  HighReal upper_bound_at_pi() const;  // sum_j t[j]
};

RosenthalTerms rosenthal_terms(const OddLabel& label);

struct WValues {
  // W_s = prod_{r>s} |((a_r+r)^2 - (a_s+s)^2) / (r^2 - s^2)|, s = 1..n.
  std::vector<HighReal> w;
  HighReal min;
  HighReal max;
  // Minimum over s < n only; W_n is an empty product and pins `min` to 1.
  std::optional<HighReal> min_nonempty;
  // log(max) / log(min) when min > 1.
  std::optional<double> exponent;
  // Literal evaluation of max_s W_s <= (min_s W_s)^{2n}.
  bool gap_claim_holds = true;
};

WValues w_values(const OddLabel& label);

struct ChainLine {
  std::string name;
  // Natural log of the line's value; empty when the value is 0.
  std::optional<double> log_value;
};

struct DimRatioBound {
  // d_a / d_{(0^n)} from the product formula, as an exact rational.
  BigRational exact_ratio;
  bool equals_dimension = false;
  // Number of entries after the zero prefix.
  int k = 0;
  std::vector<ChainLine> chain;
};

DimRatioBound dim_ratio_bound(const OddLabel& label);

enum class Regime { r1, r2, r3, unclassified };

const char* to_string(Regime regime);

struct RegimeReport {
  Regime primary = Regime::unclassified;
  std::vector<Regime> tags;
  double ratio_at_pi = 0.0;
  // sup over [eps, 2pi-eps] of 1 - (1-cos theta)(1-r(pi))/(2 a_n).
  std::optional<double> r1_decay;
  // min(1, n / ((sin theta/2)^{2n-1} min_{s<n} W_s)) at theta = pi.
  std::optional<double> r2_decay;
  // Integrated ratio over [eps, 2pi-eps].
  std::optional<double> r3_decay;
  double best = 1.0;
};

RegimeReport classify_regime(const FourierProfile& profile, double eps);

struct LemmaReport {
  OddLabel label;
  BigInt d;
  std::vector<BigInt> alpha;
  std::vector<BigInt> beta;
  double ratio_at_pi = 0.0;
  std::vector<CheckResult> checks;
  RegimeReport regime;
  RosenthalTerms terms;
  WValues w;
  DimRatioBound dim_ratio;
  std::optional<double> cube_root_constant;

  bool lemma_passed(const std::string& name) const;
};

LemmaReport make_lemma_report(const OddLabel& label, double eps,
                              const Tolerances& tol = kDefaultTolerances);

// Reports for every label, in input order.
std::vector<LemmaReport> lemma_sweep(const std::vector<OddLabel>& labels, double eps,
                                     unsigned threads, const Tolerances& tol = kDefaultTolerances);

}  // namespace somix
