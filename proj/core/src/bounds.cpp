#include "somix/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "somix/errors.hpp"
#include "somix/parallel.hpp"
#include "somix/weyl.hpp"

namespace somix {

namespace {

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(const HighReal& x) {
    const HighReal t = sum_ + x;
    if (abs(sum_) >= abs(x))
      compensation_ += (sum_ - t) + x;
    else
      compensation_ += (x - t) + sum_;
    sum_ = t;
  }
  HighReal value() const { return sum_ + compensation_; }

 private:
  HighReal sum_ = 0;
  HighReal compensation_ = 0;
};

struct Evaluation {
  BoundPoint point;
  HighReal boundary_max = 0;
};

Evaluation evaluate(const std::vector<CoefficientEntry>& table, long long t, std::size_t top_k) {
  Evaluation out;
  out.point.t = t;
  CompensatedSum sum;
  std::vector<LabelContribution> contributions;
  contributions.reserve(table.size());
  for (const auto& entry : table) {
    const HighReal d(entry.d);
    const HighReal c = d * d * pow(HighReal(entry.rho), 2 * t);
    sum.add(c);
    if (entry.on_boundary) out.boundary_max = std::max(out.boundary_max, c);
    contributions.push_back({entry.label, c});
  }
  out.point.bound_sq = sum.value();
  out.point.bound_tv = to_double(sqrt(out.point.bound_sq));
  out.point.bound_tv_half = out.point.bound_tv / 2;

  const std::size_t k = std::min(top_k, contributions.size());
  std::partial_sort(contributions.begin(), contributions.begin() + static_cast<long>(k),
                    contributions.end(), [](const auto& x, const auto& y) {
                      if (x.contribution != y.contribution) return x.contribution > y.contribution;
                      return x.label < y.label;
                    });
  contributions.resize(k);
  out.point.top = std::move(contributions);
  return out;
}

std::vector<OddLabel> non_convergent_labels(const std::vector<CoefficientEntry>& table,
                                            double gap) {
  std::vector<OddLabel> out;
  for (const auto& entry : table)
    if (std::abs(entry.rho) >= 1.0 - gap) out.push_back(entry.label);
  return out;
}

}  // namespace

void AngleLaw::validate() const {
  constexpr double pi = std::numbers::pi;
  switch (kind) {
    case Kind::fixed:
      if (!(parameter > 0.0 && parameter < 2 * pi))
        throw DomainError("fixed angle " + std::to_string(parameter) + " outside (0, 2pi)");
      break;
    case Kind::truncated_uniform:
      if (!(parameter > 0.0 && parameter < pi - 1.0))
        throw DomainError("truncation eps " + std::to_string(parameter) + " outside (0, pi - 1)");
      break;
    case Kind::uniform:
      break;
  }
}

std::string AngleLaw::to_string() const {
  char buf[64];
  switch (kind) {
    case Kind::fixed:
      std::snprintf(buf, sizeof buf, "fixed(%.17g)", parameter);
      return buf;
    case Kind::truncated_uniform:
      std::snprintf(buf, sizeof buf, "truncated_uniform(%.17g)", parameter);
      return buf;
    case Kind::uniform:
      return "uniform";
  }
  return "?";
}

double step_coefficient(const FourierProfile& profile, const AngleLaw& law, const Tolerances& tol) {
  law.validate();
  switch (law.kind) {
    case AngleLaw::Kind::fixed:
      return character_ratio(profile.label, law.parameter, tol);
    case AngleLaw::Kind::truncated_uniform:
      return integrated_ratio(profile, law.parameter);
    case AngleLaw::Kind::uniform:
      // Every cos(j theta), j >= 1, averages to zero over the full circle.
      return to_double(profile.alpha_tilde(0));
  }
  return 0.0;
}

double step_coefficient(const OddLabel& label, const AngleLaw& law, const Tolerances& tol) {
  law.validate();
  if (law.kind == AngleLaw::Kind::fixed) return character_ratio(label, law.parameter, tol);
  return step_coefficient(fourier_profile(label), law, tol);
}

std::vector<CoefficientEntry> coefficient_table(int n, const AngleLaw& law,
                                                const LabelBudget& budget,
                                                const BoundOptions& options) {
  law.validate();
  if (budget.n != n) throw DomainError("budget rank does not match n");
  std::vector<OddLabel> labels = enumerate_odd(budget);
  std::erase_if(labels, [](const OddLabel& a) { return a.is_trivial(); });
  if (labels.empty()) throw DomainError("label budget contains no nontrivial label");

  return parallel_map(labels.size(), options.threads, [&](std::size_t i) {
    const OddLabel& a = labels[i];
    CoefficientEntry entry{a, dimension(a), step_coefficient(a, law, options.tol),
                           a.total() == budget.max_total || a.top() == budget.max_top};
    return entry;
  });
}

BoundPoint evaluate_bound(const std::vector<CoefficientEntry>& table, long long t,
                          std::size_t top_k) {
  return evaluate(table, t, top_k).point;
}

BoundReport l2_bound(int n, const AngleLaw& law, const LabelBudget& budget,
                     const std::vector<long long>& t_grid, const BoundOptions& options) {
  if (t_grid.empty()) throw DomainError("empty t grid");
  for (long long t : t_grid)
    if (t <= 0) throw DomainError("t grid entries must be positive");

  BoundReport report;
  report.n = n;
  report.law = law;
  report.budget = budget;
  report.coefficients = coefficient_table(n, law, budget, options);
  report.non_convergent = non_convergent_labels(report.coefficients, options.tol.convergence_gap);

  for (long long t : t_grid) {
    Evaluation e = evaluate(report.coefficients, t, options.top_k);
    report.points.push_back(std::move(e.point));
    report.boundary_max.push_back(e.boundary_max);
  }

  report.truncation_note = "sum over " + std::to_string(report.coefficients.size()) +
                           " nontrivial labels with sum(a) <= " + std::to_string(budget.max_total) +
                           " and a_n <= " + std::to_string(budget.max_top) +
                           "; boundary_max is the largest contribution on the budget edge";
  if (!report.non_convergent.empty())
    report.truncation_note += "; " + std::to_string(report.non_convergent.size()) +
                              " label(s) with |rho| ~ 1 do not decay";
  return report;
}

MixingEstimate mixing_time_estimate(int n, const AngleLaw& law, const LabelBudget& budget,
                                    double target, const BoundOptions& options) {
  if (!(target > 0.0)) throw DomainError("target must be positive");
  const auto table = coefficient_table(n, law, budget, options);
  const auto stuck = non_convergent_labels(table, options.tol.convergence_gap);
  if (!stuck.empty())
    throw DomainError("non-convergent coefficient at label (" + stuck.front().to_string() +
                      ") under " + law.to_string());

  auto tv = [&](long long t) { return evaluate(table, t, 0).point.bound_tv; };

  long long lo = 0;  // tv(lo) > target (or lo = 0)
  long long hi = 1;
  while (tv(hi) > target) {
    lo = hi;
    if (hi > (std::numeric_limits<long long>::max() >> 2))
      throw ResourceError("mixing time search did not terminate");
    hi *= 2;
  }
  while (hi - lo > 1) {
    const long long mid = lo + (hi - lo) / 2;
    (tv(mid) > target ? lo : hi) = mid;
  }

  const Evaluation at = evaluate(table, hi, 1);
  MixingEstimate out;
  out.t = hi;
  out.target = target;
  out.bound_tv_at_t = at.point.bound_tv;
  out.bound_tv_before = tv(hi - 1);
  out.budget = budget;
  out.top_label = at.point.top.front().label;
  out.top_contribution = at.point.top.front().contribution;
  return out;
}

HighReal censoring_count(double c, long long t, double eps) {
  if (!std::isfinite(c) || c < 1.0) throw DomainError("censoring factor c must be >= 1");
  if (t < 0) throw DomainError("t must be nonnegative");
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("eps must lie in (0, 1)");
  const long long m = std::llround(c * static_cast<double>(t));
  if (m > 100'000'000) throw ResourceError("c*t too large for exact binomial tail");

  const HighReal q(eps);
  const HighReal p = HighReal(1) - q;

  // pmf(t) = C(m, t) p^t q^{m-t}, then pmf(j+1) = pmf(j) (m-j)/(j+1) p/q.
  HighReal binom = 1;
  for (long long i = 0; i < t; ++i) binom = binom * HighReal(m - i) / HighReal(i + 1);
  HighReal pmf = binom * pow(p, t) * pow(q, m - t);
  const HighReal odds = p / q;

  CompensatedSum tail;
  for (long long j = t; j <= m; ++j) {
    tail.add(pmf);
    pmf = pmf * HighReal(m - j) / HighReal(j + 1) * odds;
  }
  return tail.value();
}

}  // namespace somix
