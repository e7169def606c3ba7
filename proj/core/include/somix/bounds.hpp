#pragma once

#include <string>
#include <vector>

#include "somix/branching.hpp"
#include "somix/labels.hpp"
#include "somix/numeric.hpp"

namespace somix {

// Distribution of the rotation angle of one walk step.
struct AngleLaw {
  enum class Kind { fixed, truncated_uniform, uniform };

  Kind kind = Kind::uniform;
  // theta for fixed, eps for truncated_uniform, unused for uniform.
  double parameter = 0.0;

  static AngleLaw fixed(double theta) { return {Kind::fixed, theta}; }
  static AngleLaw truncated_uniform(double eps) { return {Kind::truncated_uniform, eps}; }
  static AngleLaw uniform() { return {Kind::uniform, 0.0}; }

  // Throws DomainError unless theta in (0, 2pi) or eps in (0, pi - 1).
  void validate() const;
  std::string to_string() const;
};

// Per-step Fourier scalar of a conjugation-invariant step law at irrep a,
// rho_a = E_law[r_a(theta)].
double step_coefficient(const FourierProfile& profile, const AngleLaw& law,
                        const Tolerances& tol = kDefaultTolerances);
double step_coefficient(const OddLabel& label, const AngleLaw& law,
                        const Tolerances& tol = kDefaultTolerances);

struct LabelContribution {
  OddLabel label;
  HighReal contribution;  // d_a^2 rho_a^{2t}
};

struct BoundPoint {
  long long t = 0;
  HighReal bound_sq;           // sum over a != 0^n of d_a^2 rho_a^{2t}
  double bound_tv = 0.0;       // sqrt(bound_sq)
  double bound_tv_half = 0.0;  // sqrt(bound_sq) / 2
  std::vector<LabelContribution> top;
};

struct CoefficientEntry {
  OddLabel label;
  BigInt d;
  double rho = 0.0;
  bool on_boundary = false;  // sum a == max_total or a_n == max_top
};

struct BoundReport {
  int n = 1;
  AngleLaw law;
  LabelBudget budget;
  std::vector<CoefficientEntry> coefficients;  // nontrivial labels, sorted
  std::vector<BoundPoint> points;
  // Nontrivial labels with |rho_a| >= 1 - convergence_gap.
  std::vector<OddLabel> non_convergent;
  // Largest single contribution among labels on the budget boundary at each t;
  // a truncation-error indicator, not a tail bound.
  std::vector<HighReal> boundary_max;
  std::string truncation_note;
};

struct BoundOptions {
  std::size_t top_k = 3;
  unsigned threads = 1;
  Tolerances tol = kDefaultTolerances;
};

// Coefficients rho_a for every nontrivial label within the budget, in label
// order. Throws DomainError when the truncation leaves no nontrivial label.
std::vector<CoefficientEntry> coefficient_table(int n, const AngleLaw& law,
                                                const LabelBudget& budget,
                                                const BoundOptions& options = {});

// Truncated L^2 bound sum_{a != 0^n} d_a^2 rho_a^{2t} on each t of t_grid.
BoundReport l2_bound(int n, const AngleLaw& law, const LabelBudget& budget,
                     const std::vector<long long>& t_grid, const BoundOptions& options = {});

// One point of the bound from an existing coefficient table.
BoundPoint evaluate_bound(const std::vector<CoefficientEntry>& table, long long t,
                          std::size_t top_k);

struct MixingEstimate {
  long long t = 0;
  double target = 0.0;
  double bound_tv_at_t = 0.0;
  double bound_tv_before = 0.0;  // at t - 1 (infinity-free: bound at t = 0 is sum d^2)
  LabelBudget budget;
  OddLabel top_label;
  HighReal top_contribution;
};

// Smallest t with sqrt(bound_sq(t)) <= target, by doubling then bisection.
// Throws DomainError naming the first non-convergent label, if any.
MixingEstimate mixing_time_estimate(int n, const AngleLaw& law, const LabelBudget& budget,
                                    double target, const BoundOptions& options = {});

// P[#K >= t] for #K ~ Binomial(m, 1 - eps), m = round(c t):
//   sum_{j=t}^{m} C(m, j) (1-eps)^j eps^{m-j}.
// Requires c >= 1, t >= 0, eps in (0, 1).
HighReal censoring_count(double c, long long t, double eps);

}  // namespace somix
