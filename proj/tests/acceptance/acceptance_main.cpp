// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "somix/bounds.hpp"
#include "somix/branching.hpp"
#include "somix/diagnostics.hpp"
#include "somix/parallel.hpp"
#include "somix/walk.hpp"
#include "somix/weyl.hpp"

namespace {

using namespace somix;
using Clock = std::chrono::steady_clock;
constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const Outcome& o) {
  std::printf("%s [%d] %s: %s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str());
  std::fflush(stdout);
  failures += !o.pass;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<OddLabel> sweep(int max_n, int max_sum) {
  std::vector<OddLabel> out;
  for (int n = 1; n <= max_n; ++n)
    for (auto& a : oracle::box_filter(n, max_sum, max_sum)) out.push_back(std::move(a));
  return out;
}

std::string fmt(const char* format, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, x);
  return buf;
}

Outcome dimension_branching() {
  const auto start = Clock::now();
  Outcome o;
  const auto stated = sweep(3, 5);
  const auto extended = sweep(4, 7);
  std::size_t mismatches = 0;
  for (const auto* labels : {&stated, &extended})
    for (const auto& a : *labels) {
      BigInt total = 0;
      for (const auto& x : fourier_profile(a).alpha) total += x;
      if (total != dimension(a)) {
        ++mismatches;
        o.pass = false;
      }
    }
  const double elapsed = seconds_since(start);
  if (elapsed >= 120.0) o.pass = false;
  std::ostringstream s;
  s << stated.size() << " labels (n<=3, sum<=5) + " << extended.size() << " labels (n<=4, sum<=7), " << mismatches
    << " mismatches, " << fmt("%.2f", elapsed) << " s";
  o.detail = s.str();
  return o;
}

Outcome character_identity() {
  Outcome o;
  double worst = 0.0;
  std::string worst_label;
  std::size_t count = 0;
  for (const auto& a : sweep(4, 4)) {
    const auto p = fourier_profile(a);
    const double d = to_double(p.d);
    ++count;
    for (int k = 1; k <= 50; ++k) {
      const double theta = 2 * kPi * k / 51.0;
      double series = 0.0;
      for (int j = 0; j <= p.m(); ++j) series += to_double(p.alpha[j]) * std::cos(j * theta);
      const double err = std::abs(character_value(a, theta).value - series) / d;
      if (err > worst) {
        worst = err;
        worst_label = a.to_string();
      }
    }
  }
  o.pass = worst <= 1e-8;
  o.detail = std::to_string(count) + " labels x 50 angles, max |c - sum alpha cos|/d = " + fmt("%.3g", worst) +
             (worst_label.empty() ? "" : " at (" + worst_label + ")");
  return o;
}

Outcome lemma_suite() {
  Outcome o;
  std::vector<OddLabel> labels = sweep(3, 5);
  std::mt19937_64 rng(4'000'000'004ULL);
  std::uniform_int_distribution<int> part(0, 6);
  for (int i = 0; i < 100; ++i) {
    OddLabel a;
    for (int q = 0; q < 4; ++q) a.parts.push_back(part(rng));
    std::sort(a.parts.begin(), a.parts.end());
    labels.push_back(a);
  }
  std::size_t l1 = 0, l2 = 0;
  std::string failed;
  for (const auto& a : labels) {
    const auto p = fourier_profile(a);
    const auto c1 = check_lemma1(p);
    const auto c2 = check_lemma2(p);
    l1 += c1.passed();
    l2 += c2.passed();
    if (!c1.passed() || !c2.passed()) {
      std::string why;
      for (const auto* c : {&c1, &c2})
        if (!c->passed()) {
          why += c->name;
          for (const auto& w : c->witness)
            if (w.name == "relation") why += " [" + w.value + "]";
        }
      failed += (failed.empty() ? "" : "; ") + std::string("(") + a.to_string() + ") " + why;
    }
  }
  o.pass = l1 == labels.size() && l2 == labels.size();
  std::ostringstream s;
  s << labels.size() << " labels, lemma1 " << l1 << "/" << labels.size() << ", lemma2 " << l2 << "/"
    << labels.size();
  if (!failed.empty()) s << "; failing: " << failed;
  o.detail = s.str();
  return o;
}

Outcome rosenthal_normalization() {
  Outcome o;
  double worst_sum = 0.0;
  for (int n = 1; n <= 12; ++n) {
    HighReal sum = 0;
    for (const auto& x : rosenthal_terms(OddLabel::trivial(n)).mu) sum += x;
    worst_sum = std::max(worst_sum, std::abs(to_double(sum) - 1.0));
  }
  double worst_excess = -1e300;
  std::size_t count = 0;
  const auto stated = sweep(3, 5);
  const auto extended = sweep(4, 7);
  for (const auto* labels : {&stated, &extended}) {
    for (const auto& a : *labels) {
      const auto terms = rosenthal_terms(a);
      for (std::size_t j = 0; j < terms.t.size(); ++j)
        worst_excess = std::max(worst_excess, to_double(terms.t[j] - terms.mu[j]));
      ++count;
    }
  }
  o.pass = worst_sum <= 1e-9 && worst_excess <= 1e-12;
  o.detail = "max |sum mu - 1| (n=1..12) = " + fmt("%.3g", worst_sum) + ", max T - mu over " +
             std::to_string(count) + " labels = " + fmt("%.3g", worst_excess);
  return o;
}

Outcome dp_vs_brute_force() {
  Outcome o;
  std::size_t count = 0, mismatches = 0;
  for (const auto& a : sweep(3, 4)) {
    ++count;
    if (!(fourier_profile(a) == brute_force_profile(a))) ++mismatches;
  }
  o.pass = mismatches == 0;
  o.detail = std::to_string(count) + " labels, " + std::to_string(mismatches) + " mismatches";
  return o;
}

Outcome bound_behavior() {
  Outcome o;
  const std::vector<long long> grid{1, 2, 3, 4, 5, 6, 8, 10, 12, 16, 20, 24, 32, 48, 64};
  std::size_t time_violations = 0, budget_violations = 0, curves = 0;
  for (int n = 1; n <= 3; ++n) {
    for (const auto& law : {AngleLaw::fixed(kPi / 2), AngleLaw::fixed(2.5), AngleLaw::truncated_uniform(0.5),
                            AngleLaw::uniform()}) {
      std::vector<BoundReport> nested;
      for (int M : {2, 4, 6}) nested.push_back(l2_bound(n, law, {n, M, M}, grid));
      for (std::size_t b = 0; b < nested.size(); ++b) {
        ++curves;
        for (std::size_t i = 0; i < grid.size(); ++i) {
          if (i && !(nested[b].points[i].bound_sq < nested[b].points[i - 1].bound_sq)) ++time_violations;
          if (b && nested[b].points[i].bound_sq < nested[b - 1].points[i].bound_sq) ++budget_violations;
        }
      }
    }
  }
  double worst = 0.0;
  for (double theta : {0.3, kPi / 2, 2.0, kPi, 4.0, 5.5}) {
    for (int M : {1, 3, 6, 10}) {
      const auto report = l2_bound(1, AngleLaw::fixed(theta), {1, M, M}, grid);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        double expected = 0.0;
        for (int l = 1; l <= M; ++l) {
          const double d = 2 * l + 1;
          expected += d * d * std::pow(oracle::so3_character(l, theta) / d, 2 * grid[i]);
        }
        worst = std::max(worst, std::abs(to_double(report.points[i].bound_sq) - expected));
      }
    }
  }
  o.pass = time_violations == 0 && budget_violations == 0 && worst <= 1e-10;
  std::ostringstream s;
  s << curves << " curves: " << time_violations << " non-decreasing steps in t, " << budget_violations
    << " budget inversions; SO(3) max |bound - classical| = " << fmt("%.3g", worst);
  o.detail = s.str();
  return o;
}

Outcome integrated_ratio_quadrature() {
  Outcome o;
  double worst = 0.0;
  std::size_t count = 0;
  for (const auto& a : sweep(3, 4)) {
    for (double eps : {0.3, 0.5, 1.0}) {
      const double quad = oracle::mean_over_arc([&](double th) { return character_ratio(a, th); }, eps);
      worst = std::max(worst, std::abs(integrated_ratio(a, eps) - quad));
      ++count;
    }
  }
  o.pass = worst <= 1e-6;
  o.detail = std::to_string(count) + " (label, eps) pairs, max |closed form - quadrature| = " + fmt("%.3g", worst);
  return o;
}

Outcome monte_carlo_decay() {
  const auto start = Clock::now();
  Outcome o;
  WalkConfig config;
  config.N = 5;
  config.kind = WalkKind::rosenthal_conjugacy;
  config.law = AngleLaw::fixed(kPi / 2);
  config.steps = 15;
  config.trials = 100'000;
  config.threads = default_threads();
  std::string detail;
  std::uint64_t seed = 8;
  for (const auto& label : {OddLabel{{0, 1}}, OddLabel{{1, 1}}, OddLabel{{0, 2}}}) {
    config.seed = seed++;
    const auto r = character_decay_check(config, label);
    if (!(r.max_abs_z <= 4.0)) o.pass = false;
    detail += r.character + " max|z| = " + fmt("%.2f", r.max_abs_z) + ", ";
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 300.0) o.pass = false;
  o.detail = detail + fmt("%.1f", elapsed) + " s";
  return o;
}

Outcome one_step_exactness() {
  Outcome o;
  double worst = 0.0;
  long long trials = 0;
  for (int N : {3, 5, 8, 13}) {
    for (double theta : {0.1, kPi / 2, 2.0, kPi, 5.9}) {
      WalkConfig config;
      config.N = N;
      config.law = AngleLaw::fixed(theta);
      const double expected = oracle::standard_trace(N, theta);
      const Matrix I = Matrix::Identity(N, N);
      for (std::uint64_t k = 0; k < 2000; ++k) {
        Rng rng = trial_stream(99, k);
        const Matrix X = step(I, config, rng);
        worst = std::max(worst, std::abs(X.trace() - expected));
        ++trials;
      }
    }
  }
  o.pass = worst <= 1e-13;
  o.detail = std::to_string(trials) + " trials, max |Tr X_1 - (N - 2 + 2 cos theta)| = " + fmt("%.3g", worst);
  return o;
}

Outcome censoring_reference() {
  Outcome o;
  double worst = 0.0;
  int points = 0;
  for (double c : {1.0, 1.5, 2.0, 3.0, 4.0})
    for (long long t : {5, 20})
      for (double eps : {0.1, 0.5}) {
        const double ref = oracle::binomial_tail_reference(std::llround(c * t), t, eps);
        worst = std::max(worst, std::abs(to_double(censoring_count(c, t, eps)) - ref));
        ++points;
      }
  o.pass = worst <= 1e-12;
  o.detail = std::to_string(points) + " grid points, max |exact - reference| = " + fmt("%.3g", worst);
  return o;
}

}  // namespace

int main() {
  report(1, "dimension/branching consistency", dimension_branching());
  report(2, "character identity", character_identity());
  report(3, "lemma suite", lemma_suite());
  report(4, "rosenthal-term normalization", rosenthal_normalization());
  report(5, "dp vs brute force", dp_vs_brute_force());
  report(6, "bound behavior", bound_behavior());
  report(7, "integrated ratio", integrated_ratio_quadrature());
  report(8, "monte carlo decay", monte_carlo_decay());
  report(9, "one-step exactness", one_step_exactness());
  report(10, "censoring count", censoring_reference());
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
