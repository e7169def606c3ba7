#include "somix/bounds.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "somix/errors.hpp"
#include "somix/weyl.hpp"

namespace somix {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(StepCoefficient, Examples) {
  for (const auto& law : {AngleLaw::fixed(1.0), AngleLaw::truncated_uniform(0.5), AngleLaw::uniform()})
    EXPECT_NEAR(step_coefficient(OddLabel::trivial(3), law), 1.0, 1e-14) << law.to_string();
  const OddLabel standard{{0, 1}};
  EXPECT_NEAR(step_coefficient(standard, AngleLaw::fixed(kPi)), 0.2, 1e-15);
  EXPECT_NEAR(step_coefficient(standard, AngleLaw::uniform()), 0.6, 1e-15);
  EXPECT_NEAR(step_coefficient(standard, AngleLaw::truncated_uniform(0.5)),
              integrated_ratio(standard, 0.5), 1e-15);
}

TEST(AngleLaw, Validation) {
  EXPECT_THROW(AngleLaw::fixed(0.0).validate(), DomainError);
  EXPECT_THROW(AngleLaw::fixed(2 * kPi).validate(), DomainError);
  EXPECT_THROW(AngleLaw::truncated_uniform(kPi - 1.0).validate(), DomainError);
  EXPECT_NO_THROW(AngleLaw::truncated_uniform(2.0).validate());
  EXPECT_NO_THROW(AngleLaw::uniform().validate());
}

TEST(L2Bound, So3DecaysToZero) {
  const auto report = l2_bound(1, AngleLaw::fixed(kPi / 2), {1, 3, 3}, {1, 2, 4, 8, 16, 64, 256});
  for (std::size_t i = 1; i < report.points.size(); ++i)
    EXPECT_LT(report.points[i].bound_sq, report.points[i - 1].bound_sq);
  EXPECT_LT(report.points.back().bound_sq, 1e-20);
  EXPECT_TRUE(report.non_convergent.empty());
}

TEST(L2Bound, So3MatchesClassicalCharacterSum) {
  for (double theta : {0.4, kPi / 2, 2.0, kPi, 5.0}) {
    for (int M : {1, 4, 9}) {
      std::vector<long long> grid{1, 2, 3, 5, 10, 40};
      const auto report = l2_bound(1, AngleLaw::fixed(theta), {1, M, M}, grid);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        double expected = 0.0;
        for (int l = 1; l <= M; ++l) {
          const double d = 2 * l + 1;
          const double r = oracle::so3_character(l, theta) / d;
          expected += d * d * std::pow(r, 2 * grid[i]);
        }
        EXPECT_NEAR(to_double(report.points[i].bound_sq), expected, 1e-10)
            << "theta=" << theta << " M=" << M << " t=" << grid[i];
      }
    }
  }
}

TEST(L2Bound, FixedPiDecreasesOnSo5) {
  const auto report = l2_bound(2, AngleLaw::fixed(kPi), {2, 3, 3}, {1, 2});
  EXPECT_LT(report.points[1].bound_sq, report.points[0].bound_sq);
  ASSERT_EQ(report.points[0].top.size(), 3u);
  EXPECT_GE(report.points[0].top[0].contribution, report.points[0].top[1].contribution);
}

TEST(L2Bound, UniformLawUsesAlphaZero) {
  const auto report = l2_bound(2, AngleLaw::uniform(), {2, 3, 3}, {1});
  for (const auto& entry : report.coefficients)
    EXPECT_NEAR(entry.rho, to_double(fourier_profile(entry.label).alpha_tilde(0)), 1e-15);
  EXPECT_EQ(report.coefficients.size(), enumerate_odd({2, 3, 3}).size() - 1);
}

TEST(L2Bound, MonotoneInTimeAndBudget) {
  const std::vector<long long> grid{1, 2, 3, 4, 6, 8, 12, 16, 24, 32};
  for (const auto& law : {AngleLaw::fixed(kPi / 2), AngleLaw::truncated_uniform(0.5), AngleLaw::uniform()}) {
    const auto small = l2_bound(2, law, {2, 3, 3}, grid);
    const auto large = l2_bound(2, law, {2, 5, 5}, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (i) EXPECT_LT(small.points[i].bound_sq, small.points[i - 1].bound_sq) << law.to_string();
      EXPECT_GE(large.points[i].bound_sq, small.points[i].bound_sq) << law.to_string();
    }
  }
}

TEST(L2Bound, TvConventions) {
  const auto report = l2_bound(2, AngleLaw::uniform(), {2, 2, 2}, {3});
  const auto& p = report.points[0];
  EXPECT_NEAR(p.bound_tv, std::sqrt(to_double(p.bound_sq)), 1e-15);
  EXPECT_DOUBLE_EQ(p.bound_tv_half, p.bound_tv / 2);
  ASSERT_EQ(report.boundary_max.size(), 1u);
  EXPECT_GT(report.boundary_max[0], 0);
}

TEST(L2Bound, Errors) {
  EXPECT_THROW(l2_bound(2, AngleLaw::uniform(), {2, 0, 0}, {1}), DomainError);
  EXPECT_THROW(l2_bound(2, AngleLaw::uniform(), {2, 2, 2}, {}), DomainError);
  EXPECT_THROW(l2_bound(2, AngleLaw::uniform(), {2, 2, 2}, {0}), DomainError);
  EXPECT_THROW(l2_bound(2, AngleLaw::uniform(), {3, 2, 2}, {1}), DomainError);
}

TEST(L2Bound, FlagsNonConvergentLabels) {
  // At theta = 1.5e-6, 1 - r_(1) = (1 - cos theta) * 2/3 ~ 7.5e-13.
  const auto law = AngleLaw::fixed(1.5e-6);
  const auto report = l2_bound(1, law, {1, 1, 1}, {1});
  ASSERT_EQ(report.non_convergent.size(), 1u);
  EXPECT_EQ(report.non_convergent[0], OddLabel{{1}});
  try {
    mixing_time_estimate(1, law, {1, 1, 1}, 1e-2);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("(1)"), std::string::npos);
  }
}

TEST(MixingTime, BisectionContract) {
  const LabelBudget budget{1, 6, 6};
  const auto law = AngleLaw::fixed(kPi / 2);
  const auto est = mixing_time_estimate(1, law, budget, 1e-2);
  const auto table = coefficient_table(1, law, budget);
  EXPECT_GT(evaluate_bound(table, est.t - 1, 1).bound_tv, 1e-2);
  EXPECT_LE(evaluate_bound(table, est.t, 1).bound_tv, 1e-2);
  EXPECT_DOUBLE_EQ(est.bound_tv_at_t, evaluate_bound(table, est.t, 1).bound_tv);
  EXPECT_FALSE(est.top_label.parts.empty());

  const auto truncated = mixing_time_estimate(2, AngleLaw::truncated_uniform(0.5), {2, 4, 4}, 1e-2);
  EXPECT_GT(truncated.t, 0);
  EXPECT_GT(truncated.bound_tv_before, 1e-2);
}

TEST(MixingTime, GrowsWithRank) {
  long long previous = 0;
  for (int n = 1; n <= 4; ++n) {
    const auto est = mixing_time_estimate(n, AngleLaw::fixed(kPi / 2), {n, 4, 4}, 1e-2);
    EXPECT_GT(est.t, previous) << n;
    previous = est.t;
  }
}

TEST(Censoring, Examples) {
  for (double eps : {0.1, 0.5, 0.9}) EXPECT_EQ(censoring_count(2.0, 0, eps), 1);
  const double v = to_double(censoring_count(3.0, 10, 0.1));
  EXPECT_GT(v, 0.999);
  EXPECT_LT(v, 1.0);
  for (long long t : {1, 5, 20}) EXPECT_NEAR(to_double(censoring_count(1.0, t, 0.5)), std::pow(0.5, t), 1e-300);
}

TEST(Censoring, MatchesReference) {
  for (double c : {1.0, 1.5, 2.0, 3.0})
    for (long long t : {1, 7, 40})
      for (double eps : {0.05, 0.3, 0.7}) {
        const long long m = std::llround(c * t);
        EXPECT_NEAR(to_double(censoring_count(c, t, eps)), oracle::binomial_tail_reference(m, t, eps), 1e-12);
      }
}

TEST(Censoring, Monotonicity) {
  for (long long t : {1, 4, 12, 30}) {
    for (double eps : {0.1, 0.3, 0.6}) {
      // Nondecreasing in c.
      for (int c = 1; c < 5; ++c)
        EXPECT_LE(censoring_count(c, t, eps), censoring_count(c + 1, t, eps));
      // Nonincreasing in eps.
      for (int c = 1; c <= 4; ++c)
        EXPECT_GE(censoring_count(c, t, eps), censoring_count(c, t, eps + 0.2));
    }
  }
  // Nonincreasing in t while the expected count c(1-eps) t stays below t.
  for (int c : {1, 2})
    for (double eps : {0.5, 0.6, 0.8})
      for (long long t = 1; t < 40; ++t)
        EXPECT_GE(censoring_count(c, t, eps), censoring_count(c, t + 1, eps)) << c << " " << eps << " " << t;
}

TEST(Censoring, Errors) {
  EXPECT_THROW(censoring_count(0.5, 3, 0.1), DomainError);
  EXPECT_THROW(censoring_count(2.0, -1, 0.1), DomainError);
  EXPECT_THROW(censoring_count(2.0, 3, 0.0), DomainError);
  EXPECT_THROW(censoring_count(2.0, 3, 1.0), DomainError);
}

}  // namespace
}  // namespace somix
