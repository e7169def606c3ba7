#include "somix/weyl.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "somix/errors.hpp"

namespace somix {
namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> theta_grid(int points, double margin) {
  std::vector<double> grid;
  for (int i = 0; i < points; ++i)
    grid.push_back(margin + (2 * kPi - 2 * margin) * i / (points - 1));
  return grid;
}

TEST(Dimension, KnownValues) {
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(dimension(OddLabel::trivial(n)), 1);
  for (int l = 0; l <= 20; ++l) EXPECT_EQ(dimension(OddLabel{{l}}), 2 * l + 1);
  EXPECT_EQ(dimension(OddLabel{{0, 1}}), 5);
  EXPECT_EQ(dimension(OddLabel{{1, 1}}), 10);
  EXPECT_EQ(dimension(OddLabel{{0, 2}}), 14);
  // SO(7): standard, exterior square, traceless symmetric square.
  EXPECT_EQ(dimension(OddLabel{{0, 0, 1}}), 7);
  EXPECT_EQ(dimension(OddLabel{{0, 1, 1}}), 21);
  EXPECT_EQ(dimension(OddLabel{{0, 0, 2}}), 27);
  EXPECT_THROW(dimension(OddLabel{{1, 0}}), DomainError);
}

TEST(Dimension, EqualsBranchingPathCount) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& a : enumerate_odd({n, 6, 6})) EXPECT_EQ(dimension(a), fourier_profile(a).d) << a.to_string();
}

TEST(Character, TrivialIsOne) {
  for (int n = 1; n <= 6; ++n) {
    const auto cv = character_value(OddLabel::trivial(n), kPi / 2);
    EXPECT_NEAR(cv.value, 1.0, 1e-14);
    EXPECT_NEAR(cv.ratio, 1.0, 1e-14);
  }
}

TEST(Character, StandardRepMatchesMatrixTrace) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> parts(static_cast<std::size_t>(n), 0);
    parts.back() = 1;
    for (double theta : theta_grid(23, 0.05)) {
      const auto cv = character_value(OddLabel{parts}, theta);
      const double trace = oracle::standard_trace(2 * n + 1, theta);
      EXPECT_NEAR(cv.value, trace, 1e-12);
      EXPECT_NEAR(cv.ratio, trace / (2 * n + 1), 1e-13);
    }
  }
  EXPECT_NEAR(character_ratio(OddLabel{{0, 1}}, kPi), 0.2, 1e-15);
}

TEST(Character, So3MatchesClassicalCharacter) {
  for (int l = 0; l <= 10; ++l)
    for (double theta : theta_grid(31, 0.02))
      EXPECT_NEAR(character_value(OddLabel{{l}}, theta).value, oracle::so3_character(l, theta), 1e-11);
}

TEST(Character, MatchesBranchingExpansion) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& a : enumerate_odd({n, 5, 5})) {
      const auto p = fourier_profile(a);
      const double d = to_double(p.d);
      for (double theta : theta_grid(50, 0.05)) {
        double series = 0.0;
        for (int j = 0; j <= p.m(); ++j) series += to_double(p.alpha[j]) * std::cos(j * theta);
        const auto cv = character_value(a, theta);
        EXPECT_LE(std::abs(cv.value - series), 1e-8 * d) << a.to_string() << " theta=" << theta;
        EXPECT_LE(std::abs(cv.ratio), 1.0 + 1e-9);
      }
    }
  }
}

TEST(Character, ApproachesOneNearIdentity) {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& a : enumerate_odd({n, 3 * n, 3})) {
      const double r1 = character_ratio(a, 0.1);
      const double r2 = character_ratio(a, 0.01);
      const double r3 = character_ratio(a, 0.001);
      EXPECT_LE(r1, r2 + 1e-15) << a.to_string();
      EXPECT_LE(r2, r3 + 1e-15) << a.to_string();
      EXPECT_LE(1.0 - r3, 1e-3) << a.to_string();
    }
  }
}

TEST(Character, HighRankNearCutoffStaysBounded) {
  // 23 factors of 1/sin(theta/2) ~ 1e6 each: exercises the widest tier.
  const auto cv = character_value(OddLabel{{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2}}, 2e-6);
  EXPECT_LE(std::abs(cv.ratio), 1.0 + 1e-9);
  EXPECT_NEAR(cv.ratio, 1.0, 1e-9);
}

TEST(Character, RejectsSingularAngles) {
  const OddLabel a{{0, 1}};
  EXPECT_THROW(character_value(a, 0.0), DomainError);
  EXPECT_THROW(character_value(a, 1e-7), DomainError);
  EXPECT_THROW(character_value(a, 2 * kPi - 1e-7), DomainError);
  EXPECT_THROW(character_value(a, -1.0), DomainError);
  EXPECT_THROW(character_value(a, 7.0), DomainError);
  EXPECT_THROW(character_value(a, std::nan("")), DomainError);
  Tolerances loose;
  loose.theta_cutoff = 1e-3;
  EXPECT_THROW(character_value(a, 1e-4, loose), DomainError);
}

TEST(IntegratedRatio, Examples) {
  for (int n = 1; n <= 4; ++n)
    for (double eps : {0.1, 0.5, 2.0}) EXPECT_NEAR(integrated_ratio(OddLabel::trivial(n), eps), 1.0, 1e-15);

  const double expected = 1.0 / 3 - (2.0 / 3) * std::sin(0.5) / (kPi - 0.5);
  EXPECT_NEAR(integrated_ratio(OddLabel{{1}}, 0.5), expected, 1e-15);

  const OddLabel standard{{0, 1}};
  const double quad = oracle::mean_over_arc([&](double th) { return (3 + 2 * std::cos(th)) / 5; }, 0.5);
  EXPECT_NEAR(integrated_ratio(standard, 0.5), quad, 1e-6);

  EXPECT_THROW(integrated_ratio(standard, 0.0), DomainError);
  EXPECT_THROW(integrated_ratio(standard, kPi - 1.0), DomainError);
}

TEST(IntegratedRatio, MatchesQuadratureOfWeylRatio) {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& a : enumerate_odd({n, 4, 4})) {
      for (double eps : {0.3, 0.5, 1.0}) {
        const double quad = oracle::mean_over_arc([&](double th) { return character_ratio(a, th); }, eps);
        EXPECT_NEAR(integrated_ratio(a, eps), quad, 1e-6) << a.to_string() << " eps=" << eps;
      }
    }
  }
}

}  // namespace
}  // namespace somix
