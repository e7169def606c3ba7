#include "somix/labels.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "somix/errors.hpp"

namespace somix {
namespace {

TEST(Labels, ValidateOdd) {
  EXPECT_TRUE(validate_odd(OddLabel{{0, 0, 0}}));
  EXPECT_FALSE(validate_odd(OddLabel{{2, 1}}));
  EXPECT_TRUE(validate_odd(OddLabel{{1, 1}}));
  EXPECT_FALSE(validate_odd(OddLabel{{-1, 2}}));
  EXPECT_FALSE(validate_odd(OddLabel{{}}));
}

TEST(Labels, ValidateEven) {
  EXPECT_TRUE(validate_even(EvenLabel{{-1, 2}}));
  EXPECT_TRUE(validate_even(EvenLabel{{-3}}));
  EXPECT_FALSE(validate_even(EvenLabel{{-3, 2}}));
  EXPECT_FALSE(validate_even(EvenLabel{{0, 2, 1}}));
}

TEST(Labels, EnumerateExamples) {
  using V = std::vector<OddLabel>;
  EXPECT_EQ(enumerate_odd({1, 2, 2}), (V{{{0}}, {{1}}, {{2}}}));
  EXPECT_EQ(enumerate_odd({2, 1, 1}), (V{{{0, 0}}, {{0, 1}}}));
  EXPECT_EQ(enumerate_odd({2, 2, 2}), (V{{{0, 0}}, {{0, 1}}, {{0, 2}}, {{1, 1}}}));
}

TEST(Labels, EnumerateMatchesBoxFilter) {
  for (int n = 1; n <= 4; ++n) {
    for (int total = 0; total <= 7; ++total) {
      for (int top : {0, 1, 3, 7}) {
        const auto labels = enumerate_odd({n, total, top});
        const auto expected = oracle::box_filter(n, total, top);
        ASSERT_EQ(labels, expected) << "n=" << n << " total=" << total << " top=" << top;
        std::set<OddLabel> unique(labels.begin(), labels.end());
        EXPECT_EQ(unique.size(), labels.size());
        for (const auto& a : labels) EXPECT_TRUE(validate_odd(a));
      }
    }
  }
}

TEST(Labels, DoubledShiftsAreIncreasingOdd) {
  for (const auto& a : enumerate_odd({4, 8, 8})) {
    const auto L = a.doubled_shifts();
    for (std::size_t q = 0; q < L.size(); ++q) {
      EXPECT_EQ(L[q] % 2, 1);
      EXPECT_GT(L[q], 0);
      if (q) EXPECT_GT(L[q], L[q - 1]);
    }
  }
}

TEST(Labels, TextRoundTrip) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> len(1, 6), val(-5, 40);
  for (int trial = 0; trial < 200; ++trial) {
    OddLabel a;
    for (int i = len(rng); i > 0; --i) a.parts.push_back(val(rng));
    EXPECT_EQ(OddLabel::parse(a.to_string()), a);
  }
  EXPECT_EQ(OddLabel::parse("0,1,3").parts, (std::vector<int>{0, 1, 3}));
  EXPECT_THROW(OddLabel::parse(""), DomainError);
  EXPECT_THROW(OddLabel::parse("1,,2"), DomainError);
  EXPECT_THROW(OddLabel::parse("1,x"), DomainError);
}

TEST(Labels, InvalidBudget) {
  EXPECT_THROW(enumerate_odd({0, 1, 1}), DomainError);
  EXPECT_THROW(enumerate_odd({2, -1, 1}), DomainError);
}

}  // namespace
}  // namespace somix
