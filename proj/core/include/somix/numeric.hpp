#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace somix {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// 50 significant decimal digits; used for every quantity reported as
// "high precision" (Rosenthal terms, W values, bound sums, binomial tails).
using HighReal = boost::multiprecision::cpp_bin_float_50;

// Numerical knobs shared by all modules. One record so a caller (or the CLI)
// can tighten or relax everything in one place.
struct Tolerances {
  // Character evaluation refuses |theta mod 2pi| below this.
  double theta_cutoff = 1e-6;
  // Slack allowed on |r_a(theta)| <= 1.
  double ratio_slack = 1e-9;
  // Labels with |rho_a| >= 1 - convergence_gap are flagged as non-convergent.
  double convergence_gap = 1e-12;
  // Walk re-orthonormalization threshold on max |X^T X - I|.
  double orthogonality_drift = 1e-10;
  int drift_check_interval = 64;
  // Brute-force branching enumeration refuses labels with more paths.
  std::uint64_t path_cap = 10'000'000;
  // Threshold for alpha~_0 / (alpha~_0 - alpha~_1)^{1/3}.
  double lemma3_constant = 4.0;
};

inline constexpr Tolerances kDefaultTolerances{};

inline double to_double(const HighReal& x) { return x.convert_to<double>(); }
inline double to_double(const BigInt& x) { return x.convert_to<double>(); }

}  // namespace somix
