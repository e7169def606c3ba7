#pragma once

#include <cstdint>
#include <vector>

#include "somix/labels.hpp"
#include "somix/numeric.hpp"

namespace somix {

// Restriction of an SO(2n+1) irrep to the planar SO(2) through the
// multiplicity-free chain SO(2n+1) > SO(2n) > SO(2n-1) > ... > SO(3) > SO(2).
//
//   alpha[j]  coefficient of cos(j theta) in the restricted character;
//             alpha[0] counts chains ending at SO(2) weight 0 and
//             alpha[j] (j >= 1) those ending at +j or -j.
//   beta[j]   multiplicity of the SO(3) irrep (j) in the restriction.
//   d         sum of alpha, i.e. the total number of branching chains.
//
// Both sequences have length a_n + 1; entries beyond a_n vanish.
struct FourierProfile {
  OddLabel label;
  BigInt d;
  std::vector<BigInt> alpha;
  std::vector<BigInt> beta;

  int m() const { return static_cast<int>(alpha.size()) - 1; }
  BigInt alpha_at(int j) const { return j >= 0 && j <= m() ? alpha[j] : BigInt(0); }
  BigInt beta_at(int j) const {
    return j >= 0 && j < static_cast<int>(beta.size()) ? beta[j] : BigInt(0);
  }

  // alpha_j / d and beta_j / d.
  HighReal alpha_tilde(int j) const;
  HighReal beta_tilde(int j) const;

  // r_a(pi) = sum_j alpha~_j (-1)^j.
  HighReal ratio_at_pi() const;
  // sum_j alpha~_j cos(j theta), the branching-side character ratio.
  HighReal ratio_series(double theta) const;

  friend bool operator==(const FourierProfile&, const FourierProfile&) = default;
};

// All SO(2n) labels b with |b_1| <= a_1 <= b_2 <= a_2 <= ... <= b_n <= a_n.
std::vector<EvenLabel> restrict_odd_to_even(const OddLabel& a);

// All SO(2n-1) labels a with |b_1| <= a_1 <= b_2 <= ... <= a_{n-1} <= b_n.
// Empty for n = 1: the chain ends at SO(2).
std::vector<OddLabel> restrict_even_to_odd(const EvenLabel& b);

// Level-by-level dynamic program over multiplicity maps.
FourierProfile fourier_profile(const OddLabel& a);

// Same result by walking every branching chain explicitly. Throws
// ResourceError once more than `path_cap` chains have been visited.
FourierProfile brute_force_profile(const OddLabel& a,
                                   std::uint64_t path_cap = kDefaultTolerances.path_cap);

}  // namespace somix
