#pragma once

#include "somix/branching.hpp"
#include "somix/labels.hpp"
#include "somix/numeric.hpp"

namespace somix {

// Trace of an SO(2n+1) irrep at the planar rotation R(1,2;theta), and its
// normalization by the dimension.
struct CharacterValue {
  double theta = 0.0;
  double value = 0.0;  // c_a(theta)
  double ratio = 0.0;  // r_a(theta) = c_a(theta) / d_a
};

// Weyl dimension, evaluated exactly on the doubled shifts L_q = 2a_q + 2q - 1:
//
//   d_a = prod_q L_q * prod_{s<r} (L_r^2 - L_s^2) / (4^{n(n-1)/2} prod_{k=1}^n (2k-1)!)
//
// Throws ConsistencyError if the quotient is not exact.
BigInt dimension(const OddLabel& label);

// Character at R(1,2;theta) from the limit form of the Weyl character formula,
//
//   r_a(theta) = (2n-1)! / (2 sin(theta/2))^{2n-1}
//                * sum_j sin(l_j theta) / (l_j prod_{r != j} (l_r^2 - l_j^2)),
//
// with l_q = a_q + q - 1/2. The alternating sum loses about
// (2n-1) log10(1/sin(theta/2)) digits to cancellation, so it is evaluated in
// a multiprecision type sized for that loss and rounded to double at the end.
//
// theta must lie in (cutoff, 2pi - cutoff); otherwise DomainError.
CharacterValue character_value(const OddLabel& label, double theta,
                               const Tolerances& tol = kDefaultTolerances);

double character_ratio(const OddLabel& label, double theta,
                       const Tolerances& tol = kDefaultTolerances);

// Mean of r_a over theta uniform on [eps, 2pi - eps], in closed form from the
// cosine expansion:
//
//   alpha~_0 - sum_{j>=1} alpha~_j sin(j eps) / (j (pi - eps)).
//
// eps must lie in (0, pi - 1).
double integrated_ratio(const FourierProfile& profile, double eps);
double integrated_ratio(const OddLabel& label, double eps);

}  // namespace somix
