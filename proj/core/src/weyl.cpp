#include "somix/weyl.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "somix/errors.hpp"

namespace somix {

namespace {

namespace mp = boost::multiprecision;

template <unsigned Digits>
using Float = mp::number<mp::cpp_bin_float<Digits>, mp::et_off>;

BigInt factorial(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// 2 * 4^{n-1} / (L_j prod_{r != j} (L_r^2 - L_j^2)) is the exact value of
// 1 / (l_j prod_{r != j} (l_r^2 - l_j^2)); returns the integer denominator
// and leaves the power of two to the caller.
BigInt doubled_denominator(const std::vector<long long>& L, std::size_t j) {
  BigInt den = L[j];
  for (std::size_t r = 0; r < L.size(); ++r) {
    if (r == j) continue;
    den *= BigInt(L[r]) * L[r] - BigInt(L[j]) * L[j];
  }
  return den;
}

template <class Real>
double ratio_from_display(const std::vector<long long>& L, double theta) {
  const int n = static_cast<int>(L.size());
  const Real th(theta);
  const Real half_sin = sin(th / 2);
  const Real scale = Real(2) * pow(Real(4), n - 1);

  Real sum = 0;
  for (std::size_t j = 0; j < L.size(); ++j) {
    Real numerator = sin(th * Real(L[j]) / 2);
    sum += numerator * scale / Real(doubled_denominator(L, j));
  }
  const Real prefactor = Real(factorial(2 * n - 1)) / pow(2 * half_sin, 2 * n - 1);
  return static_cast<double>(prefactor * sum);
}

double ratio_dispatch(const std::vector<long long>& L, double theta) {
  const int n = static_cast<int>(L.size());
  const double s = std::abs(std::sin(theta / 2));
  const double lost = (2.0 * n - 1.0) * std::max(0.0, -std::log10(s));
  const double needed = 25.0 + lost;
  if (needed <= 50) return ratio_from_display<Float<50>>(L, theta);
  if (needed <= 100) return ratio_from_display<Float<100>>(L, theta);
  if (needed <= 200) return ratio_from_display<Float<200>>(L, theta);
  if (needed <= 400) return ratio_from_display<Float<400>>(L, theta);
  throw DomainError("theta=" + std::to_string(theta) + " too close to the identity for rank " +
                    std::to_string(n) + " (needs " + std::to_string(static_cast<int>(needed)) +
                    " digits)");
}

void require_theta(double theta, const Tolerances& tol) {
  constexpr double two_pi = 2 * std::numbers::pi;
  if (!std::isfinite(theta) || theta < tol.theta_cutoff || theta > two_pi - tol.theta_cutoff)
    throw DomainError("theta=" + std::to_string(theta) + " outside (" +
                      std::to_string(tol.theta_cutoff) + ", 2pi - " +
                      std::to_string(tol.theta_cutoff) + ")");
}

}  // namespace

BigInt dimension(const OddLabel& label) {
  require_valid(label);
  const auto L = label.doubled_shifts();
  const int n = label.n();

  BigInt numerator = 1;
  for (std::size_t q = 0; q < L.size(); ++q) {
    numerator *= L[q];
    for (std::size_t s = 0; s < q; ++s) numerator *= BigInt(L[q]) * L[q] - BigInt(L[s]) * L[s];
  }
  BigInt denominator = BigInt(1) << (n * (n - 1));  // 4^{n(n-1)/2}
  for (int k = 1; k <= n; ++k) denominator *= factorial(2 * k - 1);

  BigInt quotient, remainder;
  mp::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0 || quotient <= 0)
    throw ConsistencyError("Weyl dimension of (" + label.to_string() + ") is not a positive integer");
  return quotient;
}

CharacterValue character_value(const OddLabel& label, double theta, const Tolerances& tol) {
  require_valid(label);
  require_theta(theta, tol);
  const double ratio = ratio_dispatch(label.doubled_shifts(), theta);
  if (!(std::abs(ratio) <= 1.0 + tol.ratio_slack))
    throw ConsistencyError("character ratio of (" + label.to_string() + ") at theta=" +
                           std::to_string(theta) + " is " + std::to_string(ratio));
  return CharacterValue{theta, ratio * to_double(dimension(label)), ratio};
}

double character_ratio(const OddLabel& label, double theta, const Tolerances& tol) {
  return character_value(label, theta, tol).ratio;
}

double integrated_ratio(const FourierProfile& profile, double eps) {
  constexpr double pi = std::numbers::pi;
  if (!(eps > 0.0 && eps < pi - 1.0))
    throw DomainError("eps=" + std::to_string(eps) + " outside (0, pi - 1)");
  const HighReal e(eps);
  const HighReal width = boost::math::constants::pi<HighReal>() - e;
  HighReal mean = HighReal(profile.alpha_at(0));
  for (int j = 1; j <= profile.m(); ++j) {
    if (profile.alpha[j] == 0) continue;
    mean -= HighReal(profile.alpha[j]) * sin(e * j) / (width * j);
  }
  return to_double(mean / HighReal(profile.d));
}

double integrated_ratio(const OddLabel& label, double eps) {
  return integrated_ratio(fourier_profile(label), eps);
}

}  // namespace somix
