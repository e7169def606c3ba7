#include "somix/branching.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <string>

#include "somix/errors.hpp"

namespace somix {

namespace {

// Interlacing fill: slot q of `out` takes values in [lo(q), hi(q)].
template <class Lo, class Hi, class Emit>
void interlace(std::vector<int>& out, std::size_t q, Lo lo, Hi hi, Emit emit) {
  if (q == out.size()) {
    emit(out);
    return;
  }
  for (int v = lo(q); v <= hi(q); ++v) {
    out[q] = v;
    interlace(out, q + 1, lo, hi, emit);
  }
}

template <class Emit>
void for_each_even(const OddLabel& a, Emit emit) {
  const auto& p = a.parts;
  std::vector<int> b(p.size());
  // b_1 in [-a_1, a_1]; b_q in [a_{q-1}, a_q] for q >= 2.
  interlace(
      b, 0, [&](std::size_t q) { return q == 0 ? -p[0] : p[q - 1]; },
      [&](std::size_t q) { return p[q]; }, emit);
}

template <class Emit>
void for_each_odd(const EvenLabel& b, Emit emit) {
  const auto& p = b.parts;
  if (p.size() <= 1) return;
  std::vector<int> a(p.size() - 1);
  // a_q in [|b_q|, b_{q+1}] (only b_1 can be negative).
  interlace(
      a, 0, [&](std::size_t q) { return std::abs(p[q]); },
      [&](std::size_t q) { return p[q + 1]; }, emit);
}

FourierProfile assemble(const OddLabel& a, std::vector<BigInt> alpha, std::vector<BigInt> beta) {
  FourierProfile profile{a, BigInt(0), std::move(alpha), std::move(beta)};
  for (const auto& x : profile.alpha) profile.d += x;
  return profile;
}

void brute_force_odd(const OddLabel& a, std::vector<BigInt>& alpha, std::vector<BigInt>& beta,
                     std::uint64_t& visited, std::uint64_t cap);

void brute_force_even(const EvenLabel& b, std::vector<BigInt>& alpha, std::vector<BigInt>& beta,
                      std::uint64_t& visited, std::uint64_t cap) {
  if (b.n() == 1) {
    if (++visited > cap)
      throw ResourceError("brute-force branching exceeded path cap " + std::to_string(cap));
    alpha[static_cast<std::size_t>(std::abs(b.parts[0]))] += 1;
    return;
  }
  for_each_odd(b, [&](const std::vector<int>& parts) {
    brute_force_odd(OddLabel{parts}, alpha, beta, visited, cap);
  });
}

void brute_force_odd(const OddLabel& a, std::vector<BigInt>& alpha, std::vector<BigInt>& beta,
                     std::uint64_t& visited, std::uint64_t cap) {
  if (a.n() == 1) beta[static_cast<std::size_t>(a.parts[0])] += 1;
  for_each_even(a, [&](const std::vector<int>& parts) {
    brute_force_even(EvenLabel{parts}, alpha, beta, visited, cap);
  });
}

}  // namespace

HighReal FourierProfile::alpha_tilde(int j) const {
  return HighReal(alpha_at(j)) / HighReal(d);
}

HighReal FourierProfile::beta_tilde(int j) const {
  return HighReal(beta_at(j)) / HighReal(d);
}

HighReal FourierProfile::ratio_at_pi() const {
  BigInt signed_sum = 0;
  for (int j = 0; j <= m(); ++j) signed_sum += (j % 2 == 0) ? alpha[j] : BigInt(-alpha[j]);
  return HighReal(signed_sum) / HighReal(d);
}

HighReal FourierProfile::ratio_series(double theta) const {
  HighReal sum = 0;
  const HighReal th(theta);
  for (int j = 0; j <= m(); ++j) {
    if (alpha[j] == 0) continue;
    sum += HighReal(alpha[j]) * cos(th * j);
  }
  return sum / HighReal(d);
}

std::vector<EvenLabel> restrict_odd_to_even(const OddLabel& a) {
  require_valid(a);
  std::vector<EvenLabel> out;
  for_each_even(a, [&](const std::vector<int>& parts) { out.push_back(EvenLabel{parts}); });
  return out;
}

std::vector<OddLabel> restrict_even_to_odd(const EvenLabel& b) {
  if (!validate_even(b))
    throw DomainError("invalid SO(2n) label (" + b.to_string() + ")");
  std::vector<OddLabel> out;
  for_each_odd(b, [&](const std::vector<int>& parts) { out.push_back(OddLabel{parts}); });
  return out;
}

FourierProfile fourier_profile(const OddLabel& a) {
  require_valid(a);
  const std::size_t width = static_cast<std::size_t>(a.top()) + 1;
  std::vector<BigInt> alpha(width), beta(width);

  // Multiplicity maps keyed by the raw parts of the current level's labels.
  std::map<std::vector<int>, BigInt> odd_level{{a.parts, BigInt(1)}};
  for (int rank = a.n(); rank >= 1; --rank) {
    if (rank == 1)
      for (const auto& [parts, mult] : odd_level) beta[static_cast<std::size_t>(parts[0])] += mult;

    std::map<std::vector<int>, BigInt> even_level;
    for (const auto& [parts, mult] : odd_level)
      for_each_even(OddLabel{parts}, [&](const std::vector<int>& b) { even_level[b] += mult; });

    if (rank == 1) {
      for (const auto& [parts, mult] : even_level)
        alpha[static_cast<std::size_t>(std::abs(parts[0]))] += mult;
      break;
    }

    odd_level.clear();
    for (const auto& [parts, mult] : even_level)
      for_each_odd(EvenLabel{parts}, [&](const std::vector<int>& next) { odd_level[next] += mult; });
  }
  return assemble(a, std::move(alpha), std::move(beta));
}

FourierProfile brute_force_profile(const OddLabel& a, std::uint64_t path_cap) {
  require_valid(a);
  const std::size_t width = static_cast<std::size_t>(a.top()) + 1;
  std::vector<BigInt> alpha(width), beta(width);
  std::uint64_t visited = 0;
  brute_force_odd(a, alpha, beta, visited, path_cap);
  return assemble(a, std::move(alpha), std::move(beta));
}

}  // namespace somix
