#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "somix/bounds.hpp"
#include "somix/labels.hpp"
#include "somix/numeric.hpp"

namespace somix {

using Matrix = Eigen::MatrixXd;
using Rng = std::mt19937_64;

// Independent random stream for one trial. The engine is seeded through
// std::seed_seq with the four 32-bit halves of h1 = splitmix64(seed) and
// h2 = splitmix64(h1 ^ splitmix64(trial)); distinct trials therefore never
// share state, and a trial's stream depends only on (seed, trial).
Rng trial_stream(std::uint64_t seed, std::uint64_t trial);

// Haar-distributed element of SO(N): Householder QR of a standard Gaussian
// matrix, columns rescaled by sign(diag R), then the first column negated if
// the determinant came out -1.
Matrix haar_rotation(int N, Rng& rng);

// R(i,j;theta): rotation by theta in the (i,j) coordinate plane (0-based).
Matrix planar_rotation(int N, int i, int j, double theta);

double sample_angle(const AngleLaw& law, Rng& rng);

// max |X^T X - I|.
double orthogonality_defect(const Matrix& X);
// Nearest-frame cleanup via QR with positive diagonal.
Matrix reorthonormalize(const Matrix& X);

enum class WalkKind { rosenthal_conjugacy, kac_pair };

const char* to_string(WalkKind kind);
WalkKind parse_walk_kind(const std::string& text);

struct WalkConfig {
  int N = 3;
  WalkKind kind = WalkKind::rosenthal_conjugacy;
  AngleLaw law = AngleLaw::uniform();
  int steps = 1;
  long long trials = 1;
  std::uint64_t seed = 0;
  // Cap on steps * trials.
  long long step_budget = 2'000'000'000;
  unsigned threads = 1;
  Tolerances tol = kDefaultTolerances;

  void validate() const;
};

// X S with S drawn from the step law: a uniform conjugate Q R(1,2;theta) Q^T
// for rosenthal_conjugacy, R(i,j;theta) for a uniform pair i<j for kac_pair.
Matrix step(const Matrix& X, const WalkConfig& config, Rng& rng);

struct Moments {
  double mean = 0.0;
  double se = 0.0;  // standard error over independent trials (0 for one trial)
};

struct StepStats {
  long long t = 0;
  Moments trace;            // Tr X_t
  Moments trace_squared;    // (Tr X_t)^2
  Moments trace_of_square;  // Tr(X_t^2)
};

struct TraceStats {
  WalkConfig config;
  std::vector<StepStats> steps;  // t = 1..config.steps
};

// A per-trial statistic of X_t through (Tr X_t, Tr X_t^2).
using Observable = std::function<double(double trace, double trace_of_square)>;

// result[k][t-1] = moments of observables[k] at step t. Bit-identical for a
// given (config, seed) regardless of config.threads.
std::vector<std::vector<Moments>> simulate_observables(const WalkConfig& config,
                                                        std::span<const Observable> observables);

TraceStats simulate(const WalkConfig& config);

struct DecayPoint {
  long long t = 0;
  double mean = 0.0;
  double se = 0.0;
  double expected = 0.0;  // d_a rho_a^t
  double z = 0.0;
};

struct DecayReport {
  OddLabel label;
  std::string character;  // "standard", "exterior_square" or "traceless_symmetric_square"
  BigInt d;
  double rho = 0.0;
  std::vector<DecayPoint> points;
  double max_abs_z = 0.0;
};

// Compares the empirical mean of chi_a(X_t) with d_a rho_a^t for the labels
// whose character is a polynomial in Tr X and Tr X^2: the standard
// representation (0,..,0,1), the exterior square (0,..,0,1,1) and the
// traceless symmetric square (0,..,0,2). Throws DomainError otherwise.
DecayReport character_decay_check(const WalkConfig& config, const OddLabel& label);

}  // namespace somix
