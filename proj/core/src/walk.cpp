#include "somix/walk.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "somix/errors.hpp"
#include "somix/parallel.hpp"
#include "somix/weyl.hpp"

namespace somix {

namespace {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Trials per aggregation block. Fixed so the merge order, and hence every
// floating-point result, does not depend on the worker count.
constexpr long long kBlockTrials = 256;

// Welford accumulator with Chan's parallel merge.
struct Accumulator {
  double count = 0.0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    count += 1.0;
    const double delta = x - mean;
    mean += delta / count;
    m2 += delta * (x - mean);
  }

  void merge(const Accumulator& other) {
    if (other.count == 0.0) return;
    if (count == 0.0) {
      *this = other;
      return;
    }
    const double total = count + other.count;
    const double delta = other.mean - mean;
    mean += delta * other.count / total;
    m2 += other.m2 + delta * delta * count * other.count / total;
    count = total;
  }

  Moments moments() const {
    if (count < 2.0) return {mean, 0.0};
    return {mean, std::sqrt(m2 / (count - 1.0) / count)};
  }
};

Matrix conjugacy_step(const Matrix& X, double theta, Rng& rng) {
  // Only a uniform orthonormal 2-frame of the Haar conjugator matters:
  // Gram-Schmidt on two Gaussian vectors.
  const int N = static_cast<int>(X.rows());
  std::normal_distribution<double> normal;
  Eigen::VectorXd q1(N), q2(N);
  for (int i = 0; i < N; ++i) q1[i] = normal(rng);
  for (int i = 0; i < N; ++i) q2[i] = normal(rng);
  q1.normalize();
  q2 -= q1.dot(q2) * q1;
  q2.normalize();
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  // S = Q R(1,2;theta) Q^T = I + (c-1)(q1 q1^T + q2 q2^T) + s (q2 q1^T - q1 q2^T).
  const Eigen::VectorXd x1 = X * q1;
  const Eigen::VectorXd x2 = X * q2;
  Matrix next = X;
  next.noalias() += ((c - 1.0) * x1 + s * x2) * q1.transpose();
  next.noalias() += ((c - 1.0) * x2 - s * x1) * q2.transpose();
  return next;
}

Matrix kac_step(const Matrix& X, double theta, Rng& rng) {
  const int N = static_cast<int>(X.rows());
  std::uniform_int_distribution<int> pick(0, N * (N - 1) / 2 - 1);
  int k = pick(rng);
  int i = 0;
  while (k >= N - 1 - i) {
    k -= N - 1 - i;
    ++i;
  }
  const int j = i + 1 + k;
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Matrix next = X;
  next.col(i) = c * X.col(i) + s * X.col(j);
  next.col(j) = -s * X.col(i) + c * X.col(j);
  return next;
}

double trace_of_square(const Matrix& X) { return X.cwiseProduct(X.transpose()).sum(); }

}  // namespace

Rng trial_stream(std::uint64_t seed, std::uint64_t trial) {
  const std::uint64_t h1 = splitmix64(seed);
  const std::uint64_t h2 = splitmix64(h1 ^ splitmix64(trial));
  std::seed_seq seq{static_cast<std::uint32_t>(h1), static_cast<std::uint32_t>(h1 >> 32),
                    static_cast<std::uint32_t>(h2), static_cast<std::uint32_t>(h2 >> 32)};
  return Rng(seq);
}

Matrix haar_rotation(int N, Rng& rng) {
  if (N < 1) throw DomainError("haar_rotation needs N >= 1");
  std::normal_distribution<double> gauss;
  Matrix Z(N, N);
  for (int c = 0; c < N; ++c)
    for (int r = 0; r < N; ++r) Z(r, c) = gauss(rng);

  Eigen::HouseholderQR<Matrix> qr(Z);
  Matrix Q = qr.householderQ();
  const Matrix& R = qr.matrixQR();
  for (int c = 0; c < N; ++c)
    if (R(c, c) < 0) Q.col(c) = -Q.col(c);
  if (Q.determinant() < 0) Q.col(0) = -Q.col(0);
  return Q;
}

Matrix planar_rotation(int N, int i, int j, double theta) {
  if (i < 0 || j < 0 || i >= N || j >= N || i == j)
    throw DomainError("planar_rotation needs distinct axes inside the matrix");
  Matrix R = Matrix::Identity(N, N);
  R(i, i) = std::cos(theta);
  R(j, j) = std::cos(theta);
  R(i, j) = -std::sin(theta);
  R(j, i) = std::sin(theta);
  return R;
}

double sample_angle(const AngleLaw& law, Rng& rng) {
  constexpr double two_pi = 2 * std::numbers::pi;
  switch (law.kind) {
    case AngleLaw::Kind::fixed:
      return law.parameter;
    case AngleLaw::Kind::truncated_uniform:
      return std::uniform_real_distribution<double>(law.parameter, two_pi - law.parameter)(rng);
    case AngleLaw::Kind::uniform:
      return std::uniform_real_distribution<double>(0.0, two_pi)(rng);
  }
  return 0.0;
}

double orthogonality_defect(const Matrix& X) {
  return (X.transpose() * X - Matrix::Identity(X.rows(), X.cols())).cwiseAbs().maxCoeff();
}

Matrix reorthonormalize(const Matrix& X) {
  Eigen::HouseholderQR<Matrix> qr(X);
  Matrix Q = qr.householderQ();
  const Matrix& R = qr.matrixQR();
  for (int c = 0; c < Q.cols(); ++c)
    if (R(c, c) < 0) Q.col(c) = -Q.col(c);
  return Q;
}

const char* to_string(WalkKind kind) {
  return kind == WalkKind::rosenthal_conjugacy ? "rosenthal_conjugacy" : "kac_pair";
}

WalkKind parse_walk_kind(const std::string& text) {
  if (text == "rosenthal_conjugacy" || text == "rosenthal") return WalkKind::rosenthal_conjugacy;
  if (text == "kac_pair" || text == "kac") return WalkKind::kac_pair;
  throw DomainError("unknown walk kind '" + text + "'");
}

void WalkConfig::validate() const {
  if (N < 3) throw DomainError("walk needs N >= 3");
  if (steps < 1) throw DomainError("steps must be positive");
  if (trials < 1) throw DomainError("trials must be positive");
  law.validate();
  if (static_cast<double>(steps) * static_cast<double>(trials) > static_cast<double>(step_budget))
    throw ResourceError("steps * trials exceeds the step budget of " + std::to_string(step_budget));
}

Matrix step(const Matrix& X, const WalkConfig& config, Rng& rng) {
  const double theta = sample_angle(config.law, rng);
  return config.kind == WalkKind::rosenthal_conjugacy ? conjugacy_step(X, theta, rng)
                                                      : kac_step(X, theta, rng);
}

std::vector<std::vector<Moments>> simulate_observables(const WalkConfig& config,
                                                        std::span<const Observable> observables) {
  config.validate();
  const std::size_t steps = static_cast<std::size_t>(config.steps);
  const std::size_t blocks = static_cast<std::size_t>((config.trials + kBlockTrials - 1) / kBlockTrials);
  using Table = std::vector<std::vector<Accumulator>>;  // [observable][t-1]

  auto run_block = [&](std::size_t b) {
    Table table(observables.size(), std::vector<Accumulator>(steps));
    const long long first = static_cast<long long>(b) * kBlockTrials;
    const long long last = std::min(config.trials, first + kBlockTrials);
    for (long long trial = first; trial < last; ++trial) {
      Rng rng = trial_stream(config.seed, static_cast<std::uint64_t>(trial));
      Matrix X = Matrix::Identity(config.N, config.N);
      for (std::size_t t = 1; t <= steps; ++t) {
        X = step(X, config, rng);
        if (t % static_cast<std::size_t>(config.tol.drift_check_interval) == 0 &&
            orthogonality_defect(X) > config.tol.orthogonality_drift)
          X = reorthonormalize(X);
        const double tr = X.trace();
        const double tr_sq = trace_of_square(X);
        for (std::size_t k = 0; k < observables.size(); ++k) table[k][t - 1].add(observables[k](tr, tr_sq));
      }
    }
    return table;
  };

  const auto partial = parallel_map(blocks, config.threads, run_block);

  std::vector<std::vector<Moments>> out(observables.size(), std::vector<Moments>(steps));
  for (std::size_t k = 0; k < observables.size(); ++k) {
    for (std::size_t t = 0; t < steps; ++t) {
      Accumulator total;
      for (const auto& table : partial) total.merge(table[k][t]);
      out[k][t] = total.moments();
    }
  }
  return out;
}

TraceStats simulate(const WalkConfig& config) {
  const std::vector<Observable> observables{
      [](double tr, double) { return tr; },
      [](double tr, double) { return tr * tr; },
      [](double, double tr_sq) { return tr_sq; },
  };
  const auto moments = simulate_observables(config, observables);
  TraceStats stats{config, {}};
  stats.steps.reserve(static_cast<std::size_t>(config.steps));
  for (int t = 1; t <= config.steps; ++t)
    stats.steps.push_back({t, moments[0][t - 1], moments[1][t - 1], moments[2][t - 1]});
  return stats;
}

DecayReport character_decay_check(const WalkConfig& config, const OddLabel& label) {
  require_valid(label);
  if (2 * label.n() + 1 != config.N)
    throw DomainError("label (" + label.to_string() + ") is not an SO(" + std::to_string(config.N) +
                      ") label");
  const int n = label.n();
  std::vector<int> standard(static_cast<std::size_t>(n), 0), exterior = standard, symmetric = standard;
  standard.back() = 1;
  symmetric.back() = 2;
  exterior.back() = 1;
  if (n >= 2) exterior[static_cast<std::size_t>(n - 2)] = 1;

  DecayReport report;
  report.label = label;
  Observable chi;
  if (label.parts == standard) {
    report.character = "standard";
    chi = [](double tr, double) { return tr; };
  } else if (label.parts == exterior) {
    report.character = "exterior_square";
    chi = [](double tr, double tr_sq) { return (tr * tr - tr_sq) / 2.0; };
  } else if (label.parts == symmetric) {
    report.character = "traceless_symmetric_square";
    chi = [](double tr, double tr_sq) { return (tr * tr + tr_sq) / 2.0 - 1.0; };
  } else {
    throw DomainError("label (" + label.to_string() +
                      ") has no trace-polynomial character; supported: standard, exterior square, "
                      "traceless symmetric square");
  }

  report.d = dimension(label);
  report.rho = step_coefficient(label, config.law, config.tol);
  const std::vector<Observable> observables{chi};
  const auto moments = simulate_observables(config, observables)[0];

  const double d = to_double(report.d);
  for (int t = 1; t <= config.steps; ++t) {
    const Moments& m = moments[static_cast<std::size_t>(t - 1)];
    DecayPoint p{t, m.mean, m.se, d * std::pow(report.rho, t), 0.0};
    const double diff = p.mean - p.expected;
    // Differences at rounding level count as exact agreement; this is what a
    // deterministic step (fixed angle, t = 1) produces, where se is itself
    // rounding noise.
    const double floor = 1e-12 * std::max(1.0, d);
    if (std::abs(diff) <= floor)
      p.z = 0.0;
    else
      p.z = m.se > 0 ? diff / m.se : std::copysign(std::numeric_limits<double>::infinity(), diff);
    report.max_abs_z = std::max(report.max_abs_z, std::abs(p.z));
    report.points.push_back(p);
  }
  return report;
}

}  // namespace somix
