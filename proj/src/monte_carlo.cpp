#include "infoaging/monte_carlo.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "infoaging/matrix_kernel.hpp"

namespace infoaging {
namespace {

// Box-Muller over mt19937_64. std::normal_distribution is avoided on
// purpose: its algorithm is implementation-defined, and the trajectory
// contract pins the variate sequence.
class NormalSampler {
 public:
  NormalSampler(std::uint64_t seed, std::uint32_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      stream};
    engine_.seed(seq);
  }

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    // u1 in (0, 1] so that log(u1) is finite; u2 in [0, 1).
    const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace

Trajectory simulate(const ArModel& model, int n, int burn_in, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::out_of_range, "sample count must be >= 1");
  if (burn_in < 0) throw Error(ErrorCode::out_of_range, "burn_in must be >= 0");
  if (!validate_model(model).stationary)
    throw Error(ErrorCode::invalid_model, "model is not stationary");

  const int p = model.order();
  const double w_scale = std::sqrt(model.sigma2_w);
  const double n_scale = std::sqrt(model.sigma2_n);
  NormalSampler w_noise(seed, 0);
  NormalSampler obs_noise(seed, 1);

  const std::size_t total = static_cast<std::size_t>(burn_in) + static_cast<std::size_t>(n);
  std::vector<double> x(total, 0.0);
  for (std::size_t t = 0; t < total; ++t) {
    double v = w_scale * w_noise.next();
    for (int i = 1; i <= p; ++i)
      if (t >= static_cast<std::size_t>(i)) v += model.coeffs[i - 1] * x[t - i];
    x[t] = v;
  }

  Trajectory traj;
  traj.seed = seed;
  traj.x.assign(x.begin() + burn_in, x.end());
  traj.y.resize(traj.x.size());
  for (std::size_t t = 0; t < traj.x.size(); ++t)
    traj.y[t] = traj.x[t] + n_scale * obs_noise.next();
  return traj;
}

EmpiricalAcf empirical_acf(const Trajectory& traj, int max_lag) {
  const int n = traj.n();
  if (max_lag < 0) throw Error(ErrorCode::out_of_range, "max_lag must be >= 0");
  if (max_lag >= n / 10)
    throw Error(ErrorCode::out_of_range, "max_lag must be < n/10 for a usable estimate");

  EmpiricalAcf acf;
  acf.gamma.resize(static_cast<std::size_t>(max_lag) + 1);
  for (int k = 0; k <= max_lag; ++k) {
    double s = 0.0;
    for (int t = k; t < n; ++t) s += traj.x[t] * traj.x[t - k];
    acf.gamma[static_cast<std::size_t>(k)] = s / n;
  }
  acf.std_err = acf.gamma[0] * std::sqrt(2.0 / n);
  return acf;
}

MmseEstimate empirical_mmse(const Trajectory& traj, int delta, int l) {
  if (delta < 0) throw Error(ErrorCode::out_of_range, "delta must be >= 0");
  if (l < 1) throw Error(ErrorCode::out_of_range, "feature length l must be >= 1");
  const int n = traj.n();
  if (delta + l > n / 10)
    throw Error(ErrorCode::out_of_range, "delta + l must be small relative to n");

  const int first = delta + l - 1;
  const int count = n - first;

  // Accumulate the empirical Gram matrix and cross moments.
  SymMatrix gram(static_cast<std::size_t>(l));
  std::vector<double> gram_acc(static_cast<std::size_t>(l) * static_cast<std::size_t>(l), 0.0);
  std::vector<double> cross(static_cast<std::size_t>(l), 0.0);
  for (int t = first; t < n; ++t) {
    for (int i = 0; i < l; ++i) {
      const double fi = traj.x[t - delta - i];
      cross[static_cast<std::size_t>(i)] += fi * traj.y[t];
      for (int j = i; j < l; ++j)
        gram_acc[static_cast<std::size_t>(i) * l + j] += fi * traj.x[t - delta - j];
    }
  }
  for (int i = 0; i < l; ++i)
    for (int j = i; j < l; ++j)
      gram.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
               gram_acc[static_cast<std::size_t>(i) * l + j] / count);
  for (double& c : cross) c /= count;

  const std::vector<double> beta = solve_spd(gram, cross);

  double mean_sq = 0.0;
  for (int t = first; t < n; ++t) {
    double fit = 0.0;
    for (int i = 0; i < l; ++i) fit += beta[static_cast<std::size_t>(i)] * traj.x[t - delta - i];
    const double r = traj.y[t] - fit;
    mean_sq += r * r;
  }
  mean_sq /= count;

  double var_sq = 0.0;
  for (int t = first; t < n; ++t) {
    double fit = 0.0;
    for (int i = 0; i < l; ++i) fit += beta[static_cast<std::size_t>(i)] * traj.x[t - delta - i];
    const double r = traj.y[t] - fit;
    const double d = r * r - mean_sq;
    var_sq += d * d;
  }
  var_sq /= (count - 1);

  return {mean_sq, std::sqrt(var_sq / count), count};
}

double empirical_hlog(const Trajectory& traj, int delta, int l, LogBase base) {
  const MmseEstimate est = empirical_mmse(traj, delta, l);
  if (!(est.mse > 0.0))
    throw Error(ErrorCode::numerical_consistency, "degenerate data: empirical mse is not positive");
  return in_base(0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e * est.mse), base);
}

}  // namespace infoaging
