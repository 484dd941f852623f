#pragma once

#include <cstdint>
#include <vector>

#include "infoaging/ar_model.hpp"
#include "infoaging/gaussian_information.hpp"

namespace infoaging {

// Conservative default: the slowest mixing model in regular use (max root
// ~0.974) has a time constant of ~40 slots.
inline constexpr int kDefaultBurnIn = 10000;

// RNG pin, recorded in output metadata: one mt19937_64 engine per noise
// stream (0 = process noise W, 1 = observation noise N), seeded via
// std::seed_seq{seed_lo, seed_hi, stream}, with Box-Muller Gaussians.
inline constexpr const char* kRngDescription = "mt19937_64-boxmuller";

struct Trajectory {
  std::vector<double> x;
  std::vector<double> y;  // y_t = x_t + observation noise
  std::uint64_t seed = 0;

  int n() const { return static_cast<int>(x.size()); }
};

// Simulates burn_in + n steps of the AR recursion from a zero initial state
// and keeps the last n. Same (seed, parameters) reproduces the trajectory
// bit-for-bit on one platform.
Trajectory simulate(const ArModel& model, int n, int burn_in, std::uint64_t seed);

struct EmpiricalAcf {
  std::vector<double> gamma;  // gamma_hat(0..max_lag), biased 1/n normalization
  double std_err = 0.0;       // gamma_hat(0) * sqrt(2/n); rough Gaussian heuristic
};

EmpiricalAcf empirical_acf(const Trajectory& traj, int max_lag);

struct MmseEstimate {
  double mse = 0.0;
  double std_err = 0.0;  // sample s.d. of squared residuals / sqrt(samples)
  int samples = 0;
};

// Ordinary least squares of y_t on [x_{t-delta}, ..., x_{t-delta-l+1}] via
// the normal equations; the empirical Gram matrix goes through solve_spd.
MmseEstimate empirical_mmse(const Trajectory& traj, int delta, int l);

// Plug-in log-loss estimate (1/2) log(2 pi e mse); valid because the joint
// law is Gaussian.
double empirical_hlog(const Trajectory& traj, int delta, int l, LogBase base);

}  // namespace infoaging
