#pragma once

#include <cstddef>
#include <vector>

#include "infoaging/errors.hpp"

namespace infoaging {

// Noisy AR(p) source:
//   X_t = a_1 X_{t-1} + ... + a_p X_{t-p} + W_t,   W_t ~ N(0, sigma2_w)
//   Y_t = X_t + N_t,                               N_t ~ N(0, sigma2_n)
struct ArModel {
  std::vector<double> coeffs;  // a_1..a_p
  double sigma2_w = 1.0;
  double sigma2_n = 0.0;

  int order() const { return static_cast<int>(coeffs.size()); }
};

// Strict inequality margin on the stationarity test: all characteristic
// roots must satisfy |z| < 1 - kStationarityTol. Near-unit-root models
// (max root ~0.97) must pass; exact unit roots must fail.
inline constexpr double kStationarityTol = 1e-9;

struct ValidationReport {
  bool stationary = false;
  std::vector<double> root_magnitudes;  // sorted descending
};

// Stationary autocovariances gamma(0..max_lag) of X; gamma(-k) = gamma(k).
class AutocovTable {
 public:
  AutocovTable(std::vector<double> gamma);

  int max_lag() const { return static_cast<int>(gamma_.size()) - 1; }

  double at(int lag) const {
    if (lag < 0 || lag > max_lag())
      throw Error(ErrorCode::out_of_range,
                  "lag " + std::to_string(lag) + " outside table (max " +
                      std::to_string(max_lag()) + ")");
    return gamma_[static_cast<std::size_t>(lag)];
  }

  const std::vector<double>& values() const { return gamma_; }

 private:
  std::vector<double> gamma_;
};

// Checks model invariants (p >= 1, sigma2_w > 0, sigma2_n >= 0) and solves
// for the characteristic roots of z^p - a_1 z^{p-1} - ... - a_p.
ValidationReport validate_model(const ArModel& model);

// Solves the Yule-Walker system for gamma(0..p) and extends by the recursion
// gamma(k) = sum_i a_i gamma(k-i) up to max_lag. Rejects non-stationary
// models; a numerically singular system raises a degenerate-model error.
AutocovTable autocovariance(const ArModel& model, int max_lag);

// E[Y_t^2] = gamma(0) + sigma2_n. The companion covariance rule, used by
// every matrix builder, is E[Y_t X_{t-k}] = gamma(k).
double target_second_moment(const ArModel& model, const AutocovTable& acf);

}  // namespace infoaging
