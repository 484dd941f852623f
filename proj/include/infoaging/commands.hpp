#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "infoaging/ar_model.hpp"
#include "infoaging/gaussian_information.hpp"
#include "infoaging/monte_carlo.hpp"

namespace infoaging {

// Exit-code contract, shared by the CLI and the command runners:
// 0 success, 2 config/model error (thrown as Error), 3 validation failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitValidationFailed = 3;

struct RunConfig {
  ArModel model;

  std::vector<int> lengths = {1, 2, 3, 4, 5};
  int max_aoi = 30;
  Loss loss = Loss::quadratic;
  LogBase base = LogBase::two;
  int search_bound = 50;
  int max_lag = 50;

  long samples = 1000000;
  int burn_in = kDefaultBurnIn;
  std::uint64_t seed = 1;
  std::vector<int> validate_deltas = {0, 1, 4, 8, 12};

  // Test hook: offset added to every closed-form value inside `validate`,
  // so the z-score gate can be shown to trip.
  double tamper = 0.0;
};

// CSV: `lag,gamma`, one row per lag 0..max_lag.
int run_acf(const RunConfig& config, std::ostream& out);

// CSV: `delta,l,loss,base,H`, delta-major then l, reproducing the
// conditional-entropy-vs-AoI curves.
int run_entropy_curve(const RunConfig& config, std::ostream& out);

// CSV: `l,epsilon,argmax_mu,argmax_nu,base`.
int run_epsilon(const RunConfig& config, std::ostream& out);

// CSV: `delta,l,closed_form,empirical,stderr,z` plus an RNG metadata line on
// `meta`. Returns kExitOk iff |z| <= 5 everywhere, else kExitValidationFailed.
int run_validate(const RunConfig& config, std::ostream& out, std::ostream& meta);

// Parses "a..b", "a,b,c" or a single integer into a length list.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace infoaging
