#pragma once

#include <vector>

#include "infoaging/ar_model.hpp"
#include "infoaging/gaussian_information.hpp"

namespace infoaging {

struct EpsilonQuery {
  int l = 1;
  int search_bound = 50;  // grid limit M on mu and nu
  LogBase base = LogBase::natural;
  bool collect_grid = false;
};

struct EpsilonReport {
  double epsilon = 0.0;
  int argmax_mu = 0;
  int argmax_nu = 0;
  // Row-major (M+1)x(M+1) table of epsilon_{mu,nu}; filled when requested.
  std::vector<double> grid;
};

// epsilon_{mu,nu}(l) = sqrt(I_log(Y_t; X^l_{t-mu-nu} | X^l_{t-mu})), the
// divergence of the windowed process from a Markov chain. The CMI is
// evaluated on deduplicated index sets; nu = 0 is exactly 0 (the extra
// window is contained in the conditioning window).
//
// The evaluation runs in quadruple precision: for l >= p the CMI is
// mathematically zero, and certifying sqrt(CMI) <= 1e-9 needs the log-det
// cancellation carried out far below double round-off.
double epsilon_mu_nu(const AutocovTable& acf, double sigma2_n, int mu, int nu, int l,
                     LogBase base = LogBase::natural);

// epsilon(l) = max over the (mu, nu) grid [0, M]^2, exhaustively evaluated.
// Ties (the grid has exact ridges of equal values once windows overlap a
// full state) are broken toward the lexicographically smallest (mu, nu)
// within an absolute 1e-9 tolerance of the maximum.
EpsilonReport epsilon_l(const AutocovTable& acf, double sigma2_n, const EpsilonQuery& query);

struct Prop3bRow {
  int l = 0;
  double epsilon = 0.0;
  bool pass = false;  // l < p, or epsilon <= 1e-9
};

// Zero certificate: for every l in 1..l_max, checks epsilon(l) <= 1e-9
// whenever l >= p.
std::vector<Prop3bRow> prop3b_check(const ArModel& model, int l_max, int search_bound = 20,
                                    LogBase base = LogBase::natural);

}  // namespace infoaging
