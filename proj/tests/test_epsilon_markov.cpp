#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "infoaging/epsilon_markov.hpp"
#include "test_support.hpp"

using namespace infoaging;
using namespace infoaging::testing;

namespace {

AutocovTable ar4_acf(int k = 106) { return autocovariance(ar4_model(), k); }

// Grid maxima for the shipped AR(4) at M=50, frozen from an independent
// 34-digit oracle evaluation of the same log-det ratio.
constexpr double kEpsNat[3] = {0.729844851121, 0.716968928143, 0.693436446823};
constexpr double kEpsTwo[3] = {0.876633005618, 0.861167445997, 0.832902055348};

}  // namespace

TEST_CASE("nu = 0 gives exactly zero") {
  const auto acf = ar4_acf(20);
  for (int mu : {0, 1, 7})
    for (int l : {1, 3})
      CHECK(epsilon_mu_nu(acf, 0.001, mu, 0, l) == 0.0);
}

TEST_CASE("feature windows covering the full state are Markov: epsilon <= 1e-9") {
  const auto acf = ar4_acf();
  for (int l : {4, 5}) {
    const int pairs[][2] = {{0, 1}, {1, 8}, {3, 2}, {10, 40}};
    for (const auto& mn : pairs) {
      for (LogBase base : {LogBase::natural, LogBase::two})
        CHECK(epsilon_mu_nu(acf, 0.001, mn[0], mn[1], l, base) <= 1e-9);
    }
  }
}

TEST_CASE("epsilon(l) at M=50 matches the frozen oracle values") {
  const auto acf = ar4_acf();
  for (LogBase base : {LogBase::natural, LogBase::two}) {
    const double* expected = base == LogBase::natural ? kEpsNat : kEpsTwo;
    for (int l = 1; l <= 3; ++l) {
      const EpsilonReport r = epsilon_l(acf, 0.001, {l, 50, base, false});
      CHECK(std::fabs(r.epsilon - expected[l - 1]) <= 1e-9);
    }
    for (int l : {4, 5}) {
      const EpsilonReport r = epsilon_l(acf, 0.001, {l, 50, base, false});
      CHECK(r.epsilon <= 1e-9);
      CHECK(r.argmax_mu == 0);
      CHECK(r.argmax_nu == 0);
    }
  }
}

TEST_CASE("argmax reporting prefers the lexicographically smallest tie") {
  const auto acf = ar4_acf();
  const int expected[3][2] = {{2, 2}, {2, 2}, {1, 1}};
  for (int l = 1; l <= 3; ++l) {
    const EpsilonReport r = epsilon_l(acf, 0.001, {l, 50, LogBase::natural, false});
    CHECK(r.argmax_mu == expected[l - 1][0]);
    CHECK(r.argmax_nu == expected[l - 1][1]);
  }

  // The l=3 ridge: for nu <= l the union window {1..3+nu} is gap-free and
  // already contains the full state {1..4}, so epsilon_{1,nu} is constant.
  // Beyond that the union develops a hole and the value genuinely drops.
  for (int nu : {1, 2, 3})
    CHECK(epsilon_mu_nu(acf, 0.001, 1, nu, 3) ==
          doctest::Approx(kEpsNat[2]).epsilon(1e-10));
  CHECK(epsilon_mu_nu(acf, 0.001, 1, 5, 3) < kEpsNat[2] - 0.1);
}

TEST_CASE("epsilon(l) is non-increasing in l on the shipped AR(4)") {
  const auto acf = ar4_acf();
  double prev = 1e300;
  for (int l = 1; l <= 5; ++l) {
    const double eps = epsilon_l(acf, 0.001, {l, 50, LogBase::natural, false}).epsilon;
    CHECK(eps <= prev + 1e-12);
    prev = eps;
  }
}

TEST_CASE("M = 0 collapses the grid to the trivial point") {
  const auto acf = ar4_acf(10);
  const EpsilonReport r = epsilon_l(acf, 0.001, {2, 0, LogBase::natural, false});
  CHECK(r.epsilon == 0.0);
  CHECK(r.argmax_mu == 0);
  CHECK(r.argmax_nu == 0);
}

TEST_CASE("AR(1) is Markov at every feature length") {
  const ArModel ar1{{0.6}, 1.0, 0.05};
  const auto acf = autocovariance(ar1, 30);
  CHECK(epsilon_l(acf, ar1.sigma2_n, {1, 10, LogBase::natural, false}).epsilon <= 1e-9);
  for (const auto& row : prop3b_check(ar1, 4, 10)) CHECK(row.pass);
}

TEST_CASE("prop3b_check on the shipped AR(4)") {
  const auto rows = prop3b_check(ar4_model(), 6, 20);
  REQUIRE(rows.size() == 6);
  for (const auto& row : rows) CHECK(row.pass);
  for (int l : {4, 5, 6}) CHECK(rows[static_cast<std::size_t>(l - 1)].epsilon <= 1e-9);
  for (int l : {1, 2, 3}) CHECK(rows[static_cast<std::size_t>(l - 1)].epsilon > 0.5);
}

TEST_CASE("random AR(2) models have epsilon(l) <= 1e-9 for l >= 2") {
  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 5; ++trial) {
    const ArModel model = random_stationary_model(rng, 2);
    const auto acf = autocovariance(model, 25);
    for (int l : {2, 3})
      CHECK(epsilon_l(acf, model.sigma2_n, {l, 10, LogBase::natural, false}).epsilon <= 1e-9);
  }
}

TEST_CASE("grid decay justifies the M=50 truncation for l < p") {
  // Measured boundary-to-max ratios are 8-10% in epsilon units (about 1% in
  // CMI units); the maximum itself sits at mu, nu <= 2, far from the edge.
  const auto acf = ar4_acf();
  for (int l = 1; l <= 3; ++l) {
    const EpsilonReport r = epsilon_l(acf, 0.001, {l, 50, LogBase::natural, true});
    REQUIRE(r.grid.size() == 51u * 51u);
    double boundary = 0.0;
    for (int mu = 0; mu <= 50; ++mu)
      boundary = std::max(boundary, r.grid[static_cast<std::size_t>(mu) * 51 + 50]);
    for (int nu = 0; nu <= 50; ++nu)
      boundary = std::max(boundary, r.grid[50u * 51 + static_cast<std::size_t>(nu)]);
    CHECK(boundary <= 0.15 * r.epsilon);
    CHECK(boundary * boundary <= 0.02 * r.epsilon * r.epsilon);
    CHECK(r.argmax_mu <= 5);
    CHECK(r.argmax_nu <= 5);
  }
}

TEST_CASE("epsilon grid range and argument validation") {
  const auto acf = ar4_acf(10);
  CHECK_THROWS_AS(epsilon_mu_nu(acf, 0.001, 8, 4, 2), Error);   // needs lag 13
  CHECK_THROWS_AS(epsilon_mu_nu(acf, 0.001, -1, 0, 1), Error);
  CHECK_THROWS_AS(epsilon_l(acf, 0.001, {1, 20, LogBase::natural, false}), Error);
  CHECK_THROWS_AS(epsilon_l(acf, 0.001, {0, 5, LogBase::natural, false}), Error);
}
