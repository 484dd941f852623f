#include "infoaging/epsilon_markov.hpp"

#include <algorithm>
#include <cmath>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace infoaging {
namespace {

using quad = boost::multiprecision::cpp_bin_float_quad;

// ln 2 to quad precision (boost constants would pull in extra machinery).
const quad kQuadLn2 = quad("0.69314718055994530941723212145817657");

SymMatrixT<quad> corr_matrix_quad(const AutocovTable& acf, double sigma2_n,
                                  const std::vector<int>& offsets, bool include_y) {
  const std::size_t nx = offsets.size();
  const std::size_t base = include_y ? 1 : 0;
  SymMatrixT<quad> m(nx + base);
  if (include_y) {
    m.set(0, 0, quad(acf.at(0)) + quad(sigma2_n));
    for (std::size_t j = 0; j < nx; ++j) m.set(0, base + j, quad(acf.at(offsets[j])));
  }
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = i; j < nx; ++j)
      m.set(base + i, base + j, quad(acf.at(std::abs(offsets[i] - offsets[j]))));
  return m;
}

// H_log(Y | offsets) in nats, quad precision, up to the common additive
// constant (1/2) ln 2 pi e, which cancels in every CMI difference.
quad hlog_given_quad(const AutocovTable& acf, double sigma2_n, const std::vector<int>& offsets) {
  const quad ld_joint = logdet_spd(corr_matrix_quad(acf, sigma2_n, offsets, true));
  const quad ld_cond = logdet_spd(corr_matrix_quad(acf, sigma2_n, offsets, false));
  return (ld_joint - ld_cond) / 2;
}

quad cmi_nats_quad(const AutocovTable& acf, double sigma2_n, const JointIndexSet& cond,
                   const JointIndexSet& extra) {
  if (cond.contains(extra)) return quad(0);
  const JointIndexSet joint = cond.union_with(extra);
  const quad v = hlog_given_quad(acf, sigma2_n, cond.x_offsets()) -
                 hlog_given_quad(acf, sigma2_n, joint.x_offsets());
  if (v >= 0) return v;
  if (v >= quad(-1e-10)) return quad(0);
  throw Error(ErrorCode::numerical_consistency, "log-loss CMI below -1e-10 in epsilon grid");
}

void require_range(const AutocovTable& acf, int max_offset) {
  if (max_offset > acf.max_lag())
    throw Error(ErrorCode::out_of_range,
                "autocovariance table must cover offsets up to " + std::to_string(max_offset));
}

double epsilon_from_cmi(quad nats, LogBase base) {
  if (base == LogBase::two) nats /= kQuadLn2;
  return static_cast<double>(sqrt(nats));
}

}  // namespace

double epsilon_mu_nu(const AutocovTable& acf, double sigma2_n, int mu, int nu, int l,
                     LogBase base) {
  if (mu < 0 || nu < 0) throw Error(ErrorCode::out_of_range, "mu and nu must be >= 0");
  if (l < 1) throw Error(ErrorCode::out_of_range, "feature length l must be >= 1");
  require_range(acf, mu + nu + l - 1);
  const JointIndexSet cond = JointIndexSet::window(mu, l);
  const JointIndexSet extra = JointIndexSet::window(mu + nu, l);
  return epsilon_from_cmi(cmi_nats_quad(acf, sigma2_n, cond, extra), base);
}

EpsilonReport epsilon_l(const AutocovTable& acf, double sigma2_n, const EpsilonQuery& query) {
  if (query.l < 1) throw Error(ErrorCode::out_of_range, "feature length l must be >= 1");
  if (query.search_bound < 0)
    throw Error(ErrorCode::out_of_range, "search bound M must be >= 0");
  const int m = query.search_bound;
  require_range(acf, 2 * m + query.l);

  const std::size_t side = static_cast<std::size_t>(m) + 1;
  std::vector<double> grid(side * side);
  for (int mu = 0; mu <= m; ++mu)
    for (int nu = 0; nu <= m; ++nu)
      grid[static_cast<std::size_t>(mu) * side + static_cast<std::size_t>(nu)] =
          epsilon_mu_nu(acf, sigma2_n, mu, nu, query.l, query.base);

  EpsilonReport report;
  report.epsilon = *std::max_element(grid.begin(), grid.end());

  // Exact ties occur wherever the union window already contains a full
  // state, so pick the lexicographically smallest (mu, nu) within an
  // absolute tolerance of the maximum instead of trusting round-off order.
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] >= report.epsilon - 1e-9) {
      report.argmax_mu = static_cast<int>(i / side);
      report.argmax_nu = static_cast<int>(i % side);
      break;
    }
  }
  if (query.collect_grid) report.grid = std::move(grid);
  return report;
}

std::vector<Prop3bRow> prop3b_check(const ArModel& model, int l_max, int search_bound,
                                    LogBase base) {
  if (l_max < 1) throw Error(ErrorCode::out_of_range, "l_max must be >= 1");
  const AutocovTable acf = autocovariance(model, 2 * search_bound + l_max + 1);
  std::vector<Prop3bRow> rows;
  rows.reserve(static_cast<std::size_t>(l_max));
  for (int l = 1; l <= l_max; ++l) {
    EpsilonQuery q{l, search_bound, base, false};
    const double eps = epsilon_l(acf, model.sigma2_n, q).epsilon;
    rows.push_back({l, eps, l < model.order() || eps <= 1e-9});
  }
  return rows;
}

}  // namespace infoaging
