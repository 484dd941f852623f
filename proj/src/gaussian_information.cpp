#include "infoaging/gaussian_information.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace infoaging {
namespace {

constexpr double kLog2PiE = 2.837877066409345483;  // ln(2 pi e)
constexpr double kCmiClamp = 1e-10;

// CMI and MMSE reductions are provably >= 0; small negatives are round-off.
double clamp_nonnegative(double v, const char* what) {
  if (v >= 0.0) return v;
  if (v >= -kCmiClamp) return 0.0;
  throw Error(ErrorCode::numerical_consistency,
              std::string(what) + " = " + std::to_string(v) + " below -1e-10");
}

// MMSE of Y_t given an arbitrary offset set (the quadratic-loss conditional
// entropy). Empty set means no conditioning: E[Y^2].
double mmse_given(const AutocovTable& acf, double sigma2_n, const std::vector<int>& offsets) {
  const double ey2 = acf.at(0) + sigma2_n;
  if (offsets.empty()) return ey2;
  const JointIndexSet idx(offsets, false);
  const SymMatrix r = corr_matrix(acf, sigma2_n, idx);
  std::vector<double> c(offsets.size());
  for (std::size_t j = 0; j < offsets.size(); ++j) c[j] = acf.at(offsets[j]);
  const std::vector<double> x = solve_spd(r, c);
  double explained = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) explained += c[j] * x[j];
  return clamp_nonnegative(ey2 - explained, "conditional variance");
}

// Log-loss conditional entropy in nats via the log-determinant ratio.
// Deliberately a different algebraic route than mmse_given so the Gaussian
// identity hlog = (1/2) ln(2 pi e h2) cross-checks the two.
double hlog_given_nats(const AutocovTable& acf, double sigma2_n, const std::vector<int>& offsets) {
  const double ey2 = acf.at(0) + sigma2_n;
  if (offsets.empty()) {
    if (!(ey2 > 0.0))
      throw Error(ErrorCode::numerical_consistency, "E[Y^2] must be positive");
    return 0.5 * std::log(ey2) + 0.5 * kLog2PiE;
  }
  const JointIndexSet bare(offsets, false);
  const JointIndexSet with_y(offsets, true);
  const double ld_joint = logdet_spd(corr_matrix(acf, sigma2_n, with_y));
  const double ld_cond = logdet_spd(corr_matrix(acf, sigma2_n, bare));
  return 0.5 * (ld_joint - ld_cond) + 0.5 * kLog2PiE;
}

void require_curve_args(int l, int delta_max) {
  if (l < 1) throw Error(ErrorCode::out_of_range, "feature length l must be >= 1");
  if (delta_max < 0) throw Error(ErrorCode::out_of_range, "delta_max must be >= 0");
}

}  // namespace

JointIndexSet::JointIndexSet(std::vector<int> offsets, bool include_y)
    : offsets_(std::move(offsets)), include_y_(include_y) {
  for (int j : offsets_)
    if (j < 0) throw Error(ErrorCode::out_of_range, "offsets must be >= 0");
  std::sort(offsets_.begin(), offsets_.end());
  offsets_.erase(std::unique(offsets_.begin(), offsets_.end()), offsets_.end());
  if (offsets_.empty() && !include_y_)
    throw Error(ErrorCode::dimension_mismatch, "index set selects no coordinates");
}

JointIndexSet JointIndexSet::window(int delta, int l, bool include_y) {
  if (delta < 0) throw Error(ErrorCode::out_of_range, "delta must be >= 0");
  if (l < 1) throw Error(ErrorCode::out_of_range, "feature length l must be >= 1");
  std::vector<int> offsets(static_cast<std::size_t>(l));
  for (int j = 0; j < l; ++j) offsets[static_cast<std::size_t>(j)] = delta + j;
  return JointIndexSet(std::move(offsets), include_y);
}

JointIndexSet JointIndexSet::union_with(const JointIndexSet& other) const {
  std::vector<int> merged(offsets_);
  merged.insert(merged.end(), other.offsets_.begin(), other.offsets_.end());
  return JointIndexSet(std::move(merged), include_y_ || other.include_y_);
}

bool JointIndexSet::contains(const JointIndexSet& other) const {
  if (other.include_y_ && !include_y_) return false;
  return std::includes(offsets_.begin(), offsets_.end(), other.offsets_.begin(),
                       other.offsets_.end());
}

SymMatrix corr_matrix(const AutocovTable& acf, double sigma2_n, const JointIndexSet& idx) {
  for (int j : idx.x_offsets())
    if (j > acf.max_lag())
      throw Error(ErrorCode::out_of_range,
                  "offset " + std::to_string(j) + " outside the autocovariance table");
  const std::size_t nx = idx.x_offsets().size();
  const std::size_t dim = idx.size();
  const std::size_t base = idx.include_y() ? 1 : 0;

  SymMatrix m(dim);
  if (idx.include_y()) {
    m.set(0, 0, acf.at(0) + sigma2_n);
    for (std::size_t j = 0; j < nx; ++j) m.set(0, base + j, acf.at(idx.x_offsets()[j]));
  }
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = i; j < nx; ++j)
      m.set(base + i, base + j, acf.at(std::abs(idx.x_offsets()[i] - idx.x_offsets()[j])));
  return m;
}

double h2_conditional(const AutocovTable& acf, double sigma2_n, int delta, int l) {
  const JointIndexSet idx = JointIndexSet::window(delta, l);
  return mmse_given(acf, sigma2_n, idx.x_offsets());
}

double h2_l1(const AutocovTable& acf, double sigma2_n, int delta) {
  const double g = acf.at(delta);
  return acf.at(0) + sigma2_n - g * g / acf.at(0);
}

double hlog_marginal(const AutocovTable& acf, double sigma2_n, LogBase base) {
  return in_base(hlog_given_nats(acf, sigma2_n, {}), base);
}

double hlog_conditional(const AutocovTable& acf, double sigma2_n, int delta, int l,
                        LogBase base) {
  const JointIndexSet idx = JointIndexSet::window(delta, l);
  return in_base(hlog_given_nats(acf, sigma2_n, idx.x_offsets()), base);
}

double hlog_l1(const AutocovTable& acf, double sigma2_n, int delta, LogBase base) {
  const double v = h2_l1(acf, sigma2_n, delta);
  if (!(v > 0.0))
    throw Error(ErrorCode::numerical_consistency,
                "zero conditional variance: differential entropy diverges");
  return in_base(0.5 * (std::log(v) + kLog2PiE), base);
}

double cmi(const AutocovTable& acf, double sigma2_n, Loss loss, const JointIndexSet& cond,
           const JointIndexSet& extra, LogBase base) {
  if (cond.include_y() || extra.include_y())
    throw Error(ErrorCode::bad_config, "cmi index sets must not include Y");
  if (cond.contains(extra)) return 0.0;  // no new information
  const JointIndexSet joint = cond.union_with(extra);

  if (loss == Loss::quadratic) {
    const double v =
        mmse_given(acf, sigma2_n, cond.x_offsets()) - mmse_given(acf, sigma2_n, joint.x_offsets());
    return clamp_nonnegative(v, "quadratic-loss CMI");
  }
  const double nats = clamp_nonnegative(hlog_given_nats(acf, sigma2_n, cond.x_offsets()) -
                                            hlog_given_nats(acf, sigma2_n, joint.x_offsets()),
                                        "log-loss CMI");
  return in_base(nats, base);
}

EntropyCurve g1_curve(const AutocovTable& acf, double sigma2_n, Loss loss, int l, int delta_max,
                      LogBase base) {
  require_curve_args(l, delta_max);
  EntropyCurve curve{l, loss, base, {}};
  curve.points.reserve(static_cast<std::size_t>(delta_max) + 1);

  double g = loss == Loss::quadratic ? h2_conditional(acf, sigma2_n, 0, l)
                                     : hlog_conditional(acf, sigma2_n, 0, l, base);
  curve.points.emplace_back(0, g);
  for (int k = 0; k < delta_max; ++k) {
    g += cmi(acf, sigma2_n, loss, JointIndexSet::window(k + 1, l), JointIndexSet::window(k, l),
             base);
    curve.points.emplace_back(k + 1, g);
  }
  return curve;
}

double conditional_entropy(const AutocovTable& acf, double sigma2_n, const EntropyQuery& query) {
  if (query.loss == Loss::quadratic) return h2_conditional(acf, sigma2_n, query.delta, query.l);
  return hlog_conditional(acf, sigma2_n, query.delta, query.l, query.log_base);
}

EntropyCurve entropy_curve(const AutocovTable& acf, double sigma2_n, Loss loss, int l,
                           int delta_max, LogBase base) {
  require_curve_args(l, delta_max);
  EntropyCurve curve{l, loss, base, {}};
  curve.points.reserve(static_cast<std::size_t>(delta_max) + 1);
  const double ey2 = acf.at(0) + sigma2_n;
  for (int delta = 0; delta <= delta_max; ++delta) {
    const double h = loss == Loss::quadratic
                         ? h2_conditional(acf, sigma2_n, delta, l)
                         : hlog_conditional(acf, sigma2_n, delta, l, base);
    if (!std::isfinite(h))
      throw Error(ErrorCode::numerical_consistency, "non-finite entropy value");
    if (loss == Loss::quadratic && (h < 0.0 || h > ey2 * (1.0 + 1e-12)))
      throw Error(ErrorCode::numerical_consistency, "H_2 outside [0, E[Y^2]]");
    curve.points.emplace_back(delta, h);
  }
  return curve;
}

}  // namespace infoaging
