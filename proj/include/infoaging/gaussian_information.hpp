#pragma once

#include <utility>
#include <vector>

#include "infoaging/ar_model.hpp"
#include "infoaging/matrix_kernel.hpp"

namespace infoaging {

enum class Loss { quadratic, log_loss };
enum class LogBase { natural, two };

// Converts a natural-log information quantity into the requested base.
// Internal computation is always in nats; conversion happens at the boundary.
inline double in_base(double nats, LogBase base) {
  return base == LogBase::two ? nats / 0.6931471805599453094 : nats;
}

// Time-offset index set for the jointly Gaussian vector: offset j >= 0 means
// X_{t-j} is included; include_y adds Y_t. Offsets are sorted and
// deduplicated at construction -- overlapping window concatenations such as
// [X^l_{t-mu-nu}, X^l_{t-mu}] repeat coordinates and would make every
// correlation matrix singular, while the entropies are invariant under the
// removal of duplicates.
class JointIndexSet {
 public:
  JointIndexSet(std::vector<int> offsets, bool include_y);

  // The feature vector X^l_{t-delta}: offsets {delta, ..., delta+l-1}.
  static JointIndexSet window(int delta, int l, bool include_y = false);

  const std::vector<int>& x_offsets() const { return offsets_; }
  bool include_y() const { return include_y_; }
  std::size_t size() const { return offsets_.size() + (include_y_ ? 1 : 0); }

  JointIndexSet union_with(const JointIndexSet& other) const;
  bool contains(const JointIndexSet& other) const;

 private:
  std::vector<int> offsets_;
  bool include_y_;
};

struct EntropyQuery {
  int delta = 0;
  int l = 1;
  Loss loss = Loss::quadratic;
  LogBase log_base = LogBase::natural;  // log loss only
};

// Tabulated H_L(Y_t | X^l_{t-delta}) for delta = 0..delta_max at fixed l.
struct EntropyCurve {
  int l = 1;
  Loss loss = Loss::quadratic;
  LogBase base = LogBase::natural;
  std::vector<std::pair<int, double>> points;  // (delta, H)
};

// Correlation matrix of the selected coordinates. X-X entries are
// gamma(|i-j|); Y-X entries are gamma(j) (the observation noise is
// independent of the signal); the Y-Y entry is gamma(0) + sigma2_n. Y_t,
// when included, occupies the first row/column.
SymMatrix corr_matrix(const AutocovTable& acf, double sigma2_n, const JointIndexSet& idx);

// Quadratic loss: H_2(Y_t | X^l_{t-delta}) = E[Y^2] - c (R_{X^l})^{-1} c^T
// with c = [gamma(delta), ..., gamma(delta+l-1)]. At delta = 0 this is
// exactly sigma2_n.
double h2_conditional(const AutocovTable& acf, double sigma2_n, int delta, int l);

// l = 1 special case: E[Y^2] - gamma(delta)^2 / gamma(0).
double h2_l1(const AutocovTable& acf, double sigma2_n, int delta);

// Log loss, no conditioning: (1/2) log(2 pi e E[Y^2]).
double hlog_marginal(const AutocovTable& acf, double sigma2_n, LogBase base);

// Log loss: (1/2)[log det R_{[Y, X^l_{t-delta}]} - log det R_{X^l}]
// + (1/2) log 2 pi e. May be negative (differential entropy).
double hlog_conditional(const AutocovTable& acf, double sigma2_n, int delta, int l,
                        LogBase base);

// l = 1 special case of hlog_conditional.
double hlog_l1(const AutocovTable& acf, double sigma2_n, int delta, LogBase base);

// L-conditional mutual information I_L(Y_t; extra | cond) =
// H_L(Y | cond) - H_L(Y | cond u extra), evaluated on deduplicated index
// sets. Nonnegative; round-off values in [-1e-10, 0) are clamped to 0 and
// anything more negative raises a numerical-consistency error.
double cmi(const AutocovTable& acf, double sigma2_n, Loss loss, const JointIndexSet& cond,
           const JointIndexSet& extra, LogBase base = LogBase::natural);

// Markov bound curve g1(delta) = H_L(Y | X^l_t)
// + sum_{k=0}^{delta-1} I_L(Y; X^l_{t-k} | X^l_{t-k-1}).
// Non-decreasing in delta by construction (every summand is >= 0).
EntropyCurve g1_curve(const AutocovTable& acf, double sigma2_n, Loss loss, int l,
                      int delta_max, LogBase base = LogBase::natural);

// H_L(Y_t | X^l_{t-delta}) tabulated over delta = 0..delta_max.
EntropyCurve entropy_curve(const AutocovTable& acf, double sigma2_n, Loss loss, int l,
                           int delta_max, LogBase base = LogBase::natural);

// Query-level dispatch over the two losses.
double conditional_entropy(const AutocovTable& acf, double sigma2_n, const EntropyQuery& query);

}  // namespace infoaging
