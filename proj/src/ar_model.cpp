#include "infoaging/ar_model.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace infoaging {
namespace {

// Durand-Kerner iteration for the roots of the monic polynomial
// z^p + c_1 z^{p-1} + ... + c_p. Orders here are tiny (p <= ~10), so a
// fixed-point simultaneous iteration is accurate and dependency-free.
std::vector<std::complex<double>> monic_roots(const std::vector<double>& tail) {
  using cplx = std::complex<double>;
  const std::size_t p = tail.size();

  auto eval = [&](cplx z) {
    cplx v(1.0, 0.0);
    for (std::size_t k = 0; k < p; ++k) v = v * z + tail[k];
    return v;
  };

  std::vector<cplx> roots(p);
  const cplx spread(0.4, 0.9);  // standard non-real, non-unit starting spread
  cplx w(1.0, 0.0);
  for (auto& r : roots) {
    w *= spread;
    r = w;
  }

  for (int iter = 0; iter < 500; ++iter) {
    double worst = 0.0;
    for (std::size_t i = 0; i < p; ++i) {
      cplx denom(1.0, 0.0);
      for (std::size_t j = 0; j < p; ++j)
        if (j != i) denom *= roots[i] - roots[j];
      const cplx step = eval(roots[i]) / denom;
      roots[i] -= step;
      worst = std::max(worst, std::abs(step));
    }
    if (worst < 1e-14) break;
  }
  return roots;
}

void check_model_fields(const ArModel& model) {
  if (model.coeffs.empty())
    throw Error(ErrorCode::invalid_model, "empty coefficient list");
  for (double a : model.coeffs)
    if (!std::isfinite(a)) throw Error(ErrorCode::invalid_model, "non-finite coefficient");
  if (!(model.sigma2_w > 0.0) || !std::isfinite(model.sigma2_w))
    throw Error(ErrorCode::invalid_model, "sigma2_w must be > 0");
  if (!(model.sigma2_n >= 0.0) || !std::isfinite(model.sigma2_n))
    throw Error(ErrorCode::invalid_model, "sigma2_n must be >= 0");
}

// Dense LU solve with partial pivoting; p is small so no factored reuse.
std::vector<double> lu_solve(std::vector<std::vector<double>> a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    if (std::fabs(a[piv][col]) < 1e-14)
      throw Error(ErrorCode::degenerate_model, "singular Yule-Walker system");
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    double s = b[ii];
    for (std::size_t c = ii + 1; c < n; ++c) s -= a[ii][c] * x[c];
    x[ii] = s / a[ii][ii];
  }
  return x;
}

}  // namespace

AutocovTable::AutocovTable(std::vector<double> gamma) : gamma_(std::move(gamma)) {
  if (gamma_.empty())
    throw Error(ErrorCode::dimension_mismatch, "autocovariance table must hold gamma(0)");
  if (!(gamma_[0] > 0.0))
    throw Error(ErrorCode::degenerate_model, "gamma(0) must be positive");
  for (double g : gamma_)
    if (std::fabs(g) > gamma_[0] * (1.0 + 1e-12))
      throw Error(ErrorCode::numerical_consistency, "|gamma(k)| exceeds gamma(0)");
}

ValidationReport validate_model(const ArModel& model) {
  check_model_fields(model);

  // Characteristic polynomial z^p - a_1 z^{p-1} - ... - a_p.
  std::vector<double> tail(model.coeffs.size());
  for (std::size_t i = 0; i < tail.size(); ++i) tail[i] = -model.coeffs[i];

  ValidationReport report;
  for (const auto& z : monic_roots(tail)) report.root_magnitudes.push_back(std::abs(z));
  std::sort(report.root_magnitudes.begin(), report.root_magnitudes.end(), std::greater<>());
  report.stationary = report.root_magnitudes.front() < 1.0 - kStationarityTol;
  return report;
}

AutocovTable autocovariance(const ArModel& model, int max_lag) {
  if (max_lag < 0) throw Error(ErrorCode::out_of_range, "max_lag must be >= 0");
  if (!validate_model(model).stationary)
    throw Error(ErrorCode::invalid_model, "model is not stationary");

  const int p = model.order();
  const auto& a = model.coeffs;

  // Unknowns gamma(0..p):
  //   gamma(0) - sum_i a_i gamma(i)      = sigma2_w
  //   gamma(k) - sum_i a_i gamma(|k-i|)  = 0          for k = 1..p
  std::vector<std::vector<double>> mat(p + 1, std::vector<double>(p + 1, 0.0));
  std::vector<double> rhs(p + 1, 0.0);
  for (int k = 0; k <= p; ++k) {
    mat[k][k] += 1.0;
    for (int i = 1; i <= p; ++i) mat[k][std::abs(k - i)] -= a[i - 1];
  }
  rhs[0] = model.sigma2_w;
  const std::vector<double> head = lu_solve(std::move(mat), std::move(rhs));

  std::vector<double> gamma(static_cast<std::size_t>(max_lag) + 1);
  for (int k = 0; k <= std::min(max_lag, p); ++k) gamma[k] = head[k];
  for (int k = p + 1; k <= max_lag; ++k) {
    double s = 0.0;
    for (int i = 1; i <= p; ++i) s += a[i - 1] * gamma[k - i];
    gamma[k] = s;
  }
  return AutocovTable(std::move(gamma));
}

double target_second_moment(const ArModel& model, const AutocovTable& acf) {
  check_model_fields(model);
  return acf.at(0) + model.sigma2_n;
}

}  // namespace infoaging
