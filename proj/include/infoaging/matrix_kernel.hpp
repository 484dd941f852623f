#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "infoaging/errors.hpp"

namespace infoaging {

// Dense symmetric matrix, templated on the scalar so the epsilon-Markov grid
// can run the identical kernel in quadruple precision. Dimensions here never
// exceed ~25, so everything is plain O(n^3) with no blocking.
template <class T>
class SymMatrixT {
 public:
  explicit SymMatrixT(std::size_t dim) : dim_(dim), a_(dim * dim, T(0)) {
    if (dim == 0) throw Error(ErrorCode::dimension_mismatch, "matrix dimension must be >= 1");
  }

  std::size_t dim() const { return dim_; }

  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

  // Writes both (i,j) and (j,i); symmetry holds by construction.
  void set(std::size_t i, std::size_t j, T value) {
    a_[i * dim_ + j] = value;
    a_[j * dim_ + i] = value;
  }

 private:
  std::size_t dim_;
  std::vector<T> a_;
};

using SymMatrix = SymMatrixT<double>;

namespace detail {

// Lower Cholesky factor. A pivot (the value under the square root) at or
// below 1e-12 x max diagonal entry signals a non-SPD input, which upstream
// means a duplicated or degenerate index set.
template <class T>
std::vector<T> cholesky_lower(const SymMatrixT<T>& m) {
  using std::sqrt;
  const std::size_t n = m.dim();
  T max_diag = m(0, 0);
  for (std::size_t i = 1; i < n; ++i)
    if (m(i, i) > max_diag) max_diag = m(i, i);
  const T spd_tol = T(1e-12) * max_diag;

  std::vector<T> L(n * n, T(0));
  for (std::size_t j = 0; j < n; ++j) {
    T pivot = m(j, j);
    for (std::size_t k = 0; k < j; ++k) pivot -= L[j * n + k] * L[j * n + k];
    if (!(pivot > spd_tol))
      throw Error(ErrorCode::not_positive_definite,
                  "Cholesky pivot at column " + std::to_string(j) + " is not positive");
    L[j * n + j] = sqrt(pivot);
    for (std::size_t i = j + 1; i < n; ++i) {
      T s = m(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= L[i * n + k] * L[j * n + k];
      L[i * n + j] = s / L[j * n + j];
    }
  }
  return L;
}

}  // namespace detail

// log det(m) = sum of 2 log L_ii. Determinant ratios downstream become
// sums/differences of these, never raw determinants.
template <class T>
T logdet_spd(const SymMatrixT<T>& m) {
  using std::log;
  const std::size_t n = m.dim();
  const std::vector<T> L = detail::cholesky_lower(m);
  T acc(0);
  for (std::size_t i = 0; i < n; ++i) acc += T(2) * log(L[i * n + i]);
  return acc;
}

template <class T>
std::vector<T> solve_spd(const SymMatrixT<T>& m, const std::vector<T>& b) {
  const std::size_t n = m.dim();
  if (b.size() != n)
    throw Error(ErrorCode::dimension_mismatch,
                "rhs length " + std::to_string(b.size()) + " != dim " + std::to_string(n));
  const std::vector<T> L = detail::cholesky_lower(m);

  std::vector<T> x(b);
  for (std::size_t i = 0; i < n; ++i) {  // L z = b
    for (std::size_t k = 0; k < i; ++k) x[i] -= L[i * n + k] * x[k];
    x[i] /= L[i * n + i];
  }
  for (std::size_t ii = n; ii-- > 0;) {  // L^T x = z
    for (std::size_t k = ii + 1; k < n; ++k) x[ii] -= L[k * n + ii] * x[k];
    x[ii] /= L[ii * n + ii];
  }
  return x;
}

}  // namespace infoaging
