#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "threshold_spectra/errors.hpp"
#include "threshold_spectra/sym_matrix.hpp"

namespace threshold_spectra {

inline constexpr int kJacobiMaxSweeps = 100;

template <typename Scalar>
struct JacobiResult {
  /// Ascending.
  DenseVector<Scalar> eigenvalues;
  int sweeps = 0;
  /// Off-diagonal Frobenius norm at exit.
  Scalar off_norm = 0;
};

namespace detail {

template <typename Scalar>
Scalar off_diagonal_norm(const DenseMatrix<Scalar>& a) {
  Scalar sum = 0;
  for (Eigen::Index j = 1; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < j; ++i) sum += a(i, j) * a(i, j);
  }
  return std::sqrt(Scalar(2) * sum);
}

/// Annihilates a(p, q), p < q, with one plane rotation applied from both
/// sides. Only the upper triangle is kept up to date.
template <typename Scalar>
void rotate(DenseMatrix<Scalar>& a, Eigen::Index p, Eigen::Index q) {
  const Scalar apq = a(p, q);
  const Scalar theta = (a(q, q) - a(p, p)) / (Scalar(2) * apq);
  Scalar t;
  if (std::abs(theta) > Scalar(1) / std::sqrt(std::numeric_limits<Scalar>::epsilon())) {
    t = Scalar(1) / (Scalar(2) * theta);
  } else {
    t = Scalar(1) / (std::abs(theta) + std::sqrt(theta * theta + Scalar(1)));
    if (theta < 0) t = -t;
  }
  const Scalar c = Scalar(1) / std::sqrt(t * t + Scalar(1));
  const Scalar s = t * c;
  const Scalar tau = s / (Scalar(1) + c);

  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = 0;

  const Eigen::Index n = a.rows();
  auto upper = [&a](Eigen::Index i, Eigen::Index j) -> Scalar& {
    return i < j ? a(i, j) : a(j, i);
  };
  for (Eigen::Index r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    Scalar& arp = upper(r, p);
    Scalar& arq = upper(r, q);
    const Scalar g = arp;
    const Scalar h = arq;
    arp = g - s * (h + g * tau);
    arq = h + s * (g - h * tau);
  }
}

}  // namespace detail

/// Eigenvalues of a symmetric matrix by the cyclic Jacobi method with
/// threshold pivoting.
///
/// Sweeps visit the strict upper triangle row by row. During the first three
/// sweeps an element is rotated only if it exceeds a fifth of the mean
/// off-diagonal magnitude; afterwards elements negligible against both
/// diagonal entries are zeroed without rotating. Iteration stops once the
/// off-diagonal Frobenius norm is at most `tol * max(1, ||m||_F)`.
///
/// Throws NumericalError carrying the final off-diagonal norm when
/// `max_sweeps` sweeps do not reach the target. The result depends only on
/// the input bits.
template <typename Scalar>
JacobiResult<Scalar> jacobi_eigenvalues(const SymMatrix<Scalar>& m, Scalar tol,
                                        int max_sweeps = kJacobiMaxSweeps) {
  if (!(tol > 0)) throw InputError("eigensolver tolerance must be positive");

  DenseMatrix<Scalar> a = m.dense();
  const Eigen::Index n = a.rows();
  const Scalar target = tol * std::max(Scalar(1), a.norm());

  JacobiResult<Scalar> result;
  for (int sweep = 0;; ++sweep) {
    const Scalar off = detail::off_diagonal_norm(a);
    result.off_norm = off;
    result.sweeps = sweep;
    if (off <= target) break;
    if (sweep == max_sweeps) {
      throw NumericalError("Jacobi eigensolver did not converge in " + std::to_string(max_sweeps) +
                               " sweeps",
                           static_cast<double>(off));
    }

    Scalar abs_sum = 0;
    for (Eigen::Index j = 1; j < n; ++j) {
      for (Eigen::Index i = 0; i < j; ++i) abs_sum += std::abs(a(i, j));
    }
    const Scalar threshold =
        sweep < 3 ? Scalar(0.2) * abs_sum / static_cast<Scalar>(n * n) : Scalar(0);

    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = std::abs(a(p, q));
        if (apq == 0) continue;
        const Scalar g = Scalar(100) * apq;
        if (sweep >= 3 && std::abs(a(p, p)) + g == std::abs(a(p, p)) &&
            std::abs(a(q, q)) + g == std::abs(a(q, q))) {
          a(p, q) = 0;
          continue;
        }
        if (apq <= threshold) continue;
        detail::rotate(a, p, q);
      }
    }
  }

  result.eigenvalues = a.diagonal();
  std::sort(result.eigenvalues.data(), result.eigenvalues.data() + n);
  return result;
}

}  // namespace threshold_spectra
