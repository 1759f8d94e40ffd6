#pragma once

#include <cmath>
#include <utility>

#include <Eigen/Dense>

#include "threshold_spectra/errors.hpp"

namespace threshold_spectra {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Dense real symmetric matrix. Stored in full so it can be handed to any
/// Eigen expression; symmetry and finiteness are checked on construction.
template <typename Scalar>
class SymMatrix {
 public:
  using scalar_type = Scalar;

  SymMatrix() = default;

  /// Zero matrix of the given order.
  explicit SymMatrix(Eigen::Index order) : data_(DenseMatrix<Scalar>::Zero(order, order)) {
    if (order < 1) throw InputError("matrix order must be positive");
  }

  /// Takes any Eigen expression; throws InputError if it is not square,
  /// symmetric (exactly) and finite.
  template <typename Derived>
  explicit SymMatrix(const Eigen::MatrixBase<Derived>& m) : data_(m) {
    if (data_.rows() != data_.cols() || data_.rows() < 1) {
      throw InputError("symmetric matrix must be square and non-empty");
    }
    for (Eigen::Index j = 0; j < data_.cols(); ++j) {
      for (Eigen::Index i = 0; i <= j; ++i) {
        if (!is_finite(data_(i, j))) throw InputError("matrix entry is not finite");
        if (data_(i, j) != data_(j, i)) throw InputError("matrix is not symmetric");
      }
    }
  }

  Eigen::Index order() const noexcept { return data_.rows(); }

  Scalar operator()(Eigen::Index i, Eigen::Index j) const { return data_(i, j); }

  /// Writes both (i, j) and (j, i).
  void set(Eigen::Index i, Eigen::Index j, Scalar value) {
    data_(i, j) = value;
    data_(j, i) = value;
  }

  const DenseMatrix<Scalar>& dense() const noexcept { return data_; }

  template <typename To>
  SymMatrix<To> cast() const {
    return SymMatrix<To>(data_.template cast<To>());
  }

  friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
    return a.order() == b.order() && a.data_ == b.data_;
  }

 private:
  static bool is_finite(const Scalar& x) {
    if constexpr (std::is_floating_point_v<Scalar>) {
      return std::isfinite(x);
    } else {
      return true;
    }
  }

  DenseMatrix<Scalar> data_;
};

}  // namespace threshold_spectra
