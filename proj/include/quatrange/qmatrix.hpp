#pragma once

#include <complex>
#include <string>
#include <vector>

#include "quatrange/quaternion.hpp"

namespace quatrange {

/// Finest coefficient field containing all entries of a matrix.
enum class Field { Real, Complex, Quaternionic };

std::string to_string(Field f);

/// Immutable square matrix over H, tagged with the finest field containing
/// its entries (detected from exact zero components).
class QMatrix {
 public:
  QMatrix() = default;

  static QMatrix from_entries(int n, std::vector<Quaternion> entries);
  static QMatrix from_complex(int n, const std::vector<std::complex<double>>& entries);
  static QMatrix from_real(int n, const std::vector<double>& entries);
  static QMatrix identity(int n);
  static QMatrix diagonal(const std::vector<Quaternion>& diag);
  static QMatrix zero(int n);

  int dim() const { return n_; }
  Field field() const { return field_; }

  const Quaternion& at(int r, int c) const {
    return e_[static_cast<std::size_t>(r) * n_ + c];
  }
  /// Entry as a complex number; requires the matrix to be real or complex.
  std::complex<double> complex_at(int r, int c) const;

  QMatrix transpose() const;
  QMatrix conj() const;
  QMatrix conj_transpose() const;

  double frobenius_norm() const;
  Quaternion trace() const;
  bool is_hermitian(double tol) const;

  /// Matrix acting on a column vector of the right H-module H^n:
  /// (A x)_m = sum_l A(m,l) x_l.
  std::vector<Quaternion> apply(const std::vector<Quaternion>& x) const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  QMatrix(int n, std::vector<Quaternion> entries);

  int n_ = 0;
  std::vector<Quaternion> e_;
  Field field_ = Field::Real;
};

/// Complex adjoint matrix of A = A1 + A2 j:
/// chi(A) = [[A1, A2], [-conj(A2), conj(A1)]], a 2n x 2n complex matrix.
QMatrix chi(const QMatrix& A);

/// x* A x for a unit vector x in H^n.  Rejects vectors whose norm differs
/// from 1 by more than 1e-9, and dimension mismatches.
Quaternion quadratic_form(const QMatrix& A, const std::vector<Quaternion>& x);

/// H_theta = (e^{-i theta} A + e^{i theta} A*) / 2 for a complex matrix A.
/// The result is Hermitian by construction.
QMatrix hermitian_part(const QMatrix& A, double theta);

/// Eigen decomposition of a complex Hermitian matrix.
struct HermitianEigen {
  std::vector<double> values;  ///< ascending
  std::vector<std::vector<std::complex<double>>> vectors;  ///< unit, vectors[k] pairs values[k]
};

/// Cyclic complex Jacobi iteration; sweeps until every off-diagonal magnitude
/// drops below 1e-12 (relative to max(1, ||H||_F)).  Eigenvalues ascend, with
/// exact ties broken by lexicographic eigenvector order; each eigenvector is
/// phase-normalized so its largest-magnitude component is real positive.
/// Rejects quaternionic or non-Hermitian input.
HermitianEigen hermitian_eigs(const QMatrix& H);

}  // namespace quatrange
