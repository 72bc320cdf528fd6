#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quatrange/qmatrix.hpp"
#include "quatrange/quaternion.hpp"

namespace quatrange {

/// Result of one Monte-Carlo cross-check.  Sub-checks inside a report carry
/// different tolerances, so each violation is recorded as the ratio of the
/// measured excess to its own budget; max_violation is the worst ratio and
/// pass holds exactly when max_violation <= 1.
struct OracleReport {
  std::string claim;
  std::string matrix;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  double max_violation = 0.0;
  bool pass = false;
  double runtime_seconds = 0.0;
};

/// Checks W_C(chi(A)) = conv(W_C(A) u W_C(A*)) for a complex matrix A by
/// evaluating the chi(A) quadratic form at `count` random complex unit
/// vectors (containment within tol) and at independently computed support
/// probes for 360 directions, which must match the region's support values
/// within tol plus the sweep error bound.
OracleReport check_prop_chi(const QMatrix& A, int angles, std::int64_t count,
                            std::uint64_t seed, double tol);

/// Checks W_H(A) meets C exactly in W_C(A) for a real matrix A: canonical
/// representatives of `count` samples stay inside the swept region within
/// tol, and 72 boundary points of the region are approached within coverage
/// radius 1e-2 by the cloud or by direct quaternionic evaluation at the
/// sweep's maximizing vectors.
OracleReport check_real_bild(const QMatrix& A, int angles, std::int64_t count,
                             std::uint64_t seed, double tol);

/// Reproduces the known non-convex example diag(i, 2i): samples stay in the
/// pure ball of radius 2 (|Re w| <= 1e-9, |w| <= 2 + 1e-9), the hand
/// witnesses (0,1) -> 2i and (sqrt(2/3), sqrt(1/3) j) -> 0 evaluate exactly
/// within 1e-12, the sampled maximum of |w| reaches 2 - 1e-3 (after a
/// deterministic ascent polish of the best draw when raw sampling falls
/// short), and the convexity certificate reports NotCertified.
OracleReport check_remark_disk(std::int64_t count, std::uint64_t seed);

/// For every batch matrix whose certificate is Certified, samples of W_H must
/// project into nr_of_chi(A).region (within tol) along with their canonical
/// representatives, and in every grid direction the region's support must be
/// realized within 5e-2 by a sample or by direct quaternionic evaluation at a
/// sweep maximizer.  NotCertified matrices are skipped.
OracleReport check_certificate_soundness(const std::vector<QMatrix>& batch,
                                         int angles, std::int64_t count,
                                         std::uint64_t seed, double tol);

/// Deterministic Gaussian test matrices.
QMatrix random_real_matrix(int n, GaussianStream& stream);
QMatrix random_complex_matrix(int n, GaussianStream& stream);
QMatrix random_hermitian_matrix(int n, GaussianStream& stream);

}  // namespace quatrange
