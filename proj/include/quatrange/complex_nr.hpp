#pragma once

#include "quatrange/convex_region.hpp"
#include "quatrange/qmatrix.hpp"

namespace quatrange {

/// Inscribed polygonal approximation of a complex numerical range.
struct NRApprox {
  ConvexRegion region;          ///< inscribed in the true range
  int angles = 0;               ///< support directions swept
  double max_support_error = 0; ///< outer set lies within this of the region
};

enum class Certificate { Certified, NotCertified };

std::string_view to_string(Certificate c);

/// Support-function sweep of W_C(A) for a real or complex matrix: for each
/// theta_t = 2 pi t / angles the top eigenvector v of the Hermitian part
/// H_theta yields the boundary point v* A v.  Requires angles >= 16.
NRApprox boundary(const QMatrix& A, int angles);

/// Convex hull of W_C(A) and its mirror image, which equals W_C(chi(A)) for
/// complex A.
NRApprox nr_of_chi(const QMatrix& A, int angles);

/// Convexity certificate for the quaternionic numerical range of A, decided
/// by the geometric test on B = W_C(A): the union of B with its conjugate is
/// convex exactly when the projection of B onto the real axis equals its
/// real-axis section.  NotCertified is "unknown", not "non-convex".
Certificate certify_convexity(const QMatrix& A, int angles, double tol);

/// Checks W_C(A) = W_C(A^t) at sweep resolution: Hausdorff distance within
/// tol plus both sweep error bounds.
bool transpose_invariance_check(const QMatrix& A, int angles, double tol);

}  // namespace quatrange
