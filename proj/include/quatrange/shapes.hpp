#pragma once

#include <complex>

#include "quatrange/complex_nr.hpp"
#include "quatrange/qmatrix.hpp"

namespace quatrange {

/// Closed-form shape of a quaternionic numerical range.
enum class ShapeTag {
  Segment,         ///< real segment [endpoint_a, endpoint_b]
  PureDisk,        ///< center + {pure p : |p| <= radius}, a 3-ball off the real axis
  QuaternionDisk,  ///< 4-ball {q : |q - center| <= radius}, center real
  Ellipsoid4D,     ///< {(Re q - center)^2/a^2 + |Im q|^2/b^2 <= 1}
  Ellipse,         ///< only the complex range is known in closed/numeric form
  Unclassified,
};

std::string_view to_string(ShapeTag t);

struct ShapeClass {
  ShapeTag tag = ShapeTag::Unclassified;

  std::complex<double> endpoint_a{0.0, 0.0};  ///< Segment
  std::complex<double> endpoint_b{0.0, 0.0};  ///< Segment
  double center = 0.0;                        ///< disks / Ellipsoid4D (real)
  double radius = 0.0;                        ///< disks
  double semi_axis_re = 0.0;                  ///< Ellipsoid4D: a, along Re
  double semi_axis_im = 0.0;                  ///< Ellipsoid4D: b, along each Im axis
  ConvexRegion region;                        ///< Ellipse: the complex range
  Certificate certificate = Certificate::NotCertified;  ///< Ellipse convexity

  /// Intersection of the shape with the complex plane, as a region; round
  /// shapes are inscribed polygons on `resolution` vertices.  Throws for
  /// Unclassified.
  ConvexRegion complex_section(int resolution = 720) const;
};

/// Closed-form classification of W_H(A) for a real 2x2 matrix via the
/// elliptical range theorem: normal matrices give a segment (real
/// eigenvalues) or a pure-imaginary disk (conjugate pair); non-normal ones a
/// quaternionic disk (equal eigenvalues) or a 4-dimensional ellipsoid with
/// foci at the eigenvalues and minor semi-axis |omega|/2, where
/// |omega|^2 = ||A||_F^2 - |l1|^2 - |l2|^2.
ShapeClass classify_2x2_real(const QMatrix& A, double tol = 1e-9);

/// 3x3 upper-triangular matrix with constant real diagonal p and one zero
/// product of the strict upper entries (x y z = 0): the complex range is the
/// disk of radius sqrt(|x|^2+|y|^2+|z|^2)/2 centered at p.  Real entries give
/// the full quaternionic disk; complex entries give Ellipse-kind carrying the
/// disk with a convexity certificate.  Throws when the structure is absent.
ShapeClass disk_3x3(const QMatrix& A, double tol = 1e-9, int angles = 720);

/// Convexity certificate for two-block matrices [[a1 I, X], [k X*, a2 I]].
/// Throws when no block split of that form exists.
Certificate certify_block(const QMatrix& A, int angles, double tol);

/// Dispatch: real 2x2 -> classify_2x2_real; structured 3x3 -> disk_3x3;
/// two-block form -> Ellipse kind carrying the swept complex range and the
/// block certificate; anything else -> Unclassified.
ShapeClass classify(const QMatrix& A, double tol = 1e-9, int angles = 720);

}  // namespace quatrange
