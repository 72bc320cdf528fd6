#include "quatrange/shapes.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace quatrange {

namespace {

using C = std::complex<double>;

struct Eig2 {
  C l1, l2;       // |l1| <= ... ordering: l1 before l2 by (re, im)
  bool real_pair;  // discriminant >= 0
};

// Roots of the characteristic polynomial of a real 2x2 matrix, using the
// stable branch of the quadratic formula.
Eig2 eig2_real(double a, double b, double c, double d) {
  const double tr = a + d;
  const double det = a * d - b * c;
  const double disc = tr * tr - 4.0 * det;
  Eig2 out;
  if (disc >= 0.0) {
    out.real_pair = true;
    const double s = std::sqrt(disc);
    double r1;
    if (tr >= 0.0)
      r1 = 0.5 * (tr + s);
    else
      r1 = 0.5 * (tr - s);
    const double r2 = (r1 != 0.0) ? det / r1 : 0.0;
    out.l1 = std::min(r1, r2);
    out.l2 = std::max(r1, r2);
  } else {
    out.real_pair = false;
    const double im = 0.5 * std::sqrt(-disc);
    out.l1 = C{0.5 * tr, -im};
    out.l2 = C{0.5 * tr, im};
  }
  return out;
}

// Support-contact points of the axis-aligned ellipse: the vertex for grid
// direction theta is the boundary point whose outward normal is theta.  The
// fill rule mirrors the support sweep: a generating 2x2 matrix has Hermitian
// part eigenvalue gap 2*sqrt(a^2cos^2+b^2sin^2) at angle theta and Frobenius
// norm sqrt(2(c^2+a^2+b^2)), and wherever that gap falls under the sweep's
// flat-side trigger, contacts at quarter-step sub-angles are inserted.  A
// sweep of the same set at the same resolution therefore lands on an
// identical vertex family, which keeps polygon comparisons sharp even for
// thin ellipses.
std::vector<C> ellipse_points(double cx, double a, double b, int resolution) {
  const double delta = 2.0 * std::numbers::pi / resolution;
  const double fro = std::sqrt(2.0 * (cx * cx + a * a + b * b));
  const double refine_gap = 8.0 * delta * std::max(1.0, fro);
  std::vector<C> pts;
  pts.reserve(static_cast<std::size_t>(resolution));
  const auto contact = [&](double th) {
    const double cth = std::cos(th), sth = std::sin(th);
    const double h = std::hypot(a * cth, b * sth);
    if (h == 0.0) {
      pts.emplace_back(cx, 0.0);
      return;
    }
    pts.emplace_back(cx + a * a * cth / h, b * b * sth / h);
  };
  for (int t = 0; t < resolution; ++t) {
    const double th = 2.0 * std::numbers::pi * t / resolution;
    contact(th);
    if (2.0 * std::hypot(a * std::cos(th), b * std::sin(th)) <= refine_gap) {
      for (int s = -3; s <= 3; ++s)
        if (s != 0) contact(th + s * delta / 4.0);
    }
  }
  return pts;
}

std::vector<C> circle_points(double cx, double r, int resolution) {
  return ellipse_points(cx, r, r, resolution);
}

bool entry_small(const Quaternion& q, double eps) { return q.norm() <= eps; }

// Structural probe for the disk_3x3 shape; p/x/y/z are outputs.
bool matches_disk_3x3(const QMatrix& A, double tol, double* p, C* x, C* y, C* z) {
  if (A.dim() != 3 || A.field() == Field::Quaternionic) return false;
  const double eps = tol * std::max(1.0, A.frobenius_norm());
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < r; ++c)
      if (!entry_small(A.at(r, c), eps)) return false;
  const C d0 = A.complex_at(0, 0), d1 = A.complex_at(1, 1), d2 = A.complex_at(2, 2);
  if (std::abs(d1 - d0) > eps || std::abs(d2 - d0) > eps) return false;
  if (std::abs(d0.imag()) > eps) return false;
  *p = (d0.real() + d1.real() + d2.real()) / 3.0;
  *x = A.complex_at(0, 1);
  *y = A.complex_at(0, 2);
  *z = A.complex_at(1, 2);
  const double scale3 = std::max(1.0, A.frobenius_norm());
  if (std::abs(*x) * std::abs(*y) * std::abs(*z) > tol * scale3 * scale3 * scale3)
    return false;
  return true;
}

// Structural probe for [[a1 I, X], [k X*, a2 I]] over any split n1 + n2 = n.
bool matches_block(const QMatrix& A, double tol) {
  const int n = A.dim();
  if (n < 2 || A.field() == Field::Quaternionic) return false;
  const double eps = tol * std::max(1.0, A.frobenius_norm());
  for (int n1 = 1; n1 < n; ++n1) {
    const int n2 = n - n1;
    const C a1 = A.complex_at(0, 0);
    const C a2 = A.complex_at(n1, n1);
    bool ok = true;
    for (int r = 0; r < n1 && ok; ++r)
      for (int c = 0; c < n1 && ok; ++c) {
        const C want = (r == c) ? a1 : C{0.0, 0.0};
        if (std::abs(A.complex_at(r, c) - want) > eps) ok = false;
      }
    for (int r = 0; r < n2 && ok; ++r)
      for (int c = 0; c < n2 && ok; ++c) {
        const C want = (r == c) ? a2 : C{0.0, 0.0};
        if (std::abs(A.complex_at(n1 + r, n1 + c) - want) > eps) ok = false;
      }
    if (!ok) continue;

    // Least-squares scalar k with Y = k X*, where X is the top-right block
    // and Y the bottom-left one; X* is the n2 x n1 conjugate transpose.
    C num{0.0, 0.0};
    double den = 0.0;
    for (int r = 0; r < n2; ++r)
      for (int c = 0; c < n1; ++c) {
        const C xs = std::conj(A.complex_at(c, n1 + r));  // (X*)(r,c)
        const C yv = A.complex_at(n1 + r, c);
        num += std::conj(xs) * yv;
        den += std::norm(xs);
      }
    const C k = den > 0.0 ? num / den : C{0.0, 0.0};
    double resid = 0.0;
    for (int r = 0; r < n2; ++r)
      for (int c = 0; c < n1; ++c) {
        const C xs = std::conj(A.complex_at(c, n1 + r));
        resid += std::norm(A.complex_at(n1 + r, c) - k * xs);
      }
    if (std::sqrt(resid) <= eps) return true;
  }
  return false;
}

}  // namespace

std::string_view to_string(ShapeTag t) {
  switch (t) {
    case ShapeTag::Segment: return "segment";
    case ShapeTag::PureDisk: return "pure_disk";
    case ShapeTag::QuaternionDisk: return "quaternion_disk";
    case ShapeTag::Ellipsoid4D: return "ellipsoid4d";
    case ShapeTag::Ellipse: return "ellipse";
    case ShapeTag::Unclassified: return "unclassified";
  }
  return "?";
}

ConvexRegion ShapeClass::complex_section(int resolution) const {
  switch (tag) {
    case ShapeTag::Segment: {
      const std::vector<C> pts{endpoint_a, endpoint_b};
      return ConvexRegion::hull(pts);
    }
    case ShapeTag::PureDisk: {
      const std::vector<C> pts{C{center, -radius}, C{center, radius}};
      return ConvexRegion::hull(pts);
    }
    case ShapeTag::QuaternionDisk:
      return ConvexRegion::hull(circle_points(center, radius, resolution));
    case ShapeTag::Ellipsoid4D:
      return ConvexRegion::hull(
          ellipse_points(center, semi_axis_re, semi_axis_im, resolution));
    case ShapeTag::Ellipse:
      return region;
    case ShapeTag::Unclassified:
      break;
  }
  throw std::logic_error("no complex section for an unclassified shape");
}

ShapeClass classify_2x2_real(const QMatrix& A, double tol) {
  if (A.field() != Field::Real || A.dim() != 2)
    throw std::invalid_argument("classify_2x2_real requires a real 2x2 matrix");
  const double a = A.at(0, 0).a0, b = A.at(0, 1).a0;
  const double c = A.at(1, 0).a0, d = A.at(1, 1).a0;
  const double fro_sq = a * a + b * b + c * c + d * d;

  // Normality test on the commutator A A^t - A^t A (symmetric here).
  const double aat11 = a * a + b * b, aat12 = a * c + b * d, aat22 = c * c + d * d;
  const double ata11 = a * a + c * c, ata12 = a * b + c * d, ata22 = b * b + d * d;
  const double comm = std::sqrt(std::pow(aat11 - ata11, 2.0) +
                                2.0 * std::pow(aat12 - ata12, 2.0) +
                                std::pow(aat22 - ata22, 2.0));
  const bool normal = comm <= tol * fro_sq;

  const Eig2 eig = eig2_real(a, b, c, d);
  ShapeClass out;
  if (normal) {
    if (eig.real_pair) {
      out.tag = ShapeTag::Segment;
      out.endpoint_a = eig.l1;
      out.endpoint_b = eig.l2;
    } else {
      out.tag = ShapeTag::PureDisk;
      out.center = eig.l1.real();
      out.radius = std::abs(eig.l1.imag());
    }
    return out;
  }

  const double abs_sq = std::norm(eig.l1) + std::norm(eig.l2);
  double omega_sq = fro_sq - abs_sq;
  if (omega_sq < -tol * std::max(1.0, fro_sq))
    throw std::logic_error("eigenvalue magnitudes exceed the Frobenius norm");
  omega_sq = std::max(omega_sq, 0.0);
  const double minor = 0.5 * std::sqrt(omega_sq);
  const double gap = std::abs(eig.l1 - eig.l2);

  if (gap <= tol * (1.0 + std::sqrt(fro_sq))) {
    out.tag = ShapeTag::QuaternionDisk;
    out.center = eig.l1.real();
    out.radius = minor;
    return out;
  }

  out.tag = ShapeTag::Ellipsoid4D;
  out.center = 0.5 * (eig.l1 + eig.l2).real();
  const double focal = std::sqrt(minor * minor + 0.25 * gap * gap);
  if (eig.real_pair) {  // foci on the real axis
    out.semi_axis_re = focal;
    out.semi_axis_im = minor;
  } else {  // conjugate foci: focal axis is imaginary
    out.semi_axis_re = minor;
    out.semi_axis_im = focal;
  }
  return out;
}

ShapeClass disk_3x3(const QMatrix& A, double tol, int angles) {
  double p = 0.0;
  C x, y, z;
  if (!matches_disk_3x3(A, tol, &p, &x, &y, &z))
    throw std::invalid_argument(
        "disk_3x3 requires an upper-triangular 3x3 matrix with constant real "
        "diagonal and a vanishing product of the strict upper entries");
  const double r =
      0.5 * std::sqrt(std::norm(x) + std::norm(y) + std::norm(z));
  const double eps = tol * std::max(1.0, A.frobenius_norm());

  ShapeClass out;
  if (std::abs(x.imag()) <= eps && std::abs(y.imag()) <= eps &&
      std::abs(z.imag()) <= eps) {
    out.tag = ShapeTag::QuaternionDisk;
    out.center = p;
    out.radius = r;
    return out;
  }
  out.tag = ShapeTag::Ellipse;
  out.region = ConvexRegion::hull(circle_points(p, r, angles));
  out.certificate = certify_convexity(A, angles, std::max(tol, 1e-7));
  return out;
}

Certificate certify_block(const QMatrix& A, int angles, double tol) {
  if (!matches_block(A, tol))
    throw std::invalid_argument(
        "certify_block requires the two-block form [[a1 I, X], [k X*, a2 I]]");
  return certify_convexity(A, angles, std::max(tol, 1e-7));
}

ShapeClass classify(const QMatrix& A, double tol, int angles) {
  if (A.field() == Field::Real && A.dim() == 2) return classify_2x2_real(A, tol);
  {
    double p;
    C x, y, z;
    if (matches_disk_3x3(A, tol, &p, &x, &y, &z)) return disk_3x3(A, tol, angles);
  }
  if (matches_block(A, tol)) {
    ShapeClass out;
    out.tag = ShapeTag::Ellipse;
    out.region = boundary(A, angles).region;
    out.certificate = certify_convexity(A, angles, std::max(tol, 1e-7));
    return out;
  }
  return ShapeClass{};
}

}  // namespace quatrange
