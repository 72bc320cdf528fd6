#include "quatrange/complex_nr.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace quatrange {

namespace {

using C = std::complex<double>;

C rayleigh(const QMatrix& A, const std::vector<C>& v) {
  const int n = A.dim();
  C acc{0.0, 0.0};
  for (int r = 0; r < n; ++r) {
    C row{0.0, 0.0};
    for (int c = 0; c < n; ++c) row += A.complex_at(r, c) * v[static_cast<std::size_t>(c)];
    acc += std::conj(v[static_cast<std::size_t>(r)]) * row;
  }
  return acc;
}

double point_segment_dist(const C& p, const C& a, const C& b) {
  const C ab = b - a;
  const double len_sq = std::norm(ab);
  if (len_sq == 0.0) return std::abs(p - a);
  double t = ((p.real() - a.real()) * ab.real() + (p.imag() - a.imag()) * ab.imag()) / len_sq;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

// Support contacts of the numerical range of the compression of A onto the
// top two eigenvectors of its Hermitian part at theta.  When the two top
// eigenvalues nearly tie, the boundary of W_C(A) is locally flat and the
// sweep's contact points spread far apart; the compression's range is an
// elliptical disk inscribed in W_C(A) and tangent to that flat arc, so its
// own contacts at quarter-step sub-angles fill the gaps the sweep skips.
void add_flat_arc_points(const QMatrix& A, const HermitianEigen& eig, int partner,
                         double theta, double delta, std::vector<C>& pts) {
  const int n = A.dim();
  const std::vector<C>& v1 = eig.vectors[static_cast<std::size_t>(n) - 1];
  const std::vector<C>& v2 = eig.vectors[static_cast<std::size_t>(partner)];
  C b11{0, 0}, b12{0, 0}, b21{0, 0}, b22{0, 0};
  for (int r = 0; r < n; ++r) {
    C row1{0, 0}, row2{0, 0};
    for (int c = 0; c < n; ++c) {
      const C a = A.complex_at(r, c);
      row1 += a * v1[static_cast<std::size_t>(c)];
      row2 += a * v2[static_cast<std::size_t>(c)];
    }
    const C c1 = std::conj(v1[static_cast<std::size_t>(r)]);
    const C c2 = std::conj(v2[static_cast<std::size_t>(r)]);
    b11 += c1 * row1;
    b12 += c1 * row2;
    b21 += c2 * row1;
    b22 += c2 * row2;
  }

  const C tr = b11 + b22;
  const C disc = std::sqrt(tr * tr - 4.0 * (b11 * b22 - b12 * b21));
  const C mu1 = 0.5 * (tr + disc);
  const C mu2 = 0.5 * (tr - disc);
  const double fro2 =
      std::norm(b11) + std::norm(b12) + std::norm(b21) + std::norm(b22);
  const double omega2 = std::max(0.0, fro2 - std::norm(mu1) - std::norm(mu2));
  const C center = 0.5 * (mu1 + mu2);
  const double focal = 0.5 * std::abs(mu1 - mu2);
  const double minor = 0.5 * std::sqrt(omega2);
  const double major = std::hypot(minor, focal);
  if (major == 0.0) {
    pts.push_back(center);
    return;
  }
  const double psi = focal > 0.0 ? std::arg(mu1 - mu2) : 0.0;
  const C spin = std::polar(1.0, psi);
  for (int s = -3; s <= 3; ++s) {
    if (s == 0) continue;
    const double phi = theta + s * delta / 4.0 - psi;
    const double cf = std::cos(phi), sf = std::sin(phi);
    const double h = std::hypot(major * cf, minor * sf);
    if (h == 0.0) continue;
    pts.push_back(center + spin * C{major * major * cf / h, minor * minor * sf / h});
  }
}

// The swept polygon P is inscribed in the exact set W, which in turn lies in
// the intersection Q of the support half-planes.  Q minus P is covered by the
// triangles spanned by consecutive sweep chords and the corner where the two
// support lines meet, so the largest corner-to-chord distance bounds how far
// any point of W can fall outside P.
double inner_gap_bound(const std::vector<C>& pts, const std::vector<double>& support,
                       int angles) {
  const double delta = 2.0 * std::numbers::pi / angles;
  const double inv_sin = 1.0 / std::sin(delta);
  double worst = 0.0;
  for (int t = 0; t < angles; ++t) {
    const int s = (t + 1) % angles;
    const double a = 2.0 * std::numbers::pi * t / angles;
    const double b = a + delta;
    const double la = support[static_cast<std::size_t>(t)];
    const double lb = support[static_cast<std::size_t>(s)];
    const C corner{(la * std::sin(b) - lb * std::sin(a)) * inv_sin,
                   (lb * std::cos(a) - la * std::cos(b)) * inv_sin};
    worst = std::max(worst,
                     point_segment_dist(corner, pts[static_cast<std::size_t>(t)],
                                        pts[static_cast<std::size_t>(s)]));
  }
  return worst;
}

}  // namespace

std::string_view to_string(Certificate c) {
  return c == Certificate::Certified ? "Certified" : "NotCertified";
}

namespace {

struct SweepData {
  std::vector<C> pts;            // one support contact per grid angle
  std::vector<double> support;   // top eigenvalue per grid angle
  std::vector<C> extra;          // flat-side fill contacts
  double hull_tol = 0.0;
};

// trigger_scale widens the flat-side trigger so that a sweep of a matrix
// with a proportionally larger norm (such as chi of A) fills the same arcs.
SweepData run_sweep(const QMatrix& A, int angles, double trigger_scale) {
  SweepData data;
  data.pts.reserve(static_cast<std::size_t>(angles));
  data.support.reserve(static_cast<std::size_t>(angles));
  const int n = A.dim();
  const double delta = 2.0 * std::numbers::pi / angles;
  // Where the top eigenvalues of the Hermitian part nearly tie, the boundary
  // is locally flat and the grid contacts spread apart, so the sweep fills
  // those stretches with inscribed-compression contacts.
  const double refine_gap =
      8.0 * delta * std::max(1.0, trigger_scale * A.frobenius_norm());
  double scale = 0.0;
  for (int t = 0; t < angles; ++t) {
    const double theta = 2.0 * std::numbers::pi * t / angles;
    const HermitianEigen eig = hermitian_eigs(hermitian_part(A, theta));
    const C z = rayleigh(A, eig.vectors.back());
    scale = std::max(scale, std::abs(z));
    data.pts.push_back(z);
    data.support.push_back(eig.values.back());
    for (int partner = n - 2; partner >= 0 && partner >= n - 5; --partner) {
      if (eig.values.back() - eig.values[static_cast<std::size_t>(partner)] > refine_gap) break;
      add_flat_arc_points(A, eig, partner, theta, delta, data.extra);
    }
  }
  data.hull_tol = 1e-9 * (1.0 + scale);
  return data;
}

}  // namespace

NRApprox boundary(const QMatrix& A, int angles) {
  if (angles < 16) throw std::invalid_argument("boundary needs at least 16 angles");
  if (A.field() == Field::Quaternionic)
    throw std::invalid_argument("boundary requires a real or complex matrix");

  const SweepData data = run_sweep(A, angles, 1.0);
  NRApprox out;
  out.max_support_error = inner_gap_bound(data.pts, data.support, angles) + data.hull_tol;
  std::vector<C> pts = data.pts;
  pts.insert(pts.end(), data.extra.begin(), data.extra.end());
  out.region = ConvexRegion::hull(pts, data.hull_tol);
  out.angles = angles;
  return out;
}

NRApprox nr_of_chi(const QMatrix& A, int angles) {
  if (angles < 16) throw std::invalid_argument("nr_of_chi needs at least 16 angles");
  if (A.field() == Field::Quaternionic)
    throw std::invalid_argument("nr_of_chi requires a real or complex matrix");

  // chi(A) is unitarily similar to blockdiag(A, conj A), so the range of chi
  // is the convex hull of the base range and its mirror image.  The sweep is
  // run with the flat-side trigger chi itself would use (its Frobenius norm
  // is sqrt(2) times the base one), so a direct sweep of chi(A) produces the
  // same contact family and the two constructions agree vertex for vertex.
  const SweepData data = run_sweep(A, angles, std::numbers::sqrt2);
  std::vector<C> pts = data.pts;
  pts.insert(pts.end(), data.extra.begin(), data.extra.end());
  const std::size_t mirrored = pts.size();
  for (std::size_t i = 0; i < mirrored; ++i) pts.push_back(std::conj(pts[i]));

  NRApprox out;
  out.angles = angles;
  out.region = ConvexRegion::hull(pts, data.hull_tol);
  if (angles % 2 == 0) {
    // The support of the combined set in grid direction t is the larger of
    // the base support at t and the mirrored support at -t, and the matching
    // contact realizes it, so the chord bound applies to the winners.
    std::vector<C> winner_pts(static_cast<std::size_t>(angles));
    std::vector<double> winner_support(static_cast<std::size_t>(angles));
    for (int t = 0; t < angles; ++t) {
      const std::size_t s = static_cast<std::size_t>((angles - t) % angles);
      const std::size_t u = static_cast<std::size_t>(t);
      if (data.support[u] >= data.support[s]) {
        winner_pts[u] = data.pts[u];
        winner_support[u] = data.support[u];
      } else {
        winner_pts[u] = std::conj(data.pts[s]);
        winner_support[u] = data.support[s];
      }
    }
    out.max_support_error = inner_gap_bound(winner_pts, winner_support, angles) + data.hull_tol;
  } else {
    // Odd grids have no mirrored partner angle; fall back to the base bound,
    // which carries over because every combined point mixes a base point and
    // a mirrored one, each within the base gap of its own polygon.
    out.max_support_error =
        inner_gap_bound(data.pts, data.support, angles) + 2.0 * data.hull_tol;
  }
  return out;
}

Certificate certify_convexity(const QMatrix& A, int angles, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("certificate tolerance must be > 0");
  const NRApprox nr = boundary(A, angles);
  return union_conjugate_convex(nr.region, tol) ? Certificate::Certified
                                                : Certificate::NotCertified;
}

bool transpose_invariance_check(const QMatrix& A, int angles, double tol) {
  const NRApprox ra = boundary(A, angles);
  const NRApprox rt = boundary(A.transpose(), angles);
  return hausdorff(ra.region, rt.region) <=
         tol + ra.max_support_error + rt.max_support_error;
}

}  // namespace quatrange
