#include "quatrange/convex_region.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string_view>

namespace quatrange {

namespace {

using C = std::complex<double>;

double cross(C o, C a, C b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}

bool lex_less(C a, C b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

double point_segment_distance(C z, C a, C b) {
  const C d = b - a;
  const double len_sq = std::norm(d);
  if (len_sq == 0.0) return std::abs(z - a);
  double t = ((z.real() - a.real()) * d.real() + (z.imag() - a.imag()) * d.imag()) / len_sq;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(z - (a + t * d));
}

// Strict convex hull, counter-clockwise, collinear points dropped.
std::vector<C> monotone_chain(std::vector<C> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<C> h(2 * n);
  std::size_t k = 0;
  for (std::size_t m = 0; m < n; ++m) {  // lower
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[m]) <= 0.0) --k;
    h[k++] = pts[m];
  }
  for (std::size_t m = n - 1, t = k + 1; m-- > 0;) {  // upper
    while (k >= t && cross(h[k - 2], h[k - 1], pts[m]) <= 0.0) --k;
    h[k++] = pts[m];
  }
  h.resize(k - 1);
  return h;
}

void rotate_to_lex_min(std::vector<C>& verts) {
  auto it = std::min_element(verts.begin(), verts.end(), lex_less);
  std::rotate(verts.begin(), it, verts.end());
}

}  // namespace

std::string_view to_string(RegionKind k) {
  switch (k) {
    case RegionKind::Point: return "point";
    case RegionKind::Segment: return "segment";
    case RegionKind::Polygon: return "polygon";
  }
  return "?";
}

ConvexRegion ConvexRegion::hull(std::span<const C> points, double tol) {
  if (points.empty()) throw std::invalid_argument("hull of an empty point set");
  if (tol < 0.0) throw std::invalid_argument("hull tolerance must be >= 0");
  std::vector<C> h = monotone_chain(std::vector<C>(points.begin(), points.end()));

  ConvexRegion r;
  r.tol_ = tol;

  // Farthest vertex pair decides degeneracy.
  double diam = 0.0;
  std::size_t ia = 0, ib = 0;
  for (std::size_t x = 0; x < h.size(); ++x)
    for (std::size_t y = x + 1; y < h.size(); ++y) {
      double d = std::abs(h[x] - h[y]);
      if (d > diam) {
        diam = d;
        ia = x;
        ib = y;
      }
    }
  if (diam <= tol) {
    C centroid{0.0, 0.0};
    for (const C& z : h) centroid += z;
    centroid /= static_cast<double>(h.size());
    r.kind_ = RegionKind::Point;
    r.verts_ = {centroid};
    return r;
  }

  const C a = h[ia], b = h[ib];
  const C dir = (b - a) / diam;
  double width = 0.0, proj_lo = 0.0, proj_hi = 0.0;
  std::size_t lo_idx = ia, hi_idx = ib;
  for (std::size_t x = 0; x < h.size(); ++x) {
    const C rel = h[x] - a;
    double along = rel.real() * dir.real() + rel.imag() * dir.imag();
    double across = std::abs(rel.real() * dir.imag() - rel.imag() * dir.real());
    width = std::max(width, across);
    if (along < proj_lo) {
      proj_lo = along;
      lo_idx = x;
    }
    if (along > proj_hi) {
      proj_hi = along;
      hi_idx = x;
    }
  }
  if (width <= tol) {
    C e1 = h[lo_idx], e2 = h[hi_idx];
    if (!lex_less(e1, e2)) std::swap(e1, e2);
    r.kind_ = RegionKind::Segment;
    r.verts_ = {e1, e2};
    return r;
  }

  rotate_to_lex_min(h);
  r.kind_ = RegionKind::Polygon;
  r.verts_ = std::move(h);
  return r;
}

ConvexRegion ConvexRegion::from_vertices(RegionKind kind, std::vector<C> vertices,
                                         double tol) {
  std::size_t need = kind == RegionKind::Point ? 1 : kind == RegionKind::Segment ? 2 : 3;
  if (vertices.size() < need)
    throw std::invalid_argument("too few vertices for region kind");
  ConvexRegion r;
  r.kind_ = kind;
  r.verts_ = std::move(vertices);
  r.tol_ = tol;
  return r;
}

double ConvexRegion::distance(C z) const {
  switch (kind_) {
    case RegionKind::Point:
      return std::abs(z - verts_[0]);
    case RegionKind::Segment:
      return point_segment_distance(z, verts_[0], verts_[1]);
    case RegionKind::Polygon:
      break;
  }
  bool inside = true;
  const std::size_t n = verts_.size();
  for (std::size_t m = 0; m < n; ++m) {
    if (cross(verts_[m], verts_[(m + 1) % n], z) < 0.0) {
      inside = false;
      break;
    }
  }
  if (inside) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t m = 0; m < n; ++m)
    best = std::min(best, point_segment_distance(z, verts_[m], verts_[(m + 1) % n]));
  return best;
}

bool ConvexRegion::contains(C z, double tol) const { return distance(z) <= tol; }

RealInterval ConvexRegion::real_axis_section(double tol) const {
  double scale = 1.0;
  for (const C& v : verts_) scale = std::max(scale, std::abs(v));
  const double eps_axis = 1e-12 * scale;
  auto snapped_im = [&](const C& v) {
    return std::abs(v.imag()) <= eps_axis ? 0.0 : v.imag();
  };

  double lo = 0.0, hi = 0.0;
  bool found = false;
  auto add = [&](double x) {
    if (!found) {
      lo = hi = x;
      found = true;
    } else {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  };

  const std::size_t n = verts_.size();
  for (std::size_t m = 0; m < n; ++m)
    if (snapped_im(verts_[m]) == 0.0) add(verts_[m].real());
  if (n > 1) {
    const std::size_t edges = kind_ == RegionKind::Segment ? 1 : n;
    for (std::size_t m = 0; m < edges; ++m) {
      const C a = verts_[m], b = verts_[(m + 1) % n];
      const double ia = snapped_im(a), ib = snapped_im(b);
      if ((ia < 0.0 && ib > 0.0) || (ia > 0.0 && ib < 0.0))
        add(a.real() + (b.real() - a.real()) * (0.0 - ia) / (ib - ia));
    }
  }
  if (found) return RealInterval::make(lo, hi);

  // No true crossing: report the near-tangent contact interval when the
  // region comes within tol of the axis.  The closest set of a convex region
  // to a line is spanned by its extreme vertices in the axis direction.
  double dist = std::numeric_limits<double>::infinity();
  for (const C& v : verts_) dist = std::min(dist, std::abs(v.imag()));
  if (dist > tol) return {};
  for (const C& v : verts_)
    if (std::abs(v.imag()) <= dist + eps_axis) add(v.real());
  return RealInterval::make(lo, hi);
}

RealInterval ConvexRegion::real_projection() const {
  double lo = verts_[0].real(), hi = verts_[0].real();
  for (const C& v : verts_) {
    lo = std::min(lo, v.real());
    hi = std::max(hi, v.real());
  }
  return RealInterval::make(lo, hi);
}

ConvexRegion ConvexRegion::conjugate() const {
  std::vector<C> w;
  w.reserve(verts_.size());
  for (const C& v : verts_) w.push_back(std::conj(v));
  if (kind_ == RegionKind::Segment) {
    if (!lex_less(w[0], w[1])) std::swap(w[0], w[1]);
  } else if (kind_ == RegionKind::Polygon) {
    std::reverse(w.begin(), w.end());  // restore CCW order
    rotate_to_lex_min(w);
  }
  ConvexRegion r;
  r.kind_ = kind_;
  r.tol_ = tol_;
  r.verts_ = std::move(w);
  return r;
}

double ConvexRegion::area() const {
  if (kind_ != RegionKind::Polygon) return 0.0;
  double twice = 0.0;
  const std::size_t n = verts_.size();
  for (std::size_t m = 0; m < n; ++m) {
    const C a = verts_[m], b = verts_[(m + 1) % n];
    twice += a.real() * b.imag() - b.real() * a.imag();
  }
  return 0.5 * twice;
}

double ConvexRegion::diameter() const {
  double d = 0.0;
  for (std::size_t x = 0; x < verts_.size(); ++x)
    for (std::size_t y = x + 1; y < verts_.size(); ++y)
      d = std::max(d, std::abs(verts_[x] - verts_[y]));
  return d;
}

double ConvexRegion::support(double theta) const {
  const double c = std::cos(theta), s = std::sin(theta);
  double best = -std::numeric_limits<double>::infinity();
  for (const C& v : verts_) best = std::max(best, v.real() * c + v.imag() * s);
  return best;
}

bool union_conjugate_convex(const ConvexRegion& r, double tol) {
  const RealInterval sect = r.real_axis_section(tol);
  if (sect.empty) return false;
  const RealInterval proj = r.real_projection();
  return std::abs(proj.lo - sect.lo) <= tol && std::abs(proj.hi - sect.hi) <= tol;
}

double hausdorff(const ConvexRegion& a, const ConvexRegion& b) {
  double d = 0.0;
  for (const C& v : a.vertices()) d = std::max(d, b.distance(v));
  for (const C& v : b.vertices()) d = std::max(d, a.distance(v));
  return d;
}

}  // namespace quatrange
