#pragma once

#include <complex>
#include <span>
#include <vector>

namespace quatrange {

enum class RegionKind { Point, Segment, Polygon };

std::string_view to_string(RegionKind k);

/// Closed interval on the real axis; empty when no point qualifies.
struct RealInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool empty = true;

  static RealInterval make(double lo, double hi) { return {lo, hi, false}; }
};

/// Convex subset of the plane: a point, a segment, or a convex polygon with
/// vertices in counter-clockwise order.  Degenerate hulls collapse to the
/// lower-dimensional kinds instead of surviving as thin polygons.
class ConvexRegion {
 public:
  /// Point at the origin; hull() is the normal constructor.
  ConvexRegion() : kind_(RegionKind::Point), verts_(1, {0.0, 0.0}) {}

  /// Convex hull (monotone chain).  Inputs whose hull has diameter <= tol
  /// collapse to a Point; hulls with width <= tol across the diameter
  /// direction collapse to a Segment.  Throws on an empty input.
  static ConvexRegion hull(std::span<const std::complex<double>> points,
                           double tol = 1e-9);

  /// Region with known kind and vertices (already hulled), e.g. re-read from
  /// an export.  Vertices are trusted as-is.
  static ConvexRegion from_vertices(RegionKind kind,
                                    std::vector<std::complex<double>> vertices,
                                    double tol);

  RegionKind kind() const { return kind_; }
  const std::vector<std::complex<double>>& vertices() const { return verts_; }
  double tol() const { return tol_; }

  /// Euclidean distance from z to the region (0 inside).
  double distance(std::complex<double> z) const;
  /// True when z lies within tol of the region.
  bool contains(std::complex<double> z, double tol) const;

  /// Intersection with the real axis.  When the region genuinely meets the
  /// axis this is the exact chord; when it only comes within tol of the axis
  /// the near-tangent contact interval is reported; otherwise empty.
  RealInterval real_axis_section(double tol) const;

  /// Orthogonal projection onto the real axis (never empty).
  RealInterval real_projection() const;

  /// Mirror image across the real axis.
  ConvexRegion conjugate() const;

  double area() const;
  double diameter() const;
  /// Support value max Re(e^{-i theta} v) over the region.
  double support(double theta) const;

 private:
  RegionKind kind_ = RegionKind::Point;
  std::vector<std::complex<double>> verts_;
  double tol_ = 1e-9;
};

/// True when the union of R and its mirror image across the real axis is
/// convex at resolution tol, decided by the interval test: the projection of
/// R onto the real axis must equal its real-axis section within tol.
bool union_conjugate_convex(const ConvexRegion& r, double tol);

/// Hausdorff distance between two regions (exact for convex vertex sets).
double hausdorff(const ConvexRegion& a, const ConvexRegion& b);

}  // namespace quatrange
