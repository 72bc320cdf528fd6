#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "quatrange/complex_nr.hpp"
#include "quatrange/qmatrix.hpp"
#include "quatrange/quaternion.hpp"
#include "quatrange/shapes.hpp"

using namespace quatrange;
using C = std::complex<double>;

TEST_CASE("symmetric 2x2 matrices classify as the spectral segment") {
  const QMatrix D = QMatrix::from_real(2, {1.0, 0.0, 0.0, 3.0});
  const ShapeClass s = classify_2x2_real(D);
  CHECK(s.tag == ShapeTag::Segment);
  CHECK(std::abs(s.endpoint_a - C{1, 0}) < 1e-12);
  CHECK(std::abs(s.endpoint_b - C{3, 0}) < 1e-12);

  // Non-diagonal symmetric: eigenvalues 0 and 2.
  const QMatrix S = QMatrix::from_real(2, {1.0, 1.0, 1.0, 1.0});
  const ShapeClass t = classify_2x2_real(S);
  CHECK(t.tag == ShapeTag::Segment);
  CHECK(std::abs(t.endpoint_a - C{0, 0}) < 1e-12);
  CHECK(std::abs(t.endpoint_b - C{2, 0}) < 1e-12);
}

TEST_CASE("normal 2x2 matrices with conjugate eigenvalues classify as a pure disk") {
  const QMatrix R = QMatrix::from_real(2, {0.0, -1.0, 1.0, 0.0});
  const ShapeClass s = classify_2x2_real(R);
  CHECK(s.tag == ShapeTag::PureDisk);
  CHECK(s.center == doctest::Approx(0.0));
  CHECK(s.radius == doctest::Approx(1.0));

  const QMatrix M = QMatrix::from_real(2, {1.0, 2.0, -2.0, 1.0});
  const ShapeClass t = classify_2x2_real(M);
  CHECK(t.tag == ShapeTag::PureDisk);
  CHECK(t.center == doctest::Approx(1.0));
  CHECK(t.radius == doctest::Approx(2.0));
}

TEST_CASE("a nilpotent jordan cell classifies as a quaternionic disk") {
  const QMatrix J = QMatrix::from_real(2, {0.0, 1.0, 0.0, 0.0});
  const ShapeClass s = classify_2x2_real(J);
  CHECK(s.tag == ShapeTag::QuaternionDisk);
  CHECK(s.center == doctest::Approx(0.0));
  CHECK(s.radius == doctest::Approx(0.5));

  // Shifted and scaled: eigenvalues both 2, off-diagonal weight 3.
  const QMatrix K = QMatrix::from_real(2, {2.0, 3.0, 0.0, 2.0});
  const ShapeClass t = classify_2x2_real(K);
  CHECK(t.tag == ShapeTag::QuaternionDisk);
  CHECK(t.center == doctest::Approx(2.0));
  CHECK(t.radius == doctest::Approx(1.5));
}

TEST_CASE("non-normal 2x2 with distinct eigenvalues classifies as a 4d ellipsoid") {
  // Eigenvalues 1 and 3; squared Frobenius norm 11, so the minor semi-axis is
  // sqrt(11 - 10)/2 = 1/2 and the focal half-distance is 1.
  const QMatrix A = QMatrix::from_real(2, {1.0, 1.0, 0.0, 3.0});
  const ShapeClass s = classify_2x2_real(A);
  CHECK(s.tag == ShapeTag::Ellipsoid4D);
  CHECK(s.center == doctest::Approx(2.0));
  CHECK(s.semi_axis_im == doctest::Approx(0.5));
  CHECK(s.semi_axis_re == doctest::Approx(std::sqrt(1.25)));

  // Conjugate-pair eigenvalues put the focal axis along the imaginary
  // direction instead.
  const QMatrix B = QMatrix::from_real(2, {0.0, -2.0, 1.0, 0.0});
  const ShapeClass t = classify_2x2_real(B);
  CHECK(t.tag == ShapeTag::Ellipsoid4D);
  CHECK(t.center == doctest::Approx(0.0));
  CHECK(t.semi_axis_im > t.semi_axis_re);
}

TEST_CASE("classify_2x2_real rejects wrong field or dimension") {
  CHECK_THROWS(classify_2x2_real(QMatrix::from_complex(2, {C{0, 1}, {}, {}, C{0, 2}})));
  CHECK_THROWS(classify_2x2_real(QMatrix::identity(3)));
}

TEST_CASE("complex sections of closed-form shapes match a direct sweep") {
  GaussianStream g(2024);
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<double> e(4);
    for (double& v : e) v = g.next();
    const QMatrix A = QMatrix::from_real(2, e);
    const ShapeClass s = classify(A);
    REQUIRE(s.tag != ShapeTag::Unclassified);
    const ConvexRegion swept = boundary(A, 720).region;
    CHECK(hausdorff(s.complex_section(720), swept) < 1e-4);
  }
}

TEST_CASE("ellipsoid section has the closed-form support values") {
  const QMatrix A = QMatrix::from_real(2, {1.0, 1.0, 0.0, 3.0});
  const ConvexRegion sec = classify_2x2_real(A).complex_section(720);
  CHECK(sec.support(0.0) ==
        doctest::Approx(2.0 + std::sqrt(1.25)).epsilon(1e-6));
  CHECK(sec.support(std::numbers::pi) ==
        doctest::Approx(-(2.0 - std::sqrt(1.25))).epsilon(1e-6));
  CHECK(sec.support(std::numbers::pi / 2) == doctest::Approx(0.5).epsilon(1e-5));
}

TEST_CASE("structured 3x3 with real entries is the full quaternionic disk") {
  const QMatrix A = QMatrix::from_real(3, {2, 0, 3, 0, 2, 4, 0, 0, 2});
  const ShapeClass s = disk_3x3(A);
  CHECK(s.tag == ShapeTag::QuaternionDisk);
  CHECK(s.center == doctest::Approx(2.0));
  CHECK(s.radius == doctest::Approx(2.5));

  // The sweep agrees with the closed form.
  const ConvexRegion swept = boundary(A, 720).region;
  CHECK(hausdorff(s.complex_section(720), swept) < 1e-4);

  // classify() dispatches to the same result.
  const ShapeClass via = classify(A);
  CHECK(via.tag == ShapeTag::QuaternionDisk);
  CHECK(via.radius == doctest::Approx(2.5));
}

TEST_CASE("structured 3x3 with complex entries keeps only the planar disk") {
  const QMatrix A = QMatrix::from_complex(
      3, {C{0, 0}, C{0, 1}, C{0, 0}, {}, {}, C{2, 0}, {}, {}, {}});
  const ShapeClass s = disk_3x3(A);
  CHECK(s.tag == ShapeTag::Ellipse);
  // Radius sqrt(1 + 4)/2 of a disk centered at the origin.
  const double r = std::sqrt(5.0) / 2.0;
  for (int t = 0; t < 8; ++t) {
    const double theta = 2.0 * std::numbers::pi * t / 8.0;
    CHECK(s.region.support(theta) == doctest::Approx(r).epsilon(1e-4));
  }
  // Centered on the real axis, so the mirror-union test certifies convexity.
  CHECK(s.certificate == Certificate::Certified);
  CHECK(hausdorff(s.complex_section(720), s.region) == 0.0);
}

TEST_CASE("disk_3x3 rejects structure violations") {
  // All three strict upper entries nonzero: the product does not vanish.
  CHECK_THROWS(disk_3x3(QMatrix::from_real(3, {0, 1, 1, 0, 0, 1, 0, 0, 0})));
  // Non-constant diagonal.
  CHECK_THROWS(disk_3x3(QMatrix::from_real(3, {1, 0, 3, 0, 2, 4, 0, 0, 1})));
  // Entry below the diagonal.
  CHECK_THROWS(disk_3x3(QMatrix::from_real(3, {2, 0, 3, 0, 2, 4, 1, 0, 2})));
  // Complex diagonal.
  CHECK_THROWS(disk_3x3(QMatrix::from_complex(
      3, {C{0, 1}, C{1, 0}, {}, {}, C{0, 1}, {}, {}, {}, C{0, 1}})));
  // Wrong dimension.
  CHECK_THROWS(disk_3x3(QMatrix::from_real(2, {0, 1, 0, 0})));
}

TEST_CASE("two-block matrices earn a convexity certificate") {
  // [[a1 I, X], [k X^t, a2 I]] with a1=1, a2=2, k=3, X=[[1,2],[0,1]].
  const QMatrix B = QMatrix::from_real(
      4, {1, 0, 1, 2, 0, 1, 0, 1, 3, 0, 2, 0, 6, 3, 0, 2});
  CHECK(certify_block(B, 720, 1e-9) == Certificate::Certified);

  const ShapeClass s = classify(B);
  CHECK(s.tag == ShapeTag::Ellipse);
  CHECK(s.certificate == Certificate::Certified);
  CHECK(s.region.kind() == RegionKind::Polygon);
  CHECK(hausdorff(s.complex_section(720), s.region) == 0.0);
  // Real matrix, so the swept range is symmetric across the real axis.
  CHECK(hausdorff(s.region, s.region.conjugate()) < 1e-9);
}

TEST_CASE("certify_block rejects matrices without the two-block shape") {
  // Upper-right block zero but lower-left nonzero: no scalar k works.
  CHECK_THROWS(certify_block(QMatrix::from_real(2, {1, 0, 5, 2}), 720, 1e-9));
  // Quaternionic entries are out of scope for the probe.
  CHECK_THROWS(certify_block(
      QMatrix::diagonal(std::vector<Quaternion>{Quaternion::j(), Quaternion::j()}),
      720, 1e-9));
}

TEST_CASE("classify falls back to unclassified and its section throws") {
  const QMatrix A =
      QMatrix::from_real(3, {1, 2, 3, 4, 5, 6, 7, 8, 10});
  const ShapeClass s = classify(A);
  CHECK(s.tag == ShapeTag::Unclassified);
  CHECK_THROWS_AS(s.complex_section(720), std::logic_error);
}

TEST_CASE("shape tags have stable names") {
  CHECK(to_string(ShapeTag::Segment) == "segment");
  CHECK(to_string(ShapeTag::PureDisk) == "pure_disk");
  CHECK(to_string(ShapeTag::QuaternionDisk) == "quaternion_disk");
  CHECK(to_string(ShapeTag::Ellipsoid4D) == "ellipsoid4d");
  CHECK(to_string(ShapeTag::Ellipse) == "ellipse");
  CHECK(to_string(ShapeTag::Unclassified) == "unclassified");
}
