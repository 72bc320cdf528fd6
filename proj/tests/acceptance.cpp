// Acceptance harness: runs the seven headline checks end to end, printing one
// PASS/FAIL line per check with its runtime.  Exit code is the number of
// failed checks, so a zero exit means full acceptance.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "quatrange/complex_nr.hpp"
#include "quatrange/convex_region.hpp"
#include "quatrange/oracle.hpp"
#include "quatrange/qmatrix.hpp"
#include "quatrange/quat_nr.hpp"
#include "quatrange/quaternion.hpp"
#include "quatrange/shapes.hpp"
#include "support/linalg_util.hpp"

namespace {

using namespace quatrange;
using C = std::complex<double>;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Criterion {
  const char* name;
  double time_limit_seconds;
  bool (*body)(std::string& detail);
};

// 1. The worked non-convex example: samples of diag(i, 2i) stay in the pure
// ball of radius 2, the extreme value 2 is attained, the two hand witnesses
// evaluate exactly, and the convexity certificate correctly stays silent.
bool run_nonconvex_example(std::string& detail) {
  const OracleReport rep = check_remark_disk(100000, 42);
  char buf[128];
  std::snprintf(buf, sizeof(buf), "max_violation=%.3g", rep.max_violation);
  detail = buf;
  return rep.pass;
}

// 2. Mirror-hull identity: a direct sweep of the doubled matrix chi(A) agrees
// with the hull of the sweep of A and its mirror image.
bool run_mirror_hull_identity(std::string& detail) {
  GaussianStream stream(2026);
  double worst_ratio = 0.0;
  for (int k = 0; k < 50; ++k) {
    const int n = 2 + k % 3;
    const QMatrix A = random_complex_matrix(n, stream);
    const NRApprox direct = boundary(chi(A), 720);
    const NRApprox built = nr_of_chi(A, 720);
    const double budget = 1e-5 * (1.0 + built.region.diameter());
    const double dist = hausdorff(direct.region, built.region);
    worst_ratio = std::max(worst_ratio, dist / budget);
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf), "worst distance at %.3g of budget", worst_ratio);
  detail = buf;
  return worst_ratio <= 1.0;
}

// 3. Planar section for real matrices: canonical representatives of sampled
// quaternionic values land in the swept complex range, and the sweep's
// boundary directions are all realized by direct evaluation.
bool run_real_planar_section(std::string& detail) {
  int failures = 0;
  GaussianStream stream(1313);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const int n = 2 + k % 4;
    const QMatrix A = random_real_matrix(n, stream);
    const OracleReport rep =
        check_real_bild(A, 720, 10000, 9000 + static_cast<std::uint64_t>(k), 1e-6);
    if (!rep.pass) ++failures;
    worst = std::max(worst, rep.max_violation);
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%d of 50 matrices failed, worst ratio %.3g",
                failures, worst);
  detail = buf;
  return failures == 0;
}

// 4. Closed-form 2x2 classification: sections match sweeps on random
// matrices, and the three textbook cases come out exactly.
bool run_2x2_classification(std::string& detail) {
  GaussianStream stream(404);
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const QMatrix A = random_real_matrix(2, stream);
    const ShapeClass shape = classify(A);
    const double dist =
        hausdorff(shape.complex_section(720), boundary(A, 720).region);
    worst = std::max(worst, dist);
  }
  if (worst > 1e-4) {
    detail = "section vs sweep Hausdorff " + std::to_string(worst);
    return false;
  }

  const ShapeClass seg = classify(QMatrix::from_real(2, {1, 0, 0, 3}));
  if (seg.tag != ShapeTag::Segment || std::abs(seg.endpoint_a - C{1, 0}) > 1e-9 ||
      std::abs(seg.endpoint_b - C{3, 0}) > 1e-9) {
    detail = "diagonal golden case failed";
    return false;
  }
  const ShapeClass disk = classify(QMatrix::from_real(2, {0, -1, 1, 0}));
  if (disk.tag != ShapeTag::PureDisk || std::abs(disk.center) > 1e-9 ||
      std::abs(disk.radius - 1.0) > 1e-9) {
    detail = "rotation golden case failed";
    return false;
  }
  const ShapeClass ball = classify(QMatrix::from_real(2, {0, 1, 0, 0}));
  if (ball.tag != ShapeTag::QuaternionDisk || std::abs(ball.center) > 1e-9 ||
      std::abs(ball.radius - 0.5) > 1e-9) {
    detail = "nilpotent golden case failed";
    return false;
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf), "worst section distance %.3g, goldens exact", worst);
  detail = buf;
  return true;
}

// 5. Structured 3x3 disk: the closed form gives the ball of radius 2.5 at
// center 2, the sweep vertices sit on that circle, and sampled values stay
// inside the ball.
bool run_3x3_disk(std::string& detail) {
  const QMatrix A = QMatrix::from_real(3, {2, 0, 3, 0, 2, 4, 0, 0, 2});
  const ShapeClass shape = classify(A);
  if (shape.tag != ShapeTag::QuaternionDisk || std::abs(shape.center - 2.0) > 1e-12 ||
      std::abs(shape.radius - 2.5) > 1e-12) {
    detail = "closed form disagreed";
    return false;
  }
  const NRApprox nr = boundary(A, 720);
  double worst_vertex = 0.0;
  for (const C& v : nr.region.vertices())
    worst_vertex = std::max(worst_vertex, std::abs(std::abs(v - C{2, 0}) - 2.5));
  if (worst_vertex > 1e-5) {
    detail = "sweep vertex off the circle by " + std::to_string(worst_vertex);
    return false;
  }
  const SampleCloud cloud = sample(A, 100000, 4242);
  double worst_sample = -std::numeric_limits<double>::infinity();
  for (const Quaternion& w : cloud.points)
    worst_sample = std::max(worst_sample, (w - Quaternion{2.0}).norm() - 2.5);
  if (worst_sample > 1e-6) {
    detail = "sample outside the ball by " + std::to_string(worst_sample);
    return false;
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf),
                "vertices on circle to %.3g, samples inside to %.3g",
                worst_vertex, worst_sample);
  detail = buf;
  return true;
}

// 6. Transpose invariance of the complex range.
bool run_transpose_invariance(std::string& detail) {
  GaussianStream stream(777);
  int failures = 0;
  for (int k = 0; k < 50; ++k) {
    const int n = 2 + k % 4;
    const QMatrix A = random_complex_matrix(n, stream);
    if (!transpose_invariance_check(A, 720, 1e-5)) ++failures;
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%d of 50 matrices failed", failures);
  detail = buf;
  return failures == 0;
}

// 7. Eigensolver validity: residuals against an independent determinant and
// residual computation, plus trace and determinant identities.
bool run_eigensolver_checks(std::string& detail) {
  GaussianStream stream(555);
  double worst_resid = 0.0, worst_trace = 0.0, worst_det = 0.0;
  for (int k = 0; k < 500; ++k) {
    const int n = 2 + k % 7;
    const QMatrix H = random_hermitian_matrix(n, stream);
    const double scale = std::max(1.0, H.frobenius_norm());
    std::vector<C> h(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) h[static_cast<std::size_t>(r) * n + c] = H.complex_at(r, c);

    const HermitianEigen eig = hermitian_eigs(H);
    double sum = 0.0;
    C prod{1.0, 0.0};
    for (int m = 0; m < n; ++m) {
      const double resid = testsupport::eigen_residual(h, n, eig.vectors[m], eig.values[m]);
      worst_resid = std::max(worst_resid, resid / (1e-10 * scale));
      sum += eig.values[m];
      prod *= eig.values[m];
    }
    const double tr_err = std::abs(sum - H.trace().a0);
    worst_trace = std::max(worst_trace, tr_err / (1e-8 * scale));
    const C det = testsupport::lu_determinant(h, n);
    const double det_err = std::abs(prod - det);
    worst_det = std::max(worst_det, det_err / (1e-8 * std::max(1.0, std::abs(det))));
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "worst ratios: residual %.3g, trace %.3g, determinant %.3g",
                worst_resid, worst_trace, worst_det);
  detail = buf;
  return worst_resid <= 1.0 && worst_trace <= 1.0 && worst_det <= 1.0;
}

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"non-convex example reproduced end to end", 10.0, run_nonconvex_example},
      {"mirror-hull identity for the doubled matrix", 60.0, run_mirror_hull_identity},
      {"planar section of the quaternionic range (real matrices)", 120.0,
       run_real_planar_section},
      {"closed-form 2x2 classification matches sweeps", 30.0, run_2x2_classification},
      {"structured 3x3 quaternionic disk", 10.0, run_3x3_disk},
      {"transpose invariance of the complex range", 30.0, run_transpose_invariance},
      {"eigensolver residuals and invariants", 10.0, run_eigensolver_checks},
  };

  int failures = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    std::string detail;
    const auto t0 = Clock::now();
    bool ok = false;
    try {
      ok = c.body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
      ok = false;
    }
    const double elapsed = seconds_since(t0);
    if (elapsed > c.time_limit_seconds) {
      ok = false;
      detail += detail.empty() ? "" : "; ";
      detail += "exceeded time limit of " +
                std::to_string(static_cast<int>(c.time_limit_seconds)) + "s";
    }
    if (!ok) ++failures;
    std::printf("%s  %d. %s (%.1fs%s%s)\n", ok ? "PASS" : "FAIL", index, c.name,
                elapsed, detail.empty() ? "" : "; ", detail.c_str());
  }
  if (failures == 0)
    std::printf("all %d acceptance checks passed\n",
                static_cast<int>(sizeof(criteria) / sizeof(criteria[0])));
  else
    std::printf("%d acceptance check(s) failed\n", failures);
  return failures;
}
