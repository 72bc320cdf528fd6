#include "quatrange/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "quatrange/complex_nr.hpp"
#include "quatrange/quat_nr.hpp"

namespace quatrange {

namespace {

using C = std::complex<double>;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string describe(const QMatrix& A) {
  std::ostringstream os;
  os << to_string(A.field()) << " " << A.dim() << "x" << A.dim();
  return os.str();
}

// Complex unit vector of the given dimension, lifted into H^dim.
std::vector<Quaternion> draw_complex_unit(GaussianStream& stream, int dim) {
  std::vector<Quaternion> x(static_cast<std::size_t>(dim));
  double norm_sq = 0.0;
  do {
    norm_sq = 0.0;
    for (auto& q : x) {
      q = Quaternion{stream.next(), stream.next(), 0.0, 0.0};
      norm_sq += q.norm_sq();
    }
  } while (norm_sq < 1e-280);
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (auto& q : x) q = q * inv;
  return x;
}

std::vector<Quaternion> lift(const std::vector<C>& v) {
  std::vector<Quaternion> x;
  x.reserve(v.size());
  for (const C& z : v) x.emplace_back(z);
  return x;
}

// Top eigenvector of the Hermitian part of A at angle theta; the quadratic
// form of A at that vector realizes the support of W_C(A) in direction theta.
std::vector<Quaternion> support_witness(const QMatrix& A, double theta) {
  const HermitianEigen eig = hermitian_eigs(hermitian_part(A, theta));
  return lift(eig.vectors.back());
}

// v* A v in plain complex arithmetic, for cross-checking the quaternionic
// evaluation path.
C rayleigh_complex(const QMatrix& A, const std::vector<Quaternion>& v) {
  const int n = A.dim();
  C acc{0.0, 0.0};
  for (int r = 0; r < n; ++r) {
    C row{0.0, 0.0};
    for (int c = 0; c < n; ++c)
      row += A.complex_at(r, c) * project_complex(v[static_cast<std::size_t>(c)]);
    acc += std::conj(project_complex(v[static_cast<std::size_t>(r)])) * row;
  }
  return acc;
}

double ratio(double excess, double budget) { return excess / budget; }

// Deterministic projected ascent of |x* A x| on the unit sphere of H^n,
// starting from x0, using central finite differences.  Used only to polish
// the best random draw when an attainment check lands near its threshold.
std::vector<Quaternion> polish_max_abs(const QMatrix& A, std::vector<Quaternion> x,
                                       int iterations) {
  const int n = A.dim();
  auto renorm = [&](std::vector<Quaternion>& v) {
    double s = 0.0;
    for (const auto& q : v) s += q.norm_sq();
    const double inv = 1.0 / std::sqrt(s);
    for (auto& q : v) q = q * inv;
  };
  auto value = [&](const std::vector<Quaternion>& v) {
    return quadratic_form(A, v).norm();
  };
  renorm(x);
  double f = value(x);
  double step = 0.05;
  const double h = 1e-6;
  for (int it = 0; it < iterations && step > 1e-12; ++it) {
    std::vector<double> grad(static_cast<std::size_t>(4 * n));
    for (int m = 0; m < n; ++m) {
      double* comps[4];
      std::vector<Quaternion> probe = x;
      comps[0] = &probe[static_cast<std::size_t>(m)].a0;
      comps[1] = &probe[static_cast<std::size_t>(m)].a1;
      comps[2] = &probe[static_cast<std::size_t>(m)].a2;
      comps[3] = &probe[static_cast<std::size_t>(m)].a3;
      for (int c = 0; c < 4; ++c) {
        const double keep = *comps[c];
        *comps[c] = keep + h;
        std::vector<Quaternion> up = probe;
        renorm(up);
        const double fu = value(up);
        *comps[c] = keep - h;
        std::vector<Quaternion> dn = probe;
        renorm(dn);
        const double fd = value(dn);
        *comps[c] = keep;
        grad[static_cast<std::size_t>(4 * m + c)] = (fu - fd) / (2.0 * h);
      }
    }
    double gnorm = 0.0;
    for (double g : grad) gnorm += g * g;
    gnorm = std::sqrt(gnorm);
    if (gnorm < 1e-14) break;
    bool advanced = false;
    while (step > 1e-12) {
      std::vector<Quaternion> trial = x;
      for (int m = 0; m < n; ++m) {
        trial[static_cast<std::size_t>(m)].a0 += step * grad[static_cast<std::size_t>(4 * m)] / gnorm;
        trial[static_cast<std::size_t>(m)].a1 += step * grad[static_cast<std::size_t>(4 * m + 1)] / gnorm;
        trial[static_cast<std::size_t>(m)].a2 += step * grad[static_cast<std::size_t>(4 * m + 2)] / gnorm;
        trial[static_cast<std::size_t>(m)].a3 += step * grad[static_cast<std::size_t>(4 * m + 3)] / gnorm;
      }
      renorm(trial);
      const double ft = value(trial);
      if (ft > f) {
        x = std::move(trial);
        f = ft;
        advanced = true;
        break;
      }
      step *= 0.5;
    }
    if (!advanced) break;
  }
  return x;
}

}  // namespace

OracleReport check_prop_chi(const QMatrix& A, int angles, std::int64_t count,
                            std::uint64_t seed, double tol) {
  const auto t0 = Clock::now();
  OracleReport rep;
  rep.claim = "prop_chi";
  rep.matrix = describe(A);
  rep.samples = count;
  rep.seed = seed;

  const QMatrix X = chi(A);
  const NRApprox nr = nr_of_chi(A, angles);
  const int dim = X.dim();
  double worst = 0.0;

  GaussianStream stream(seed);
  for (std::int64_t d = 0; d < count; ++d) {
    const Quaternion w = quadratic_form(X, draw_complex_unit(stream, dim));
    worst = std::max(worst,
                     ratio(nr.region.distance(project_complex(w)) - nr.max_support_error, tol));
  }

  // Region support values must match true support values, realized by direct
  // evaluation at the maximizing vectors of chi(A)'s Hermitian parts, both
  // from below (region inscribed) and from above (region not too small).
  for (int t = 0; t < 360; ++t) {
    const double theta = 2.0 * std::numbers::pi * t / 360.0;
    const Quaternion w = quadratic_form(X, support_witness(X, theta));
    const C z = project_complex(w);
    worst = std::max(worst, ratio(nr.region.distance(z) - nr.max_support_error, tol));
    const double sampled = z.real() * std::cos(theta) + z.imag() * std::sin(theta);
    worst = std::max(worst,
                     ratio(std::abs(nr.region.support(theta) - sampled) -
                               nr.max_support_error,
                           tol));
  }

  rep.max_violation = std::max(worst, 0.0);
  rep.pass = rep.max_violation <= 1.0;
  rep.runtime_seconds = seconds_since(t0);
  return rep;
}

OracleReport check_real_bild(const QMatrix& A, int angles, std::int64_t count,
                             std::uint64_t seed, double tol) {
  const auto t0 = Clock::now();
  OracleReport rep;
  rep.claim = "real_bild";
  rep.matrix = describe(A);
  rep.samples = count;
  rep.seed = seed;

  const NRApprox nr = boundary(A, angles);
  const SampleCloud cloud = sample(A, count, seed);
  const std::vector<C> reps = upper_bild_points(cloud);

  // The swept region is an inscribed polygon, so genuine members of the
  // exact set may fall outside it by up to max_support_error; only the
  // excess beyond that is a violation.
  double worst = 0.0;
  for (const C& z : reps)
    worst = std::max(worst, ratio(nr.region.distance(z) - nr.max_support_error, tol));

  // Attainment: 72 boundary targets computed in plain complex arithmetic at
  // the sweep's maximizing vectors.  Each must be approached by a genuine
  // member of W_H(A): a cloud value or the quaternionic evaluation at that
  // same vector (an independent code path from the complex target).
  constexpr double kCoverage = 1e-2;
  for (int s = 0; s < 72; ++s) {
    const double theta = 2.0 * std::numbers::pi * s / 72.0;
    const std::vector<Quaternion> wit = support_witness(A, theta);
    const C target = canonical_rep(rayleigh_complex(A, wit));
    double best = std::abs(canonical_rep(quadratic_form(A, wit)) - target);
    for (const C& z : reps) best = std::min(best, std::abs(z - target));
    worst = std::max(worst, ratio(best, kCoverage));
  }

  rep.max_violation = std::max(worst, 0.0);
  rep.pass = rep.max_violation <= 1.0;
  rep.runtime_seconds = seconds_since(t0);
  return rep;
}

OracleReport check_remark_disk(std::int64_t count, std::uint64_t seed) {
  const auto t0 = Clock::now();
  OracleReport rep;
  rep.claim = "remark_disk";
  rep.matrix = "diag(i, 2i)";
  rep.samples = count;
  rep.seed = seed;

  const QMatrix A = QMatrix::diagonal({Quaternion::i(), 2.0 * Quaternion::i()});
  const SampleCloud cloud = sample(A, count, seed);

  double worst = 0.0;
  double max_norm = 0.0;
  std::size_t best_idx = 0;
  for (std::size_t d = 0; d < cloud.points.size(); ++d) {
    const Quaternion& w = cloud.points[d];
    worst = std::max(worst, ratio(std::abs(w.real()), 1e-9));
    const double nw = w.norm();
    worst = std::max(worst, ratio(nw - 2.0, 1e-9));
    if (nw > max_norm) {
      max_norm = nw;
      best_idx = d;
    }
  }

  // Attainment of the outer radius.  Raw uniform draws rarely reach it, so
  // polish the best draw by deterministic ascent before judging.
  constexpr double kTarget = 2.0 - 1e-3;
  if (max_norm < kTarget) {
    const std::vector<Quaternion> best_x =
        cloud_draw(A.dim(), static_cast<std::int64_t>(best_idx), cloud.seed);
    const std::vector<Quaternion> polished = polish_max_abs(A, best_x, 200);
    max_norm = std::max(max_norm, quadratic_form(A, polished).norm());
  }
  worst = std::max(worst, ratio(kTarget - max_norm, 1e-3));

  // Hand witnesses from the membership construction.
  const Quaternion w1 = quadratic_form(A, {Quaternion{0.0}, Quaternion{1.0}});
  worst = std::max(worst, ratio((w1 - Quaternion{0, 2, 0, 0}).norm(), 1e-12));
  const Quaternion w2 = quadratic_form(
      A, {Quaternion{std::sqrt(2.0 / 3.0)},
          Quaternion{0.0, 0.0, std::sqrt(1.0 / 3.0), 0.0}});
  worst = std::max(worst, ratio(w2.norm(), 1e-12));

  if (certify_convexity(A, 720, 1e-7) != Certificate::NotCertified) worst = std::max(worst, 2.0);

  rep.max_violation = std::max(worst, 0.0);
  rep.pass = rep.max_violation <= 1.0;
  rep.runtime_seconds = seconds_since(t0);
  return rep;
}

OracleReport check_certificate_soundness(const std::vector<QMatrix>& batch,
                                         int angles, std::int64_t count,
                                         std::uint64_t seed, double tol) {
  const auto t0 = Clock::now();
  OracleReport rep;
  rep.claim = "certificate_soundness";
  rep.seed = seed;

  double worst = 0.0;
  int certified = 0;
  constexpr double kCoverage = 5e-2;
  for (std::size_t idx = 0; idx < batch.size(); ++idx) {
    const QMatrix& A = batch[idx];
    if (certify_convexity(A, angles, tol) != Certificate::Certified) continue;
    ++certified;
    const NRApprox nr = nr_of_chi(A, angles);
    const SampleCloud cloud = sample(A, count, seed + static_cast<std::uint64_t>(idx));
    rep.samples += count;

    std::vector<C> reps;
    reps.reserve(cloud.points.size());
    for (const Quaternion& w : cloud.points) {
      reps.push_back(canonical_rep(w));
      worst = std::max(worst,
                       ratio(nr.region.distance(reps.back()) - nr.max_support_error, tol));
      worst = std::max(worst,
                       ratio(nr.region.distance(project_complex(w)) - nr.max_support_error, tol));
    }

    // The certified region must not overstate the set: in every direction its
    // support must be realized by an actual quadratic-form value.  Sweep
    // witnesses of A at the full grid, folded to canonical representatives,
    // realize the contacts of both the base range and its mirror image, so
    // the deficit stays at rounding level for an honest region.
    std::vector<C> witness_reps = reps;
    witness_reps.reserve(witness_reps.size() + static_cast<std::size_t>(angles));
    for (int s = 0; s < angles; ++s) {
      const double theta = 2.0 * std::numbers::pi * s / angles;
      witness_reps.push_back(canonical_rep(quadratic_form(A, support_witness(A, theta))));
    }
    for (int s = 0; s < angles; ++s) {
      const double theta = 2.0 * std::numbers::pi * s / angles;
      const C dir = std::polar(1.0, theta);
      double reach = -std::numeric_limits<double>::infinity();
      for (const C& z : witness_reps) {
        reach = std::max(reach, z.real() * dir.real() + z.imag() * dir.imag());
        // Conjugate classes share a representative, so the mirrored value
        // supports the mirrored half of the region.
        reach = std::max(reach, z.real() * dir.real() - z.imag() * dir.imag());
      }
      worst = std::max(worst, ratio(nr.region.support(theta) - reach, kCoverage));
    }
  }

  std::ostringstream os;
  os << "batch of " << batch.size() << " (" << certified << " certified)";
  rep.matrix = os.str();
  rep.max_violation = std::max(worst, 0.0);
  rep.pass = rep.max_violation <= 1.0;
  rep.runtime_seconds = seconds_since(t0);
  return rep;
}

QMatrix random_real_matrix(int n, GaussianStream& stream) {
  std::vector<double> e(static_cast<std::size_t>(n) * n);
  for (auto& v : e) v = stream.next();
  return QMatrix::from_real(n, e);
}

QMatrix random_complex_matrix(int n, GaussianStream& stream) {
  std::vector<C> e(static_cast<std::size_t>(n) * n);
  for (auto& v : e) v = C{stream.next(), stream.next()};
  return QMatrix::from_complex(n, e);
}

QMatrix random_hermitian_matrix(int n, GaussianStream& stream) {
  std::vector<C> e(static_cast<std::size_t>(n) * n, C{0.0, 0.0});
  for (int r = 0; r < n; ++r) {
    e[static_cast<std::size_t>(r) * n + r] = stream.next();
    for (int c = r + 1; c < n; ++c) {
      const C z{stream.next(), stream.next()};
      e[static_cast<std::size_t>(r) * n + c] = z;
      e[static_cast<std::size_t>(c) * n + r] = std::conj(z);
    }
  }
  return QMatrix::from_complex(n, e);
}

}  // namespace quatrange
