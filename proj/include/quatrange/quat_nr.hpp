#pragma once

#include <cstdint>

#include "quatrange/complex_nr.hpp"
#include "quatrange/qmatrix.hpp"
#include "quatrange/quaternion.hpp"

namespace quatrange {

/// Monte-Carlo image of the quaternionic numerical range: values x* A x at
/// uniform unit vectors x in H^n.
struct SampleCloud {
  std::vector<Quaternion> points;
  int n = 0;
  std::int64_t count = 0;
  std::uint64_t seed = 0;
};

/// Draws `count` quadratic-form values deterministically from `seed`.  Draws
/// are generated in fixed chunks of 4096 whose streams are seeded
/// seed + chunk_index, so the result is independent of worker count.
SampleCloud sample(const QMatrix& A, std::int64_t count, std::uint64_t seed);

/// The unit vector behind draw `index` of a cloud with the given seed;
/// replays the chunk rule used by sample().
std::vector<Quaternion> cloud_draw(int n, std::int64_t index, std::uint64_t seed);

/// Bild of a real matrix: W_H(A) meets the complex plane in W_C(A), so the
/// sweep of W_C(A) is returned.  Rejects non-real matrices.
NRApprox bild_real(const QMatrix& A, int angles);

/// Membership of the similarity class of q in W_H(A) for real A, decided by
/// testing the canonical representative against the bild.
bool member_real(const QMatrix& A, const Quaternion& q, int angles, double tol);

/// Canonical representatives (upper half-plane) of all cloud points.
std::vector<std::complex<double>> upper_bild_points(const SampleCloud& cloud);

}  // namespace quatrange
