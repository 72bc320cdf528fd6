#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace quatrange {

/// Element of the real quaternion algebra H with basis {1, i, j, k},
/// i^2 = j^2 = k^2 = ijk = -1.
struct Quaternion {
  double a0 = 0.0;  ///< coefficient of 1
  double a1 = 0.0;  ///< coefficient of i
  double a2 = 0.0;  ///< coefficient of j
  double a3 = 0.0;  ///< coefficient of k

  constexpr Quaternion() = default;
  constexpr Quaternion(double r) : a0(r) {}  // NOLINT: real embedding is intentional
  constexpr Quaternion(double w, double x, double y, double z)
      : a0(w), a1(x), a2(y), a3(z) {}
  Quaternion(std::complex<double> z) : a0(z.real()), a1(z.imag()) {}  // NOLINT

  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  double real() const { return a0; }
  Quaternion imag() const { return {0.0, a1, a2, a3}; }
  double imag_norm() const { return std::sqrt(a1 * a1 + a2 * a2 + a3 * a3); }
  Quaternion conj() const { return {a0, -a1, -a2, -a3}; }
  double norm_sq() const { return a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3; }
  double norm() const { return std::sqrt(norm_sq()); }
  bool is_zero() const { return a0 == 0.0 && a1 == 0.0 && a2 == 0.0 && a3 == 0.0; }
  /// True when the j and k coefficients vanish exactly.
  bool is_complex() const { return a2 == 0.0 && a3 == 0.0; }
  /// True when all imaginary coefficients vanish exactly.
  bool is_real() const { return a1 == 0.0 && a2 == 0.0 && a3 == 0.0; }

  Quaternion& operator+=(const Quaternion& o) {
    a0 += o.a0; a1 += o.a1; a2 += o.a2; a3 += o.a3;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    a0 -= o.a0; a1 -= o.a1; a2 -= o.a2; a3 -= o.a3;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion p, const Quaternion& q) {
  return {p.a0 + q.a0, p.a1 + q.a1, p.a2 + q.a2, p.a3 + q.a3};
}
constexpr Quaternion operator-(Quaternion p, const Quaternion& q) {
  return {p.a0 - q.a0, p.a1 - q.a1, p.a2 - q.a2, p.a3 - q.a3};
}
constexpr Quaternion operator-(const Quaternion& q) {
  return {-q.a0, -q.a1, -q.a2, -q.a3};
}

/// Hamilton product.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.a0 * b.a0 - a.a1 * b.a1 - a.a2 * b.a2 - a.a3 * b.a3,
          a.a0 * b.a1 + a.a1 * b.a0 + a.a2 * b.a3 - a.a3 * b.a2,
          a.a0 * b.a2 - a.a1 * b.a3 + a.a2 * b.a0 + a.a3 * b.a1,
          a.a0 * b.a3 + a.a1 * b.a2 - a.a2 * b.a1 + a.a3 * b.a0};
}
constexpr Quaternion operator*(double s, const Quaternion& q) {
  return {s * q.a0, s * q.a1, s * q.a2, s * q.a3};
}
constexpr Quaternion operator*(const Quaternion& q, double s) { return s * q; }
constexpr Quaternion operator/(const Quaternion& q, double s) {
  return {q.a0 / s, q.a1 / s, q.a2 / s, q.a3 / s};
}

inline double abs(const Quaternion& q) { return q.norm(); }
inline Quaternion conj(const Quaternion& q) { return q.conj(); }

/// Two quaternions are similar (q = s* p s for some unit s) exactly when they
/// share real part and imaginary-part norm; compared within tol.
bool similar(const Quaternion& p, const Quaternion& q, double tol = 1e-9);

/// Representative Re(q) + |Im(q)| i of the similarity class of q, in the
/// closed upper half-plane.
std::complex<double> canonical_rep(const Quaternion& q);

/// Orthogonal projection onto the real axis.
inline double project_real(const Quaternion& q) { return q.a0; }

/// Orthogonal projection onto the complex plane spanned by {1, i}.
inline std::complex<double> project_complex(const Quaternion& q) {
  return {q.a0, q.a1};
}

/// Parse failure for quaternion literals; offset is the byte position in the
/// input where scanning stopped.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Parse "a0+a1i+a2j+a3k" with optional terms, signs, and decimal literals
/// (exponents allowed). Repeated units accumulate. Throws ParseError.
Quaternion parse_quaternion(std::string_view text);

/// Shortest round-trip decimal form; zero terms omitted, "0" for zero.
/// parse_quaternion(to_string(q)) == q exactly.
std::string to_string(const Quaternion& q);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

/// Deterministic standard-normal stream: Box-Muller over the top 53 bits of
/// mt19937_64 output, so results are identical across platforms for a seed.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : gen_(seed) {}

  /// Uniform draw in [0, 1).
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal draw.
  double next();

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// One uniform draw from the unit sphere of H^n (4n-dimensional Gaussian,
/// normalized), consuming from the given stream.
std::vector<Quaternion> draw_unit_vector(GaussianStream& stream, int n);

/// Uniform unit vector in H^n, deterministic per seed.
std::vector<Quaternion> sample_unit_sphere(int n, std::uint64_t seed);

}  // namespace quatrange
