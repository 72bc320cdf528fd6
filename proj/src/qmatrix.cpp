#include "quatrange/qmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace quatrange {

namespace {

Field detect_field(const std::vector<Quaternion>& entries) {
  bool complex_seen = false;
  for (const auto& q : entries) {
    if (q.a2 != 0.0 || q.a3 != 0.0) return Field::Quaternionic;
    if (q.a1 != 0.0) complex_seen = true;
  }
  return complex_seen ? Field::Complex : Field::Real;
}

}  // namespace

std::string to_string(Field f) {
  switch (f) {
    case Field::Real: return "real";
    case Field::Complex: return "complex";
    case Field::Quaternionic: return "quaternionic";
  }
  return "?";
}

QMatrix::QMatrix(int n, std::vector<Quaternion> entries)
    : n_(n), e_(std::move(entries)), field_(detect_field(e_)) {}

QMatrix QMatrix::from_entries(int n, std::vector<Quaternion> entries) {
  if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
  if (entries.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("matrix entry count does not match dimension");
  return QMatrix(n, std::move(entries));
}

QMatrix QMatrix::from_complex(int n, const std::vector<std::complex<double>>& entries) {
  std::vector<Quaternion> qs(entries.begin(), entries.end());
  return from_entries(n, std::move(qs));
}

QMatrix QMatrix::from_real(int n, const std::vector<double>& entries) {
  std::vector<Quaternion> qs(entries.begin(), entries.end());
  return from_entries(n, std::move(qs));
}

QMatrix QMatrix::identity(int n) {
  QMatrix z = zero(n);
  for (int r = 0; r < n; ++r) z.e_[static_cast<std::size_t>(r) * n + r] = 1.0;
  z.field_ = Field::Real;
  return z;
}

QMatrix QMatrix::diagonal(const std::vector<Quaternion>& diag) {
  int n = static_cast<int>(diag.size());
  if (n < 1) throw std::invalid_argument("empty diagonal");
  std::vector<Quaternion> e(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) e[static_cast<std::size_t>(r) * n + r] = diag[r];
  return QMatrix(n, std::move(e));
}

QMatrix QMatrix::zero(int n) {
  if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
  return QMatrix(n, std::vector<Quaternion>(static_cast<std::size_t>(n) * n));
}

std::complex<double> QMatrix::complex_at(int r, int c) const {
  if (field_ == Field::Quaternionic)
    throw std::invalid_argument("complex view of a quaternionic matrix");
  const Quaternion& q = at(r, c);
  return {q.a0, q.a1};
}

QMatrix QMatrix::transpose() const {
  std::vector<Quaternion> e(e_.size());
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c)
      e[static_cast<std::size_t>(c) * n_ + r] = at(r, c);
  return QMatrix(n_, std::move(e));
}

QMatrix QMatrix::conj() const {
  std::vector<Quaternion> e(e_.size());
  for (std::size_t m = 0; m < e_.size(); ++m) e[m] = e_[m].conj();
  return QMatrix(n_, std::move(e));
}

QMatrix QMatrix::conj_transpose() const { return transpose().conj(); }

double QMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& q : e_) s += q.norm_sq();
  return std::sqrt(s);
}

Quaternion QMatrix::trace() const {
  Quaternion t;
  for (int r = 0; r < n_; ++r) t += at(r, r);
  return t;
}

bool QMatrix::is_hermitian(double tol) const {
  for (int r = 0; r < n_; ++r)
    for (int c = r; c < n_; ++c)
      if ((at(r, c) - at(c, r).conj()).norm() > tol) return false;
  return true;
}

std::vector<Quaternion> QMatrix::apply(const std::vector<Quaternion>& x) const {
  if (static_cast<int>(x.size()) != n_)
    throw std::invalid_argument("matrix/vector dimension mismatch");
  std::vector<Quaternion> y(x.size());
  for (int r = 0; r < n_; ++r) {
    Quaternion acc;
    for (int c = 0; c < n_; ++c) acc += at(r, c) * x[c];
    y[static_cast<std::size_t>(r)] = acc;
  }
  return y;
}

QMatrix chi(const QMatrix& A) {
  const int n = A.dim();
  const int m = 2 * n;
  std::vector<Quaternion> e(static_cast<std::size_t>(m) * m);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const Quaternion& q = A.at(r, c);
      // q = (a0 + a1 i) + (a2 + a3 i) j
      std::complex<double> q1{q.a0, q.a1};
      std::complex<double> q2{q.a2, q.a3};
      e[static_cast<std::size_t>(r) * m + c] = q1;
      e[static_cast<std::size_t>(r) * m + (n + c)] = q2;
      e[static_cast<std::size_t>(n + r) * m + c] = -std::conj(q2);
      e[static_cast<std::size_t>(n + r) * m + (n + c)] = std::conj(q1);
    }
  }
  return QMatrix::from_entries(m, std::move(e));
}

Quaternion quadratic_form(const QMatrix& A, const std::vector<Quaternion>& x) {
  if (static_cast<int>(x.size()) != A.dim())
    throw std::invalid_argument("matrix/vector dimension mismatch");
  double norm_sq = 0.0;
  for (const auto& q : x) norm_sq += q.norm_sq();
  if (std::abs(std::sqrt(norm_sq) - 1.0) > 1e-9)
    throw std::invalid_argument("quadratic_form requires a unit vector");
  std::vector<Quaternion> y = A.apply(x);
  Quaternion w;
  for (std::size_t m = 0; m < x.size(); ++m) w += x[m].conj() * y[m];
  return w;
}

QMatrix hermitian_part(const QMatrix& A, double theta) {
  if (A.field() == Field::Quaternionic)
    throw std::invalid_argument("hermitian_part requires a real or complex matrix");
  const int n = A.dim();
  const std::complex<double> phase{std::cos(theta), -std::sin(theta)};  // e^{-i theta}
  std::vector<Quaternion> e(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    // Diagonal entries are Re(e^{-i theta} a_rr), exactly real.
    e[static_cast<std::size_t>(r) * n + r] = (phase * A.complex_at(r, r)).real();
    for (int c = r + 1; c < n; ++c) {
      std::complex<double> h =
          0.5 * (phase * A.complex_at(r, c) + std::conj(phase * A.complex_at(c, r)));
      e[static_cast<std::size_t>(r) * n + c] = h;
      e[static_cast<std::size_t>(c) * n + r] = std::conj(h);
    }
  }
  return QMatrix::from_entries(n, std::move(e));
}

HermitianEigen hermitian_eigs(const QMatrix& H) {
  if (H.field() == Field::Quaternionic)
    throw std::invalid_argument("hermitian_eigs requires a real or complex matrix");
  const int n = H.dim();
  const double fro = H.frobenius_norm();
  const double scale = std::max(1.0, fro);
  if (!H.is_hermitian(1e-12 * scale))
    throw std::invalid_argument("hermitian_eigs requires a Hermitian matrix");

  using C = std::complex<double>;
  std::vector<C> a(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a[static_cast<std::size_t>(r) * n + c] = H.complex_at(r, c);
  std::vector<C> v(static_cast<std::size_t>(n) * n, C{0.0, 0.0});
  for (int r = 0; r < n; ++r) v[static_cast<std::size_t>(r) * n + r] = 1.0;

  auto A = [&](int r, int c) -> C& { return a[static_cast<std::size_t>(r) * n + c]; };
  auto V = [&](int r, int c) -> C& { return v[static_cast<std::size_t>(r) * n + c]; };

  const double threshold = 1e-12 * scale;
  const int max_sweeps = 64;
  for (int sweep = 0; sweep < max_sweeps && n > 1; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(A(p, q)));
    if (off <= threshold) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const C b = A(p, q);
        const double beta = std::abs(b);
        if (beta <= threshold * 0.01) continue;
        const C phase = b / beta;
        const double app = A(p, p).real();
        const double aqq = A(q, q).real();
        const double tau = (aqq - app) / (2.0 * beta);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // Unitary J with J(p,p)=c, J(p,q)=s*phase, J(q,p)=-s*conj(phase),
        // J(q,q)=c annihilates the (p,q) entry of J* H J.
        for (int r = 0; r < n; ++r) {  // H <- H J (columns p, q)
          const C hp = A(r, p), hq = A(r, q);
          A(r, p) = c * hp - s * std::conj(phase) * hq;
          A(r, q) = s * phase * hp + c * hq;
        }
        for (int col = 0; col < n; ++col) {  // H <- J* H (rows p, q)
          const C hp = A(p, col), hq = A(q, col);
          A(p, col) = c * hp - s * phase * hq;
          A(q, col) = s * std::conj(phase) * hp + c * hq;
        }
        A(p, q) = 0.0;
        A(q, p) = 0.0;
        A(p, p) = A(p, p).real();
        A(q, q) = A(q, q).real();
        for (int r = 0; r < n; ++r) {  // V <- V J
          const C vp = V(r, p), vq = V(r, q);
          V(r, p) = c * vp - s * std::conj(phase) * vq;
          V(r, q) = s * phase * vp + c * vq;
        }
      }
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) order[static_cast<std::size_t>(m)] = m;
  auto column_less = [&](int x, int y) {
    for (int r = 0; r < n; ++r) {
      const C cx = V(r, x), cy = V(r, y);
      if (cx.real() != cy.real()) return cx.real() < cy.real();
      if (cx.imag() != cy.imag()) return cx.imag() < cy.imag();
    }
    return false;
  };
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    const double lx = A(x, x).real(), ly = A(y, y).real();
    if (lx != ly) return lx < ly;
    return column_less(x, y);
  });

  HermitianEigen out;
  out.values.reserve(static_cast<std::size_t>(n));
  out.vectors.reserve(static_cast<std::size_t>(n));
  for (int m : order) {
    out.values.push_back(A(m, m).real());
    std::vector<C> col(static_cast<std::size_t>(n));
    int arg_max = 0;
    double best = -1.0;
    for (int r = 0; r < n; ++r) {
      col[static_cast<std::size_t>(r)] = V(r, m);
      double mag = std::abs(V(r, m));
      if (mag > best) {
        best = mag;
        arg_max = r;
      }
    }
    // Fix the global phase so the largest component is real positive.
    C pivot = col[static_cast<std::size_t>(arg_max)];
    if (best > 0.0) {
      C rot = std::conj(pivot) / best;
      for (auto& z : col) z *= rot;
      col[static_cast<std::size_t>(arg_max)] = best;  // drop rounding residue
    }
    out.vectors.push_back(std::move(col));
  }
  return out;
}

}  // namespace quatrange
