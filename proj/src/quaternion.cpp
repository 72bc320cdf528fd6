#include "quatrange/quaternion.hpp"

#include <cassert>
#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>

namespace quatrange {

bool similar(const Quaternion& p, const Quaternion& q, double tol) {
  assert(tol >= 0.0);
  return std::abs(p.real() - q.real()) <= tol &&
         std::abs(p.imag_norm() - q.imag_norm()) <= tol;
}

std::complex<double> canonical_rep(const Quaternion& q) {
  return {q.real(), q.imag_norm()};
}

namespace {

void append_double(std::string& out, double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, res.ptr);
}

// Appends one "[sign]coefficient[unit]" term. Coefficients +-1 of a unit term
// print as the bare unit.
void append_term(std::string& out, double v, char unit) {
  if (v == 0.0) return;
  if (!out.empty() && !std::signbit(v)) out.push_back('+');
  if (unit != '\0' && (v == 1.0 || v == -1.0)) {
    if (v == -1.0) out.push_back('-');
  } else {
    append_double(out, v);
  }
  if (unit != '\0') out.push_back(unit);
}

}  // namespace

std::string to_string(const Quaternion& q) {
  std::string out;
  append_term(out, q.a0, '\0');
  append_term(out, q.a1, 'i');
  append_term(out, q.a2, 'j');
  append_term(out, q.a3, 'k');
  if (out.empty()) out = "0";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << to_string(q);
}

Quaternion parse_quaternion(std::string_view text) {
  Quaternion q;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  bool any_term = false;
  while (pos < text.size()) {
    double sign = 1.0;
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = -1.0;
      ++pos;
      skip_ws();
    } else if (any_term) {
      throw ParseError("expected '+' or '-' between terms", pos);
    }
    if (pos >= text.size()) throw ParseError("dangling sign", pos);

    double mag = 1.0;
    bool have_number = false;
    if ((text[pos] >= '0' && text[pos] <= '9') || text[pos] == '.') {
      const char* first = text.data() + pos;
      const char* last = text.data() + text.size();
      auto res = std::from_chars(first, last, mag);
      if (res.ec != std::errc{} || res.ptr == first)
        throw ParseError("malformed number", pos);
      pos += static_cast<std::size_t>(res.ptr - first);
      have_number = true;
    }

    char unit = '\0';
    if (pos < text.size() &&
        (text[pos] == 'i' || text[pos] == 'j' || text[pos] == 'k')) {
      unit = text[pos];
      ++pos;
    }
    if (!have_number && unit == '\0')
      throw ParseError("expected number or unit i/j/k", pos);

    double v = sign * mag;
    switch (unit) {
      case '\0': q.a0 += v; break;
      case 'i': q.a1 += v; break;
      case 'j': q.a2 += v; break;
      case 'k': q.a3 += v; break;
    }
    any_term = true;
    skip_ws();
  }
  if (!any_term) throw ParseError("empty quaternion literal", pos);
  return q;
}

double GaussianStream::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // 1 - uniform() lies in (0, 1], keeping the log finite.
  double u1 = 1.0 - uniform();
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double t = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(t);
  has_spare_ = true;
  return r * std::cos(t);
}

std::vector<Quaternion> draw_unit_vector(GaussianStream& stream, int n) {
  if (n < 1) throw std::invalid_argument("unit vector dimension must be >= 1");
  std::vector<Quaternion> x(static_cast<std::size_t>(n));
  double norm_sq = 0.0;
  // A zero draw has probability zero but would divide by zero; retry.
  do {
    norm_sq = 0.0;
    for (auto& q : x) {
      q = Quaternion{stream.next(), stream.next(), stream.next(), stream.next()};
      norm_sq += q.norm_sq();
    }
  } while (norm_sq < 1e-280);
  double inv = 1.0 / std::sqrt(norm_sq);
  for (auto& q : x) q = q * inv;
  return x;
}

std::vector<Quaternion> sample_unit_sphere(int n, std::uint64_t seed) {
  GaussianStream stream(seed);
  return draw_unit_vector(stream, n);
}

}  // namespace quatrange
