#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "quatrange/quaternion.hpp"

using namespace quatrange;
using C = std::complex<double>;

TEST_CASE("basis products follow the Hamilton table") {
  const Quaternion i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  CHECK(i * i == Quaternion{-1.0});
  CHECK(j * j == Quaternion{-1.0});
  CHECK(k * k == Quaternion{-1.0});
  CHECK(i * j == k);
  CHECK(j * i == -k);
  CHECK(j * k == i);
  CHECK(k * j == -i);
  CHECK(k * i == j);
  CHECK(i * k == -j);
  CHECK(i * j * k == Quaternion{-1.0});
}

TEST_CASE("product is associative and conjugation reverses it") {
  const Quaternion p{1.0, -2.0, 0.5, 3.0};
  const Quaternion q{-0.25, 1.0, 2.0, -1.5};
  const Quaternion r{0.0, 0.0, 1.0, 4.0};
  const Quaternion lhs = (p * q) * r;
  const Quaternion rhs = p * (q * r);
  CHECK(std::abs((lhs - rhs).norm()) < 1e-12);

  const Quaternion anti = (p * q).conj() - q.conj() * p.conj();
  CHECK(anti.norm() < 1e-12);
}

TEST_CASE("norm is multiplicative") {
  const Quaternion p{1.0, -2.0, 0.5, 3.0};
  const Quaternion q{-0.25, 1.0, 2.0, -1.5};
  CHECK((p * q).norm() == doctest::Approx(p.norm() * q.norm()).epsilon(1e-12));
}

TEST_CASE("canonical representative folds the imaginary part upward") {
  CHECK(canonical_rep(Quaternion{2.0, -3.0, 0.0, 0.0}) == C{2.0, 3.0});
  CHECK(canonical_rep(Quaternion{0.5, 0.0, 3.0, 4.0}) == C{0.5, 5.0});
  CHECK(canonical_rep(Quaternion{7.0, 0.0, 0.0, 0.0}) == C{7.0, 0.0});
  // (1 + i + j + k)/2 is a unit quaternion with real part 1/2.
  const Quaternion u{0.5, 0.5, 0.5, 0.5};
  const C rep = canonical_rep(u);
  CHECK(rep.real() == doctest::Approx(0.5));
  CHECK(rep.imag() == doctest::Approx(std::sqrt(3.0) / 2.0));
}

TEST_CASE("similarity compares class invariants only") {
  CHECK(similar(Quaternion{1.0, 2.0, 0.0, 0.0}, Quaternion{1.0, 0.0, 2.0, 0.0}));
  CHECK(similar(Quaternion{1.0, 0.0, 0.0, -2.0}, Quaternion{1.0, 2.0, 0.0, 0.0}));
  CHECK_FALSE(similar(Quaternion{1.0, 2.0, 0.0, 0.0}, Quaternion{1.0, 2.1, 0.0, 0.0}));
  CHECK_FALSE(similar(Quaternion{1.0, 2.0, 0.0, 0.0}, Quaternion{1.5, 2.0, 0.0, 0.0}));
  // A unit conjugation must not change the class.
  const Quaternion q{0.3, -1.0, 2.0, 0.7};
  Quaternion s{1.0, 2.0, -0.5, 0.25};
  s = s / s.norm();
  CHECK(similar(q, s.conj() * q * s, 1e-12));
}

TEST_CASE("parser accepts the documented literal forms") {
  CHECK(parse_quaternion("0") == Quaternion{});
  CHECK(parse_quaternion("1") == Quaternion{1.0});
  CHECK(parse_quaternion("-2.5") == Quaternion{-2.5});
  CHECK(parse_quaternion("i") == Quaternion::i());
  CHECK(parse_quaternion("-k") == -Quaternion::k());
  CHECK(parse_quaternion("1+2i+3j+4k") == Quaternion{1.0, 2.0, 3.0, 4.0});
  CHECK(parse_quaternion("4k+3j+2i+1") == Quaternion{1.0, 2.0, 3.0, 4.0});
  CHECK(parse_quaternion("1e2i") == Quaternion{0.0, 100.0, 0.0, 0.0});
  CHECK(parse_quaternion("2i-0.5j") == Quaternion{0.0, 2.0, -0.5, 0.0});
  CHECK(parse_quaternion("i+i") == Quaternion{0.0, 2.0, 0.0, 0.0});
  CHECK(parse_quaternion(" 1 + 2i ") == Quaternion{1.0, 2.0, 0.0, 0.0});
}

TEST_CASE("parser rejects malformed literals with a position") {
  CHECK_THROWS_AS(parse_quaternion(""), ParseError);
  CHECK_THROWS_AS(parse_quaternion("1+"), ParseError);
  CHECK_THROWS_AS(parse_quaternion("2x"), ParseError);
  CHECK_THROWS_AS(parse_quaternion("1 2"), ParseError);
  try {
    parse_quaternion("1+2q");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 3);
  }
}

TEST_CASE("to_string round-trips exactly, including noisy doubles") {
  GaussianStream stream(7);
  for (int trial = 0; trial < 500; ++trial) {
    const Quaternion q{stream.next() * 1e3, stream.next(), stream.next() * 1e-7,
                       stream.next() / 3.0};
    CHECK(parse_quaternion(to_string(q)) == q);
  }
  CHECK(to_string(Quaternion{}) == "0");
  CHECK(to_string(Quaternion{1.0, 0.0, -1.0, 0.0}) == "1-j");
  CHECK(to_string(Quaternion{0.0, 2.0, 0.0, 0.5}) == "2i+0.5k");
}

TEST_CASE("gaussian stream is deterministic and roughly standard") {
  GaussianStream a(12345), b(12345);
  for (int t = 0; t < 64; ++t) CHECK(a.next() == b.next());

  GaussianStream s(99);
  double mean = 0.0, var = 0.0;
  const int n = 200000;
  for (int t = 0; t < n; ++t) {
    const double x = s.next();
    mean += x;
    var += x * x;
  }
  mean /= n;
  var = var / n - mean * mean;
  CHECK(std::abs(mean) < 0.01);
  CHECK(std::abs(var - 1.0) < 0.02);
}

TEST_CASE("unit sphere draws are unit and deterministic per seed") {
  const std::vector<Quaternion> x = sample_unit_sphere(3, 42);
  REQUIRE(x.size() == 3);
  double norm_sq = 0.0;
  for (const Quaternion& q : x) norm_sq += q.norm_sq();
  CHECK(norm_sq == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sample_unit_sphere(3, 42) == x);
  CHECK(sample_unit_sphere(3, 43) != x);
}
