#include <doctest.h>

#include "thetapos/error.hpp"
#include "thetapos/flags.hpp"
#include "thetapos/linalg.hpp"
#include "thetapos/random.hpp"

using namespace thetapos;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Limit;
}

Flag line_flag(const Rational& a, const Rational& b) {
  // n = 2: F_1 = span(a e1 + b e2)
  return Flag::from_basis(a.is_zero() ? Matrix{{a, 1}, {b, 0}} : Matrix{{a, 0}, {b, 1}});
}

}  // namespace

TEST_SUITE("flags") {

TEST_CASE("transversality") {
  const auto s = StandardFlags::of(3);
  CHECK(is_transverse(s.E, s.F));
  CHECK(!is_transverse(s.F, s.F));
  CHECK(is_transverse(line_flag(0, 1), line_flag(1, 1)));
  CHECK(kind_of([&] { is_transverse(s.E, StandardFlags::of(2).F); }) == ErrorKind::Dimension);
}

TEST_CASE("flags are stored canonically") {
  Rng rng(1);
  const Matrix b = sample_invertible(rng, 3);
  Matrix lower = Matrix::identity(3);  // upper triangular change of basis keeps every F_i
  lower(0, 1) = 5;
  lower(1, 2) = -2;
  lower(0, 0) = 3;
  CHECK(Flag::from_basis(b) == Flag::from_basis(b * lower));
  CHECK_THROWS_AS(Flag::from_basis(Matrix{{1, 1}, {1, 1}}), Error);
}

TEST_CASE("unipotent coordinate") {
  const auto s2 = StandardFlags::of(2);
  const auto s3 = StandardFlags::of(3);
  CHECK(unipotent_coordinate(s3.E, s3).matrix() == Matrix::identity(3));
  CHECK(unipotent_coordinate(line_flag(5, 1), s2).matrix() == Matrix{{1, 5}, {0, 1}});
  const UnipotentUpper u = param_F({{1, 2, 1}, {1, 1, 1}}, 3);
  CHECK(unipotent_coordinate(u.matrix() * s3.E, s3).matrix() == Matrix{{1, 2, 1}, {0, 1, 1}, {0, 0, 1}});
  CHECK(kind_of([&] { unipotent_coordinate(s3.F, s3); }) == ErrorKind::Transversality);
}

TEST_CASE("standard triple positivity") {
  const auto s2 = StandardFlags::of(2);
  const auto s3 = StandardFlags::of(3);
  CHECK(is_positive_triple_standard(line_flag(1, 1), s2));
  CHECK(!is_positive_triple_standard(line_flag(-1, 1), s2));
  const Flag t = param_F({{1, 2, 1}, {1, 1, 1}}, 3).matrix() * s3.E;
  CHECK(is_positive_triple_standard(t, s3));
  CHECK(is_transverse(t, s3.E));
  CHECK(is_transverse(t, s3.F));
}

TEST_CASE("positive flags are transverse to both E and F") {
  Rng rng(2);
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(2, 4));
    const auto s = StandardFlags::of(n);
    const Flag t = sample_positive_unipotent(rng, n).matrix() * s.E;
    REQUIRE(is_positive_triple_standard(t, s));
    CHECK(is_transverse(t, s.E));
    CHECK(is_transverse(t, s.F));
  }
}

TEST_CASE("normalize_pair") {
  const auto s2 = StandardFlags::of(2);
  const auto s3 = StandardFlags::of(3);
  CHECK(normalize_pair(s3.E, s3.F).is_diagonal());
  const Flag a = line_flag(1, 1), b = line_flag(1, 0);
  const Matrix g = normalize_pair(a, b);
  CHECK(g * a == s2.E);
  CHECK(g * b == s2.F);
  Rng rng(3);
  for (int k = 0; k < 15; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(2, 4));
    const auto s = StandardFlags::of(n);
    const Matrix g0 = sample_invertible(rng, n);
    const Matrix h = normalize_pair(g0 * s.E, g0 * s.F);
    CHECK((h * g0).is_diagonal());
  }
  CHECK(kind_of([&] { normalize_pair(s3.F, s3.F); }) == ErrorKind::Transversality);
}

TEST_CASE("general triple positivity") {
  const auto s2 = StandardFlags::of(2);
  const auto s3 = StandardFlags::of(3);
  const Flag t = param_F({{1, 2, 1}, {1, 1, 1}}, 3).matrix() * s3.E;
  CHECK(is_positive_triple(s3.E, t, s3.F));
  // any three distinct lines in the plane
  CHECK(is_positive_triple(line_flag(1, 0), line_flag(1, 1), line_flag(0, 1)));
  CHECK(is_positive_triple(line_flag(1, 0), line_flag(-3, 1), line_flag(0, 1)));
  CHECK(is_positive_triple(line_flag(2, 7), line_flag(-1, 5), line_flag(4, -1)));
  CHECK(kind_of([&] { is_positive_triple(s3.E, s3.E, s3.F); }) == ErrorKind::Transversality);
  CHECK(kind_of([&] { is_positive_triple(s3.F, t, s3.F); }) == ErrorKind::Transversality);
  // t meets f3 badly: false, not an error
  CHECK(!is_positive_triple(s2.E, line_flag(1, 1), line_flag(1, 1)));
}

TEST_CASE("GL invariance and the SL orientation") {
  Rng rng(4);
  for (int k = 0; k < 15; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(2, 4));
    const auto s = StandardFlags::of(n);
    const Matrix u = sample_positive_unipotent(rng, n).matrix();
    const Matrix g = sample_invertible(rng, n);
    const Flag t = u * s.E;
    CHECK(is_positive_triple(g * s.E, g * t, g * s.F));
    const auto cert = certify_positive_triple(g * s.E, g * t, g * s.F);
    REQUIRE(cert);
    CHECK(is_unipotent_positive(cert->coordinate));
    // a random flag is positive or not independently of the frame
    const Flag r = Flag::from_basis(sample_invertible(rng, n));
    if (is_transverse(r, s.E) && is_transverse(r, s.F))
      CHECK(is_positive_triple(s.E, r, s.F) == is_positive_triple(g * s.E, g * r, g * s.F));
    if (det(g).sign() > 0)
      CHECK(is_positive_triple(g * s.E, g * t, g * s.F, Orientation::SL));
  }
  // for n = 2 the SL orientation separates the two arcs
  const Flag e = line_flag(0, 1), f = line_flag(1, 0);
  CHECK(is_positive_triple(e, line_flag(1, 1), f, Orientation::SL));
  CHECK(!is_positive_triple(e, line_flag(-1, 1), f, Orientation::SL));
}

TEST_CASE("quadruples") {
  Rng rng(5);
  for (int k = 0; k < 10; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(2, 4));
    const auto s = StandardFlags::of(n);
    const Matrix u = sample_positive_unipotent(rng, n).matrix();
    const Matrix u2 = sample_positive_unipotent(rng, n).matrix();
    CHECK(is_positive_quadruple(s.E, u * s.E, u * u2 * s.E, s.F));
    CHECK(!is_positive_quadruple(s.E, u * s.E, u * s.E, s.F));
    // wrong nesting: s' comes before s
    CHECK(!is_positive_quadruple(s.E, u * u2 * s.E, u * s.E, s.F));
  }
  // four points in cyclic order on the projective line
  const Flag p0 = line_flag(0, 1), p1 = line_flag(1, 1), p2 = line_flag(2, 1), p3 = line_flag(1, 0);
  CHECK(is_positive_quadruple(p0, p1, p2, p3));
  CHECK(!is_positive_quadruple(p0, p2, p1, p3));
}

}  // TEST_SUITE
