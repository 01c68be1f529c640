#include <doctest.h>

#include <functional>
#include <set>

#include "thetapos/error.hpp"
#include "thetapos/linalg.hpp"
#include "thetapos/random.hpp"
#include "thetapos/so3q.hpp"

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

const Word w1212{1, 2, 1, 2};
const Word w2121{2, 1, 2, 1};

Vector vec(std::initializer_list<Rational> xs) { return Vector(xs); }

B2Params params(const Word& w, std::vector<B2Slot> slots) { return B2Params{w, std::move(slots)}; }

Vector scaled(const Rational& s, const Vector& v) { return s * v; }

}  // namespace

TEST_SUITE("so3q") {

TEST_CASE("the form q_J and its cone") {
  const auto cfg = QFormConfig::make(4);
  CHECK(qJ(cfg, vec({1, 0, 1})) == 1);
  CHECK(qJ(cfg, vec({0, 0, 0})) == 0);
  CHECK(qJ(cfg, vec({0, 1, 0})) == Rational(-1, 2));
  CHECK(in_cone_alpha2(cfg, vec({1, 0, 1})));
  CHECK(!in_cone_alpha2(cfg, vec({0, 0, 0})));
  CHECK(!in_cone_alpha2(cfg, vec({-1, 0, -1})));
  CHECK(in_closed_cone_alpha2(cfg, vec({0, 0, 0})));
  CHECK(in_closed_cone_alpha2(cfg, vec({1, 0, 0})));
  CHECK(!in_closed_cone_alpha2(cfg, vec({-1, 0, -1})));
  CHECK(kind_of([&] { qJ(cfg, vec({1, 0})); }) == ErrorKind::Dimension);
  for (int q = QFormConfig::kMinQ; q <= 8; ++q) {
    const auto c = QFormConfig::make(q);
    const Inertia in = inertia(c.J());
    CHECK(in.positive == 1);
    CHECK(in.negative == static_cast<std::size_t>(q - 2));
    CHECK(c.Q().rows() == static_cast<std::size_t>(q + 3));
    CHECK(inertia(c.Q()).positive == 3);
    CHECK(inertia(c.Q()).negative == static_cast<std::size_t>(q));
  }
  CHECK(kind_of([] { QFormConfig::make(3); }) == ErrorKind::Domain);
  CHECK(kind_of([] { QFormConfig::make(17); }) == ErrorKind::Domain);
}

TEST_CASE("coordinates of U_Theta") {
  const auto cfg = QFormConfig::make(4);
  const Vector zero(3);
  CHECK(u_theta(cfg, 0, zero, zero, 0).matrix == Matrix::identity(7));
  CHECK(u_theta(cfg, 5, zero, zero, 0).matrix == x_alpha1(cfg, 5).matrix);
  const Matrix x1 = x_alpha1(cfg, 1).matrix;
  CHECK(x1(0, 1) == 1);
  CHECK(x1(5, 6) == 1);
  const Vector v = vec({2, Rational(1, 3), -1});
  const Matrix x2 = x_alpha2(cfg, v).matrix;
  CHECK(x2(1, 5) == qJ(cfg, v));
  CHECK(x2(1, 6) == 0);
  Rng rng(11);
  for (int k = 0; k < 20; ++k) {
    const auto c = QFormConfig::make(rng.integer(4, 7));
    Vector a(c.cone_dim()), b(c.cone_dim());
    for (auto& e : a) e = rng.any();
    for (auto& e : b) e = rng.any();
    const Rational x = rng.any(), y = rng.any(), s = rng.any();
    const auto u = u_theta(c, x, a, b, s);
    CHECK(preserves_form(c, u.matrix));
    const auto back = u_theta_from_matrix(c, u.matrix);
    CHECK(back.x == x);
    CHECK(back.v == a);
    CHECK(back.w == b);
    CHECK(back.a == s);
    CHECK(x_alpha1(c, x).matrix * x_alpha1(c, y).matrix == x_alpha1(c, x + y).matrix);
    CHECK(x_alpha2(c, a).matrix * x_alpha2(c, b).matrix == x_alpha2(c, a + b).matrix);
    CHECK(preserves_form(c, x_alpha2(c, a).matrix));
  }
  Matrix bad = Matrix::identity(7);
  bad(3, 0) = 1;
  CHECK(kind_of([&] { u_theta_from_matrix(cfg, bad); }) == ErrorKind::Domain);
  CHECK(kind_of([&] { exp_nilpotent(Matrix::identity(2)); }) == ErrorKind::Domain);
}

TEST_CASE("F over reduced words") {
  const auto cfg = QFormConfig::make(4);
  const Vector v = vec({1, 0, 1});
  CHECK(F_word(cfg, params({}, {})).matrix == Matrix::identity(7));
  const auto f = F_word(cfg, params(w1212, {Rational(2), v, Rational(3), v}));
  CHECK(f.matrix == x_alpha1(cfg, 2).matrix * x_alpha2(cfg, v).matrix * x_alpha1(cfg, 3).matrix *
                        x_alpha2(cfg, v).matrix);
  CHECK(kind_of([&] { F_word(cfg, params(w1212, {v, v, Rational(3), v})); }) == ErrorKind::Domain);
  CHECK(kind_of([&] { F_word(cfg, params({1, 1}, {Rational(1), Rational(1)})); }) ==
        ErrorKind::Domain);
  CHECK(kind_of([&] { F_word(cfg, params(w1212, {Rational(1)})); }) == ErrorKind::Domain);
}

TEST_CASE("braid transition example") {
  const auto cfg = QFormConfig::make(4);
  const Vector v = vec({1, 0, 1});
  const auto t = braid_transition(cfg, 1, v, 1, v);
  CHECK(t.w1 == vec({Rational(1, 3), 0, Rational(1, 3)}));
  CHECK(t.y1 == Rational(9, 5));
  CHECK(t.w2 == vec({Rational(5, 3), 0, Rational(5, 3)}));
  CHECK(t.y2 == Rational(1, 5));
  CHECK(F_word(cfg, params(w1212, {Rational(1), v, Rational(1), v})).matrix ==
        F_word(cfg, params(w2121, {t.w1, t.y1, t.w2, t.y2})).matrix);
}

TEST_CASE("braid transition: identity, consistency equations, cones") {
  Rng rng(12);
  for (int k = 0; k < 60; ++k) {
    const auto cfg = QFormConfig::make(4 + k % 3);
    const Rational x1 = rng.positive(), x2 = rng.positive();
    const Vector v1 = sample_cone_vector(rng, cfg), v2 = sample_cone_vector(rng, cfg);
    const auto t = braid_transition(cfg, x1, v1, x2, v2);
    CHECK(F_word(cfg, params(w1212, {x1, v1, x2, v2})).matrix ==
          F_word(cfg, params(w2121, {t.w1, t.y1, t.w2, t.y2})).matrix);
    CHECK(x1 + x2 == t.y1 + t.y2);
    CHECK(v1 + v2 == t.w1 + t.w2);
    CHECK(scaled(x1, v1 + v2) + scaled(x2, v2) == scaled(t.y1, t.w2));
    CHECK(t.y1 * qJ(cfg, t.w2) == x1 * qJ(cfg, v1 + v2) + x2 * qJ(cfg, v2));
    CHECK(t.y1 * qJ(cfg, t.w1) + t.y2 * qJ(cfg, t.w1 + t.w2) == x2 * qJ(cfg, v1));
    CHECK(t.y1 > 0);
    CHECK(t.y2 > 0);
    CHECK(qJ(cfg, t.w1) > 0);
    CHECK(in_cone_alpha2(cfg, t.w1));
    CHECK(in_cone_alpha2(cfg, t.w2));
  }
}

TEST_CASE("braid transition on the boundary") {
  Rng rng(13);
  for (int k = 0; k < 20; ++k) {
    const auto cfg = QFormConfig::make(4 + k % 3);
    const Rational x2 = rng.positive();
    const Vector v1 = sample_closed_cone_vector(rng, cfg), v2 = sample_cone_vector(rng, cfg);
    const auto t = braid_transition(cfg, 0, v1, x2, v2);
    CHECK(t.w1 + t.w2 == v1 + v2);
    CHECK(t.y1 + t.y2 == x2);
    CHECK(F_word(cfg, params(w1212, {Rational(0), v1, x2, v2})).matrix ==
          F_word(cfg, params(w2121, {t.w1, t.y1, t.w2, t.y2})).matrix);
  }
  const auto cfg = QFormConfig::make(4);
  const Vector v = vec({1, 0, 1});
  CHECK(kind_of([&] { braid_transition(cfg, -1, v, 1, v); }) == ErrorKind::Domain);
  CHECK(kind_of([&] { braid_transition(cfg, 1, v, 0, v); }) == ErrorKind::Domain);
  CHECK(kind_of([&] { braid_transition(cfg, 1, v, 1, vec({1, 0, 0})); }) == ErrorKind::Domain);
}

TEST_CASE("invert_F") {
  const auto cfg = QFormConfig::make(4);
  CHECK(!invert_F(cfg, Matrix::identity(7), w1212));
  CHECK(!invert_F(cfg, Matrix::identity(7), w2121));
  const auto e = exp_principal(cfg, 1, vec({1, 0, 1}));
  const auto p = invert_F(cfg, e.matrix, w2121);
  REQUIRE(p);
  CHECK(*p == params(w2121, {vec({Rational(1, 3), 0, Rational(1, 3)}), Rational(3, 4),
                             vec({Rational(2, 3), 0, Rational(2, 3)}), Rational(1, 4)}));
  // mirrored parameters are not positive
  const Vector m = vec({-1, 0, -1});
  CHECK(!invert_F(cfg, F_word(cfg, params(w1212, {Rational(-1), m, Rational(-1), m})).matrix, w1212));
  CHECK(kind_of([&] { invert_F(cfg, e.matrix, {1, 2, 1}); }) == ErrorKind::Domain);

  Rng rng(14);
  for (int k = 0; k < 40; ++k) {
    const auto c = QFormConfig::make(4 + k % 4);
    const Word& w = (k % 2 == 0) ? w1212 : w2121;
    const B2Params p0 = sample_interior_b2(rng, c, w);
    const auto back = invert_F(c, F_word(c, p0).matrix, w);
    REQUIRE(back);
    CHECK(*back == p0);
    const Word& other = (k % 2 == 0) ? w2121 : w1212;
    const B2Params moved = b2_word_transition(c, p0, other);
    CHECK(is_interior(c, moved));
    CHECK(F_word(c, moved).matrix == F_word(c, p0).matrix);
  }
}

TEST_CASE("semigroup closure") {
  Rng rng(15);
  for (int k = 0; k < 30; ++k) {
    const auto cfg = QFormConfig::make(4 + k % 3);
    const Matrix a = F_word(cfg, sample_interior_b2(rng, cfg, w1212)).matrix;
    const Matrix b = F_word(cfg, sample_interior_b2(rng, cfg, w2121)).matrix;
    const auto p = invert_F(cfg, a * b, w1212);
    REQUIRE(p);
    CHECK(is_interior(cfg, *p));
    CHECK(F_word(cfg, *p).matrix == a * b);
  }
}

TEST_CASE("exponential of a positive nilpotent") {
  const auto cfg = QFormConfig::make(4);
  CHECK(exp_principal(cfg, 0, Vector(3)).matrix == Matrix::identity(7));
  CHECK(exp_principal(cfg, 3, Vector(3)).matrix == x_alpha1(cfg, 3).matrix);
  CHECK(exp_principal(cfg, 0, vec({1, 2, 3})).matrix == x_alpha2(cfg, vec({1, 2, 3})).matrix);
  Rng rng(16);
  for (int k = 0; k < 30; ++k) {
    const auto c = QFormConfig::make(4 + k % 3);
    const Rational a = rng.positive();
    const Vector w = sample_cone_vector(rng, c);
    const auto e = exp_principal(c, a, w);
    CHECK(preserves_form(c, e.matrix));
    const auto f = F_word(c, params(w2121, {scaled(Rational(1, 3), w), Rational(3, 4) * a,
                                            scaled(Rational(2, 3), w), Rational(1, 4) * a}));
    CHECK(e.matrix == f.matrix);
  }
}

TEST_CASE("charts of the nonnegative part") {
  const auto charts = b2_subword_charts(w1212);
  CHECK(charts.size() == 16);
  std::set<std::vector<std::size_t>> seen;
  for (const auto& c : charts) {
    seen.insert(c.positions);
    CHECK(c.letters.size() == c.positions.size());
    for (std::size_t i = 0; i < c.positions.size(); ++i) CHECK(c.letters[i] == w1212[c.positions[i]]);
  }
  CHECK(seen.size() == 16);
}

TEST_CASE("isotropic flags and triples") {
  const auto cfg = QFormConfig::make(4);
  const auto st = StandardIsotropicFlags::of(cfg);
  CHECK(is_transverse_12(cfg, st.E, st.F));
  CHECK(!is_transverse_12(cfg, st.F, st.F));
  CHECK(kind_of([&] { so3q_coordinate(cfg, st.F); }) == ErrorKind::Transversality);
  CHECK(so3q_coordinate(cfg, st.E).matrix == Matrix::identity(7));
  CHECK(!is_positive_triple_so3q(cfg, st.E));

  Matrix nonisotropic(7, 2);
  nonisotropic(0, 0) = 1;
  nonisotropic(6, 1) = 1;
  CHECK(kind_of([&] { IsotropicFlag::from_basis(cfg, nonisotropic); }) == ErrorKind::Domain);

  Rng rng(17);
  for (int k = 0; k < 20; ++k) {
    const auto c = QFormConfig::make(4 + k % 3);
    const auto s = StandardIsotropicFlags::of(c);
    const B2Params p = sample_interior_b2(rng, c, (k % 2) ? w1212 : w2121);
    const Matrix u = F_word(c, p).matrix;
    const IsotropicFlag t = apply(c, u, s.E);
    CHECK(so3q_coordinate(c, t).matrix == u);
    CHECK(is_positive_triple_so3q(c, t));
    const B2Params neg = [&] {
      B2Params m = p;
      for (auto& slot : m.slots)
        std::visit([](auto& x) { x = Rational(-1) * x; }, slot);
      return m;
    }();
    CHECK(!is_positive_triple_so3q(c, apply(c, F_word(c, neg).matrix, s.E)));
  }
}

}  // TEST_SUITE
