#include <doctest.h>

#include "oracles.hpp"
#include "thetapos/error.hpp"
#include "thetapos/linalg.hpp"
#include "thetapos/random.hpp"
#include "thetapos/symplectic.hpp"

#include <functional>

using namespace thetapos;

namespace {

Matrix graph_basis(const Matrix& m) {
  const std::size_t n = m.rows();
  Matrix b(2 * n, n);
  b.set_block(0, 0, Matrix::identity(n));
  b.set_block(n, 0, m);
  return b;
}

Lagrangian graph(const SymplecticSpace& sp, const Matrix& m) {
  return Lagrangian::from_basis(sp, graph_basis(m));
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Limit;
}

}  // namespace

TEST_SUITE("symplectic") {

TEST_CASE("Lagrangian subspaces") {
  const auto sp = SymplecticSpace::of(2);
  CHECK(is_lagrangian(sp, sp.l_e()));
  CHECK(is_lagrangian(sp, sp.l_f()));
  Matrix e1f1(4, 2);
  e1f1(0, 0) = 1;
  e1f1(2, 1) = 1;
  CHECK(!is_lagrangian(sp, e1f1));
  CHECK(is_lagrangian(sp, graph_basis(Matrix{{1, 2}, {2, -3}})));
  CHECK(!is_lagrangian(sp, graph_basis(Matrix{{1, 2}, {0, -3}})));
  CHECK(kind_of([&] { is_lagrangian(sp, Matrix(4, 3)); }) == ErrorKind::Dimension);
}

TEST_CASE("positive definiteness") {
  CHECK(is_pos_def(Matrix::identity(3)));
  CHECK(!is_pos_def(Matrix{{1, 0}, {0, -1}}));
  CHECK(is_pos_def(Matrix{{2, 1}, {1, 2}}));
  CHECK(!is_pos_def(Matrix{{0, 0}, {0, 1}}));
  CHECK(kind_of([] { is_pos_def(Matrix{{1, 1}, {0, 1}}); }) == ErrorKind::Domain);
}

TEST_CASE("block generators are symplectic") {
  const auto sp = SymplecticSpace::of(2);
  CHECK(v_elem(Matrix(2, 2)) == Matrix::identity(4));
  CHECK(h_elem(Matrix::identity(2)) == Matrix::identity(4));
  const Matrix vw = v_elem(Matrix::identity(2)) * w_elem(Matrix::identity(2));
  Matrix expected(4, 4);
  expected.set_block(0, 0, Matrix::identity(2));
  expected.set_block(0, 2, Matrix::identity(2));
  expected.set_block(2, 0, Matrix::identity(2));
  expected.set_block(2, 2, Matrix::identity(2) * Rational(2));
  CHECK(vw == expected);
  CHECK(sp.is_symplectic(vw));
  CHECK(kind_of([] { h_elem(Matrix{{1, 1}, {1, 1}}); }) == ErrorKind::Singular);
  Rng rng(1);
  for (int k = 0; k < 10; ++k) CHECK(sp.is_symplectic(sample_symplectic(rng, sp)));
}

TEST_CASE("Lagrangian coordinates") {
  const auto sp1 = SymplecticSpace::of(1);
  const auto sp = SymplecticSpace::of(2);
  CHECK(lag_coordinate(Lagrangian::from_basis(sp, sp.l_e()), sp).is_zero());
  CHECK(lag_coordinate(graph(sp1, Matrix{{Rational(-5, 3)}}), sp1) == Matrix{{Rational(-5, 3)}});
  Rng rng(2);
  for (int k = 0; k < 10; ++k) {
    const Matrix m = sample_symmetric(rng, 2);
    const Lagrangian t = apply(sp, v_elem(m), Lagrangian::from_basis(sp, sp.l_e()));
    CHECK(lag_coordinate(t, sp) == m);
    // h(A) acts on coordinates by congruence with A^{-T}
    const Matrix a = sample_invertible(rng, 2);
    const Matrix ait = inverse(a).transpose();
    CHECK(lag_coordinate(apply(sp, h_elem(a), t), sp) == ait * m * ait.transpose());
  }
  CHECK(kind_of([&] { lag_coordinate(Lagrangian::from_basis(sp, sp.l_f()), sp); }) ==
        ErrorKind::Transversality);
}

TEST_CASE("positive Lagrangian triples") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto sp = SymplecticSpace::of(n);
    const auto le = Lagrangian::from_basis(sp, sp.l_e());
    const auto lf = Lagrangian::from_basis(sp, sp.l_f());
    const Matrix id = Matrix::identity(n);
    CHECK(is_positive_lag_triple(sp, le, graph(sp, id), lf));
    CHECK(!is_positive_lag_triple(sp, le, graph(sp, -id), lf));
    CHECK(kind_of([&] { is_positive_lag_triple(sp, le, le, lf); }) == ErrorKind::Transversality);
  }
}

TEST_CASE("Maslov index examples") {
  const auto sp = SymplecticSpace::of(2);
  const auto le = Lagrangian::from_basis(sp, sp.l_e());
  const auto lf = Lagrangian::from_basis(sp, sp.l_f());
  CHECK(maslov_index(sp, le, graph(sp, Matrix::identity(2)), lf) == 2);
  CHECK(maslov_index(sp, le, le, lf) == 0);
  CHECK(maslov_index(sp, le, graph(sp, Matrix{{1, 0}, {0, -1}}), lf) == 0);
  CHECK(maslov_index(sp, le, graph(sp, -Matrix::identity(2)), lf) == -2);
}

TEST_CASE("Maslov index: oracle, invariance, cocycle, positivity") {
  Rng rng(3);
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = 1 + static_cast<std::size_t>(k % 3);
    const auto sp = SymplecticSpace::of(n);
    const Lagrangian l1 = sample_lagrangian(rng, sp), l2 = sample_lagrangian(rng, sp),
                     l3 = sample_lagrangian(rng, sp), l4 = sample_lagrangian(rng, sp);
    const long mu = maslov_index(sp, l1, l2, l3);
    CHECK(mu == oracle::descartes_signature(kashiwara_form(sp, l1, l2, l3)));
    const Matrix g = sample_symplectic(rng, sp);
    CHECK(maslov_index(sp, apply(sp, g, l1), apply(sp, g, l2), apply(sp, g, l3)) == mu);
    CHECK(mu - maslov_index(sp, l1, l2, l4) + maslov_index(sp, l1, l3, l4) -
              maslov_index(sp, l2, l3, l4) ==
          0);
    if (is_transverse(l1, l2) && is_transverse(l2, l3) && is_transverse(l1, l3))
      CHECK(is_positive_lag_triple(sp, l1, l2, l3) == (mu == static_cast<long>(n)));
  }
}

TEST_CASE("the Hermitian semigroup") {
  const auto sp = SymplecticSpace::of(2);
  const Matrix id = Matrix::identity(2);
  CHECK(sp_semigroup_product(sp, {{SpFactor::Kind::V, id}, {SpFactor::Kind::H, id}, {SpFactor::Kind::W, id}})
            .certified());
  const SpProduct wv = sp_semigroup_product(sp, {{SpFactor::Kind::W, id}, {SpFactor::Kind::V, id}});
  REQUIRE(wv.certified());
  CHECK(v_elem(wv.certificate->m) * h_elem(wv.certificate->a) * w_elem(wv.certificate->n) == wv.g);
  CHECK(!sp_semigroup_product(sp, {{SpFactor::Kind::V, id}}).certified());
  CHECK(kind_of([&] { sp_semigroup_product(sp, {{SpFactor::Kind::V, -id}}); }) == ErrorKind::Domain);
}

TEST_CASE("rank one reduces to the SL(2) identity") {
  const auto sp = SymplecticSpace::of(1);
  const Rational s(3), t(2);
  const Matrix g = w_elem(Matrix{{s}}) * v_elem(Matrix{{t}});
  const auto f = factor_sp_positive(sp, g);
  REQUIRE(f);
  const Rational d = Rational(1) + s * t;
  CHECK(f->m == Matrix{{t / d}});
  CHECK(f->a == Matrix{{d}});
  CHECK(f->n == Matrix{{s / d}});
}

TEST_CASE("semigroup closure of certified products") {
  Rng rng(4);
  for (int k = 0; k < 15; ++k) {
    const std::size_t n = 1 + static_cast<std::size_t>(k % 3);
    const auto sp = SymplecticSpace::of(n);
    std::vector<SpFactor> fs;
    for (int r = 0; r < 2; ++r) {
      Matrix a = sample_invertible(rng, n);
      if (det(a).sign() < 0)
        for (std::size_t j = 0; j < n; ++j) a(j, 0) = -a(j, 0);
      fs.push_back({SpFactor::Kind::V, sample_pos_def(rng, n)});
      fs.push_back({SpFactor::Kind::H, a});
      fs.push_back({SpFactor::Kind::W, sample_pos_def(rng, n)});
    }
    const SpProduct p = sp_semigroup_product(sp, fs);
    CHECK(sp.is_symplectic(p.g));
    CHECK(p.certified());
  }
}

}  // TEST_SUITE
