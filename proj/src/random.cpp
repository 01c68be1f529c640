#include "thetapos/random.hpp"

#include "thetapos/error.hpp"

namespace thetapos {

long Rng::integer(long lo, long hi) {
  if (hi < lo) fail(ErrorKind::Domain, "empty integer range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span);
  std::uint64_t r = 0;
  do {
    r = engine_();
  } while (r >= limit);
  return lo + static_cast<long>(r % span);
}

Rational Rng::positive() { return Rational(integer(1, 30), integer(1, 12)); }

Rational Rng::nonzero() {
  const Rational p = positive();
  return coin() ? p : -p;
}

Rational Rng::any() { return Rational(integer(-30, 30), integer(1, 12)); }

PositiveParams sample_positive_params(Rng& rng, const Word& word) {
  PositiveParams p{word, {}};
  for (std::size_t i = 0; i < word.size(); ++i) p.values.push_back(rng.positive());
  return p;
}

UnipotentUpper sample_positive_unipotent(Rng& rng, std::size_t n) {
  const ReducedWord w0 = longest_word(CoxeterSystem::type_a(n));
  return param_F(sample_positive_params(rng, w0.letters()), n);
}

Matrix sample_tp_matrix(Rng& rng, std::size_t n) {
  const Matrix upper = sample_positive_unipotent(rng, n).matrix();
  const Matrix lower = sample_positive_unipotent(rng, n).matrix().transpose();
  Vector d(n);
  for (auto& x : d) x = rng.positive();
  return lower * Matrix::diagonal(d) * upper;
}

Matrix sample_symmetric(Rng& rng, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = rng.any();
  return m;
}

namespace {

Matrix unit_lower(Rng& rng, std::size_t n) {
  Matrix l = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) l(i, j) = rng.any();
  return l;
}

}  // namespace

Matrix sample_pos_def(Rng& rng, std::size_t n) {
  const Matrix l = unit_lower(rng, n);
  Vector d(n);
  for (auto& x : d) x = rng.positive();
  return l * Matrix::diagonal(d) * l.transpose();
}

Matrix sample_invertible(Rng& rng, std::size_t n) {
  Vector d(n);
  for (auto& x : d) x = rng.nonzero();
  return unit_lower(rng, n) * Matrix::diagonal(d) * unit_lower(rng, n).transpose();
}

Matrix sample_symplectic(Rng& rng, const SymplecticSpace& space) {
  const std::size_t n = space.n();
  return v_elem(sample_symmetric(rng, n)) * h_elem(sample_invertible(rng, n)) *
         w_elem(sample_symmetric(rng, n)) * v_elem(sample_symmetric(rng, n));
}

Lagrangian sample_lagrangian(Rng& rng, const SymplecticSpace& space) {
  return Lagrangian::from_basis(space, sample_symplectic(rng, space) * space.l_e());
}

Vector sample_cone_vector(Rng& rng, const QFormConfig& cfg) {
  const std::size_t m = cfg.cone_dim();
  Vector v(m);
  v[0] = rng.positive();
  Rational half_sq;
  for (std::size_t i = 1; i + 1 < m; ++i) {
    v[i] = rng.any();
    half_sq += v[i] * v[i] / Rational(2);
  }
  // q_J(v) = v_1 v_last - |middle|^2 / 2
  v[m - 1] = (half_sq + rng.positive()) / v[0];
  return v;
}

Vector sample_closed_cone_vector(Rng& rng, const QFormConfig& cfg) {
  switch (rng.integer(0, 3)) {
    case 0:
      return Vector(cfg.cone_dim());
    case 1: {
      // on the light cone: q_J = 0 with v_1 > 0
      Vector v = sample_cone_vector(rng, cfg);
      v[cfg.cone_dim() - 1] -= qJ(cfg, v) / v[0];
      return v;
    }
    default:
      return sample_cone_vector(rng, cfg);
  }
}

B2Params sample_interior_b2(Rng& rng, const QFormConfig& cfg, const Word& word) {
  B2Params p{word, {}};
  for (int letter : word) {
    if (letter == 1)
      p.slots.emplace_back(rng.positive());
    else
      p.slots.emplace_back(sample_cone_vector(rng, cfg));
  }
  return p;
}

}  // namespace thetapos
