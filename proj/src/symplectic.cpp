#include "thetapos/symplectic.hpp"

#include "thetapos/error.hpp"
#include "thetapos/linalg.hpp"

namespace thetapos {

namespace {

void require_symmetric(const Matrix& m, const char* op) {
  if (!m.is_symmetric()) fail(ErrorKind::Domain, std::string(op) + ": matrix is not symmetric");
}

void require_same_space(const Lagrangian& a, const Lagrangian& b) {
  if (a.basis().rows() != b.basis().rows()) {
    fail(ErrorKind::Dimension, "Lagrangians live in different spaces");
  }
}

}  // namespace

SymplecticSpace SymplecticSpace::of(std::size_t n) {
  if (n == 0) fail(ErrorKind::Dimension, "symplectic rank must be positive");
  Matrix w(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    w(i, n + i) = 1;
    w(n + i, i) = -1;
  }
  return SymplecticSpace(n, std::move(w));
}

Rational SymplecticSpace::omega(std::span<const Rational> x, std::span<const Rational> y) const {
  return dot(x, form_ * y);
}

bool SymplecticSpace::is_symplectic(const Matrix& g) const {
  if (g.rows() != 2 * n_ || g.cols() != 2 * n_) return false;
  return g.transpose() * form_ * g == form_;
}

Matrix SymplecticSpace::l_e() const {
  Matrix b(2 * n_, n_);
  b.set_block(0, 0, Matrix::identity(n_));
  return b;
}

Matrix SymplecticSpace::l_f() const {
  Matrix b(2 * n_, n_);
  b.set_block(n_, 0, Matrix::identity(n_));
  return b;
}

bool is_lagrangian(const SymplecticSpace& space, const Matrix& basis) {
  if (basis.rows() != 2 * space.n() || basis.cols() != space.n()) {
    fail(ErrorKind::Dimension, "Lagrangian basis must be 2n x n");
  }
  return rank(basis) == space.n() && (basis.transpose() * space.form() * basis).is_zero();
}

Lagrangian Lagrangian::from_basis(const SymplecticSpace& space, const Matrix& basis) {
  if (!is_lagrangian(space, basis)) fail(ErrorKind::Domain, "subspace is not Lagrangian");
  return Lagrangian(column_echelon(basis));
}

Lagrangian apply(const SymplecticSpace& space, const Matrix& g, const Lagrangian& l) {
  return Lagrangian::from_basis(space, g * l.basis());
}

bool is_transverse(const Lagrangian& a, const Lagrangian& b) {
  require_same_space(a, b);
  return rank(hconcat(a.basis(), b.basis())) == a.basis().rows();
}

bool is_pos_def(const Matrix& sym) {
  require_symmetric(sym, "is_pos_def");
  for (std::size_t k = 1; k <= sym.rows(); ++k) {
    if (det(sym.block(0, 0, k, k)).sign() <= 0) return false;
  }
  return true;
}

Matrix v_elem(const Matrix& m) {
  require_symmetric(m, "v_elem");
  const std::size_t n = m.rows();
  Matrix g = Matrix::identity(2 * n);
  g.set_block(n, 0, m);
  return g;
}

Matrix w_elem(const Matrix& n_block) {
  require_symmetric(n_block, "w_elem");
  const std::size_t n = n_block.rows();
  Matrix g = Matrix::identity(2 * n);
  g.set_block(0, n, n_block);
  return g;
}

Matrix h_elem(const Matrix& a) {
  if (!a.is_square()) fail(ErrorKind::Dimension, "h_elem: matrix is not square");
  const std::size_t n = a.rows();
  Matrix g(2 * n, 2 * n);
  g.set_block(0, 0, a);
  g.set_block(n, n, inverse(a).transpose());
  return g;
}

Matrix lag_coordinate(const Lagrangian& t, const SymplecticSpace& space) {
  const std::size_t n = space.n();
  const Matrix top = t.basis().block(0, 0, n, n);
  if (det(top).is_zero()) {
    fail(ErrorKind::Transversality, "Lagrangian is not transverse to L_F");
  }
  return t.basis().block(n, 0, n, n) * inverse(top);
}

Matrix symplectic_normalizer(const SymplecticSpace& space, const Lagrangian& l1,
                             const Lagrangian& l3) {
  if (!is_transverse(l1, l3)) {
    fail(ErrorKind::Transversality, "symplectic_normalizer: Lagrangians not transverse");
  }
  // e'_i = columns of l1, f'_j = l3 C with omega(e'_i, f'_j) = delta_ij.
  const Matrix& a = l1.basis();
  const Matrix& b = l3.basis();
  const Matrix pairing = a.transpose() * space.form() * b;
  const Matrix h = hconcat(a, b * inverse(pairing));
  return inverse(h);
}

bool is_positive_lag_triple(const SymplecticSpace& space, const Lagrangian& l1,
                            const Lagrangian& l2, const Lagrangian& l3) {
  if (!is_transverse(l1, l2) || !is_transverse(l2, l3)) {
    fail(ErrorKind::Transversality, "positive triple: middle Lagrangian not transverse");
  }
  const Matrix g = symplectic_normalizer(space, l1, l3);
  return is_pos_def(lag_coordinate(apply(space, g, l2), space));
}

Matrix kashiwara_form(const SymplecticSpace& space, const Lagrangian& l1, const Lagrangian& l2,
                      const Lagrangian& l3) {
  require_same_space(l1, l2);
  require_same_space(l1, l3);
  const std::size_t n = space.n();
  const Matrix* b[3] = {&l1.basis(), &l2.basis(), &l3.basis()};
  Matrix s(3 * n, 3 * n);
  // q = x1^T B1^T w B2 x2 + x2^T B2^T w B3 x3 + x3^T B3^T w B1 x1; each cross
  // term (i, i+1 mod 3) contributes the block and its transpose.
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3;
    const Matrix blk = b[i]->transpose() * space.form() * *b[j];
    s.set_block(i * n, j * n, blk);
    s.set_block(j * n, i * n, blk.transpose());
  }
  return s;
}

long maslov_index(const SymplecticSpace& space, const Lagrangian& l1, const Lagrangian& l2,
                  const Lagrangian& l3) {
  return inertia(kashiwara_form(space, l1, l2, l3)).signature();
}

std::optional<SpFactorization> factor_sp_positive(const SymplecticSpace& space, const Matrix& g) {
  if (!space.is_symplectic(g)) return std::nullopt;
  const std::size_t n = space.n();
  // [[A, A N], [M A, M A N + A^{-T}]]
  const Matrix a = g.block(0, 0, n, n);
  if (det(a).sign() <= 0) return std::nullopt;
  const Matrix a_inv = inverse(a);
  const Matrix nn = a_inv * g.block(0, n, n, n);
  const Matrix m = g.block(n, 0, n, n) * a_inv;
  if (!m.is_symmetric() || !nn.is_symmetric()) return std::nullopt;
  if (!is_pos_def(m) || !is_pos_def(nn)) return std::nullopt;
  if (v_elem(m) * h_elem(a) * w_elem(nn) != g) return std::nullopt;
  return SpFactorization{m, a, nn};
}

SpProduct sp_semigroup_product(const SymplecticSpace& space, const std::vector<SpFactor>& factors) {
  const std::size_t n = space.n();
  Matrix g = Matrix::identity(2 * n);
  for (const auto& f : factors) {
    if (f.block.rows() != n || f.block.cols() != n) {
      fail(ErrorKind::Dimension, "semigroup factor block must be n x n");
    }
    switch (f.kind) {
      case SpFactor::Kind::V:
        if (!is_pos_def(f.block)) fail(ErrorKind::Domain, "V factor is not positive definite");
        g = g * v_elem(f.block);
        break;
      case SpFactor::Kind::W:
        if (!is_pos_def(f.block)) fail(ErrorKind::Domain, "W factor is not positive definite");
        g = g * w_elem(f.block);
        break;
      case SpFactor::Kind::H:
        if (det(f.block).sign() <= 0) fail(ErrorKind::Domain, "H factor has det <= 0");
        g = g * h_elem(f.block);
        break;
    }
  }
  auto cert = factor_sp_positive(space, g);
  return {std::move(g), std::move(cert)};
}

}  // namespace thetapos
