#include "thetapos/flags.hpp"

#include "thetapos/error.hpp"
#include "thetapos/linalg.hpp"

namespace thetapos {

namespace {

void require_same_dim(const Flag& a, const Flag& b) {
  if (a.dim() != b.dim()) fail(ErrorKind::Dimension, "flags of different dimension");
}

Matrix conjugate_by_signs(const Matrix& u, const std::vector<int>& d) {
  Matrix out = u;
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j)
      if (d[i] * d[j] < 0) out(i, j) = -out(i, j);
  return out;
}

std::vector<std::vector<int>> sign_classes(std::size_t n) {
  std::vector<std::vector<int>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = (mask >> i) & 1U ? -1 : 1;
    out.push_back(std::move(d));
  }
  return out;
}

bool orientation_allows(Orientation o, const std::vector<int>& d, const Rational& det_g) {
  if (o == Orientation::GL) return true;
  int s = det_g.sign();
  for (int x : d) s *= x;
  return s > 0;
}

Matrix apply_signs(const std::vector<int>& d, const Matrix& g) {
  Matrix out = g;
  for (std::size_t i = 0; i < g.rows(); ++i)
    if (d[i] < 0)
      for (std::size_t j = 0; j < g.cols(); ++j) out(i, j) = -out(i, j);
  return out;
}

}  // namespace

Matrix canonical_flag_basis(const Matrix& basis) {
  Matrix out(basis.rows(), basis.cols());
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < basis.cols(); ++i) {
    Vector c = basis.col(i);
    for (std::size_t j = 0; j < i; ++j) {
      const Rational f = c[pivots[j]];
      if (f.is_zero()) continue;
      for (std::size_t r = 0; r < c.size(); ++r) c[r] -= f * out(r, j);
    }
    std::size_t p = 0;
    while (p < c.size() && c[p].is_zero()) ++p;
    if (p == c.size()) fail(ErrorKind::Domain, "flag basis columns are linearly dependent");
    const Rational inv = Rational(1) / c[p];
    for (std::size_t r = 0; r < c.size(); ++r) out(r, i) = c[r] * inv;
    pivots.push_back(p);
  }
  return out;
}

Flag Flag::from_basis(const Matrix& basis) {
  if (!basis.is_square() || basis.rows() == 0) fail(ErrorKind::Domain, "flag basis must be square");
  return Flag(canonical_flag_basis(basis));
}

StandardFlags StandardFlags::of(std::size_t n) {
  Matrix e(n, n);
  for (std::size_t i = 0; i < n; ++i) e(n - 1 - i, i) = 1;
  return {Flag::from_basis(e), Flag::from_basis(Matrix::identity(n))};
}

bool is_transverse(const Flag& f1, const Flag& f2) {
  require_same_dim(f1, f2);
  const std::size_t n = f1.dim();
  for (std::size_t i = 1; i < n; ++i) {
    if (rank(hconcat(f1.subspace(i), f2.subspace(n - i))) != n) return false;
  }
  return true;
}

UnipotentUpper unipotent_coordinate(const Flag& t, const StandardFlags& std_flags) {
  require_same_dim(t, std_flags.F);
  const std::size_t n = t.dim();
  Matrix u(n, n);
  for (std::size_t k = n; k-- > 0;) {
    const std::size_t i = n - k;
    const Matrix b = t.subspace(i);
    const Matrix bottom = b.block(k, 0, i, i);
    if (det(bottom).is_zero()) {
      fail(ErrorKind::Transversality, "flag is not transverse to the standard flag F");
    }
    Matrix rhs(i, 1);
    rhs(0, 0) = 1;
    const Matrix col = b * solve(bottom, rhs);
    for (std::size_t r = 0; r < n; ++r) u(r, k) = col(r, 0);
  }
  return UnipotentUpper::make(std::move(u));
}

bool is_positive_triple_standard(const Flag& t, const StandardFlags& std_flags) {
  return is_unipotent_positive(unipotent_coordinate(t, std_flags));
}

Matrix normalize_pair(const Flag& f1, const Flag& f2) {
  if (!is_transverse(f1, f2)) fail(ErrorKind::Transversality, "normalize_pair: flags not transverse");
  const std::size_t n = f1.dim();
  Matrix h(n, n);
  for (std::size_t i = 1; i <= n; ++i) {
    const Matrix a = f2.subspace(i);
    const Matrix b = f1.subspace(n - i + 1);
    const Matrix kernel = null_space(hconcat(a, -b));
    if (kernel.cols() != 1) {
      fail(ErrorKind::Transversality, "normalize_pair: adapted line is not unique");
    }
    const Matrix v = a * kernel.block(0, 0, i, 1);
    h.set_block(0, i - 1, v);
  }
  return inverse(h);
}

std::optional<TripleCertificate> certify_positive_triple(const Flag& f1, const Flag& t,
                                                         const Flag& f3, Orientation orientation) {
  require_same_dim(f1, t);
  if (!is_transverse(f1, f3)) {
    fail(ErrorKind::Transversality, "positive triple: outer flags are not transverse");
  }
  if (!is_transverse(t, f1)) {
    fail(ErrorKind::Transversality, "positive triple: middle flag not transverse to the first");
  }
  const Matrix g = normalize_pair(f1, f3);
  const auto std_flags = StandardFlags::of(f1.dim());
  const Flag moved = g * t;
  if (!is_transverse(moved, std_flags.F)) return std::nullopt;
  const UnipotentUpper u = unipotent_coordinate(moved, std_flags);
  const Rational det_g = det(g);
  for (const auto& d : sign_classes(f1.dim())) {
    if (!orientation_allows(orientation, d, det_g)) continue;
    auto conj = UnipotentUpper::make(conjugate_by_signs(u.matrix(), d));
    if (is_unipotent_positive(conj)) {
      return TripleCertificate{apply_signs(d, g), d, std::move(conj)};
    }
  }
  return std::nullopt;
}

bool is_positive_triple(const Flag& f1, const Flag& t, const Flag& f3, Orientation orientation) {
  return certify_positive_triple(f1, t, f3, orientation).has_value();
}

bool is_positive_quadruple(const Flag& f1, const Flag& s, const Flag& s2, const Flag& f4,
                           Orientation orientation) {
  if (!is_positive_triple(f1, s, f4, orientation)) return false;
  if (!is_transverse(s2, s)) return false;
  if (!is_positive_triple(s, s2, f4, orientation)) return false;

  const Matrix g = normalize_pair(f1, f4);
  const auto std_flags = StandardFlags::of(f1.dim());
  const Flag ms = g * s;
  const Flag ms2 = g * s2;
  if (!is_transverse(ms2, std_flags.F)) return false;
  const UnipotentUpper us = unipotent_coordinate(ms, std_flags);
  const UnipotentUpper us2 = unipotent_coordinate(ms2, std_flags);
  const Rational det_g = det(g);
  for (const auto& d : sign_classes(f1.dim())) {
    if (!orientation_allows(orientation, d, det_g)) continue;
    const auto a = UnipotentUpper::make(conjugate_by_signs(us.matrix(), d));
    if (!is_unipotent_positive(a)) continue;
    const auto b = UnipotentUpper::make(conjugate_by_signs(us2.matrix(), d));
    if (is_unipotent_positive(a.inverse() * b)) return true;
  }
  return false;
}

}  // namespace thetapos
