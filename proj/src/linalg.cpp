#include "thetapos/linalg.hpp"

#include <algorithm>
#include <utility>

#include "thetapos/error.hpp"

namespace thetapos {

namespace {

void require_square(const Matrix& m, const char* op) {
  if (!m.is_square()) fail(ErrorKind::Dimension, std::string(op) + ": matrix is not square");
}

// Rows scaled by the lcm of their denominators, so every entry is an integer.
// Returns the integer matrix and the product of the scale factors.
std::pair<std::vector<std::vector<mpz_class>>, mpz_class> integer_rows(const Matrix& m) {
  std::vector<std::vector<mpz_class>> out(m.rows(), std::vector<mpz_class>(m.cols()));
  mpz_class total = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_class d = m(i, j).denominator();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out[i][j] = m(i, j).numerator() * (l / m(i, j).denominator());
    }
    total *= l;
  }
  return {std::move(out), total};
}

// In-place Bareiss elimination with row pivoting. Returns the rank; when the
// matrix is square and of full rank, *det_out receives the integer determinant.
std::size_t bareiss(std::vector<std::vector<mpz_class>>& a, std::size_t cols,
                    mpz_class* det_out) {
  const std::size_t rows = a.size();
  mpz_class prev = 1;
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  if (det_out != nullptr) *det_out = (r == rows && rows == cols) ? mpz_class(sign * prev) : 0;
  return r;
}

Rational cofactor_det(const Matrix& m) {
  switch (m.rows()) {
    case 0: return 1;
    case 1: return m(0, 0);
    case 2: return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    default: break;
  }
  Rational acc;
  for (std::size_t j = 0; j < 3; ++j) {
    const std::size_t j1 = (j + 1) % 3, j2 = (j + 2) % 3;
    acc += m(0, j) * (m(1, j1) * m(2, j2) - m(1, j2) * m(2, j1));
  }
  return acc;
}

void check_index_set(std::span<const std::size_t> idx, std::size_t bound, const char* what) {
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] >= bound) fail(ErrorKind::Index, std::string(what) + " index out of range");
    if (k > 0 && idx[k] <= idx[k - 1]) {
      fail(ErrorKind::Index, std::string(what) + " indices not strictly increasing");
    }
  }
}

// Gauss-Jordan to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const Rational inv = Rational(1) / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Rational det(const Matrix& m) {
  require_square(m, "det");
  if (m.rows() <= 3) return cofactor_det(m);
  auto [ints, scale] = integer_rows(m);
  mpz_class d;
  bareiss(ints, m.cols(), &d);
  return Rational(d, scale);
}

Rational minor(const Matrix& m, std::span<const std::size_t> rows,
               std::span<const std::size_t> cols) {
  if (rows.empty() || rows.size() != cols.size()) {
    fail(ErrorKind::Index, "minor: index sets must be nonempty and of equal size");
  }
  check_index_set(rows, m.rows(), "row");
  check_index_set(cols, m.cols(), "column");
  return det(m.select(rows, cols));
}

std::size_t rank(const Matrix& m) {
  auto ints = integer_rows(m).first;
  return bareiss(ints, m.cols(), nullptr);
}

Matrix column_echelon(const Matrix& m) {
  Matrix t = m.transpose();
  const auto pivots = rref(t);
  return t.block(0, 0, pivots.size(), t.cols()).transpose();
}

Polynomial char_poly(const Matrix& m) {
  require_square(m, "char_poly");
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    Matrix am = m * mk;
    Rational tr;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return Polynomial(std::move(c));
}

Matrix inverse(const Matrix& m) {
  require_square(m, "inverse");
  return solve(m, Matrix::identity(m.rows()));
}

Matrix solve(const Matrix& a, const Matrix& b) {
  require_square(a, "solve");
  if (b.rows() != a.rows()) fail(ErrorKind::Dimension, "solve: right-hand side row mismatch");
  Matrix aug = hconcat(a, b);
  const auto pivots = rref(aug);
  if (pivots.size() < a.rows() || pivots.back() >= a.cols()) {
    fail(ErrorKind::Singular, "solve: matrix is singular");
  }
  return aug.block(0, a.cols(), a.rows(), b.cols());
}

Matrix null_space(const Matrix& m) {
  Matrix a = m;
  const auto pivots = rref(a);
  std::vector<std::size_t> free;
  for (std::size_t c = 0, p = 0; c < m.cols(); ++c) {
    if (p < pivots.size() && pivots[p] == c) {
      ++p;
    } else {
      free.push_back(c);
    }
  }
  Matrix basis(m.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -a(r, free[k]);
  }
  return basis;
}

Inertia inertia(const Matrix& symmetric) {
  if (!symmetric.is_symmetric()) fail(ErrorKind::Domain, "inertia: matrix is not symmetric");
  Matrix a = symmetric;
  const std::size_t n = a.rows();
  Inertia out;
  // Symmetric elimination on the trailing block [k, n).
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, p).is_zero()) ++p;
    if (p == n) {
      // No nonzero diagonal: combine with an off-diagonal partner, x_k += x_j
      // makes the (k,k) entry 2 a(k,j).
      std::size_t i = n, j = n;
      for (std::size_t r = k; r < n && i == n; ++r)
        for (std::size_t s = r + 1; s < n; ++s)
          if (!a(r, s).is_zero()) { i = r; j = s; break; }
      if (i == n) {
        out.zero += n - k;
        break;
      }
      for (std::size_t c = 0; c < n; ++c) a(i, c) += a(j, c);
      for (std::size_t r = 0; r < n; ++r) a(r, i) += a(r, j);
      p = i;
    }
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(k, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(a(r, p), a(r, k));
    }
    const Rational pivot = a(k, k);
    (pivot.sign() > 0 ? out.positive : out.negative) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Rational f = a(i, k) / pivot;
      for (std::size_t c = k; c < n; ++c) a(i, c) -= f * a(k, c);
      for (std::size_t r = k; r < n; ++r) a(r, i) = a(i, r);
    }
  }
  return out;
}

}  // namespace thetapos
