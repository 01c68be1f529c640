#pragma once

// Reference computations that share no code with the library algorithms they
// check: Leibniz determinants, brute-force minor enumeration and Descartes
// counting for real-rooted polynomials.

#include <functional>
#include <algorithm>
#include <numeric>
#include <vector>

#include "thetapos/matrix.hpp"
#include "thetapos/polynomial.hpp"

namespace oracle {

using thetapos::Matrix;
using thetapos::Rational;

inline int permutation_sign(const std::vector<std::size_t>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

inline Rational leibniz_det(const Matrix& m) {
  std::vector<std::size_t> p(m.rows());
  std::iota(p.begin(), p.end(), 0);
  Rational total;
  do {
    Rational term(permutation_sign(p));
    for (std::size_t i = 0; i < p.size(); ++i) term *= m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// Plain Gaussian elimination over the rationals with row swaps.
inline Rational gauss_det(Matrix m) {
  const std::size_t n = m.rows();
  Rational d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      const Rational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return d;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

inline bool all_minors_positive(const Matrix& m) {
  for (std::size_t k = 1; k <= m.rows(); ++k)
    for (const auto& r : subsets(m.rows(), k))
      for (const auto& c : subsets(m.cols(), k))
        if (leibniz_det(m.select(r, c)).sign() <= 0) return false;
  return true;
}

/// Largest k with a nonzero k x k minor.
inline std::size_t brute_rank(const Matrix& m) {
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k)
    for (const auto& r : subsets(m.rows(), k))
      for (const auto& c : subsets(m.cols(), k))
        if (!leibniz_det(m.select(r, c)).is_zero()) return k;
  return 0;
}

inline std::size_t sign_changes(const std::vector<Rational>& c) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& x : c) {
    if (x.is_zero()) continue;
    if (last != 0 && x.sign() != last) ++changes;
    last = x.sign();
  }
  return changes;
}

/// Signature of a symmetric matrix from det(xI - S) computed by elimination at
/// n+1 points and Lagrange interpolation, then Descartes' rule (exact because
/// the characteristic polynomial of a symmetric matrix is real-rooted).
inline long descartes_signature(const Matrix& s) {
  const std::size_t n = s.rows();
  std::vector<Rational> coeffs(n + 1);
  // Lagrange interpolation on x = 0..n into the monomial basis.
  for (std::size_t i = 0; i <= n; ++i) {
    Matrix shifted = Matrix::identity(n) * Rational(static_cast<long>(i)) - s;
    const Rational yi = gauss_det(shifted);
    std::vector<Rational> basis{Rational(1)};
    Rational denom(1);
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * Rational(static_cast<long>(j));
      }
      basis = next;
      denom *= Rational(static_cast<long>(i) - static_cast<long>(j));
    }
    for (std::size_t k = 0; k <= n; ++k) coeffs[k] += yi * basis[k] / denom;
  }
  std::vector<Rational> neg = coeffs;
  for (std::size_t k = 1; k < neg.size(); k += 2) neg[k] = -neg[k];
  return static_cast<long>(sign_changes(coeffs)) - static_cast<long>(sign_changes(neg));
}

}  // namespace oracle
