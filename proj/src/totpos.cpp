#include "thetapos/totpos.hpp"

#include <functional>

#include "thetapos/error.hpp"
#include "thetapos/linalg.hpp"
#include "thetapos/roots.hpp"

namespace thetapos {

namespace {

// Calls f on every k-subset of {0..n-1} in lexicographic order until f
// returns false.
bool for_each_subset(std::size_t n, std::size_t k,
                     const std::function<bool(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!f(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void require_minor_size(const Matrix& m, const char* op) {
  if (!m.is_square()) fail(ErrorKind::Dimension, std::string(op) + ": matrix is not square");
  if (m.rows() > kMaxMinorSize) {
    fail(ErrorKind::Limit, std::string(op) + ": exhaustive minors limited to n <= " +
                               std::to_string(kMaxMinorSize));
  }
}

bool unforced(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  for (std::size_t l = 0; l < rows.size(); ++l)
    if (rows[l] > cols[l]) return false;
  return true;
}

// Conjugation by diag(1,-1,1,...) maps u_i(-t) to u_i(t).
Matrix alternate_signs(const Matrix& m) {
  Matrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if ((i + j) % 2 == 1) out(i, j) = -out(i, j);
  return out;
}

bool in_cone(const Rational& t, Cone cone) {
  return cone == Cone::Positive ? t.sign() > 0 : t.sign() < 0;
}

}  // namespace

UnipotentUpper UnipotentUpper::make(Matrix m) {
  if (!m.is_upper_unitriangular()) {
    fail(ErrorKind::Domain, "matrix is not unit upper triangular");
  }
  return UnipotentUpper(std::move(m));
}

UnipotentUpper UnipotentUpper::inverse() const {
  // Back substitution stays unit upper triangular.
  const std::size_t n = size();
  Matrix inv = Matrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = j; i-- > 0;) {
      Rational s;
      for (std::size_t k = i + 1; k <= j; ++k) s += m_(i, k) * inv(k, j);
      inv(i, j) = -s;
    }
  }
  return UnipotentUpper(std::move(inv));
}

UnipotentUpper elementary_u(int i, const Rational& t, std::size_t n) {
  if (i < 1 || static_cast<std::size_t>(i) >= n) {
    fail(ErrorKind::Index, "elementary_u: index " + std::to_string(i) + " out of range for n=" +
                               std::to_string(n));
  }
  Matrix m = Matrix::identity(n);
  m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i)) = t;
  return UnipotentUpper::make(std::move(m));
}

std::optional<MinorWitness> nonpositive_minor(const Matrix& m) {
  require_minor_size(m, "is_totally_positive");
  std::optional<MinorWitness> witness;
  const std::size_t n = m.rows();
  for (std::size_t k = 1; k <= n && !witness; ++k) {
    for_each_subset(n, k, [&](const std::vector<std::size_t>& rows) {
      return for_each_subset(n, k, [&](const std::vector<std::size_t>& cols) {
        Rational v = minor(m, rows, cols);
        if (v.sign() > 0) return true;
        witness = MinorWitness{rows, cols, std::move(v)};
        return false;
      });
    });
  }
  return witness;
}

bool is_totally_positive(const Matrix& m) { return !nonpositive_minor(m).has_value(); }

std::optional<MinorWitness> nonpositive_unforced_minor(const UnipotentUpper& u, Cone cone) {
  const Matrix m = cone == Cone::Positive ? u.matrix() : alternate_signs(u.matrix());
  require_minor_size(m, "is_unipotent_positive");
  std::optional<MinorWitness> witness;
  const std::size_t n = m.rows();
  for (std::size_t k = 1; k <= n && !witness; ++k) {
    for_each_subset(n, k, [&](const std::vector<std::size_t>& rows) {
      return for_each_subset(n, k, [&](const std::vector<std::size_t>& cols) {
        if (!unforced(rows, cols)) return true;
        // Minors with rows == cols are principal minors of a unitriangular
        // matrix, identically 1; the remaining unforced ones carry information.
        Rational v = minor(m, rows, cols);
        if (v.sign() > 0) return true;
        witness = MinorWitness{rows, cols, std::move(v)};
        return false;
      });
    });
  }
  return witness;
}

bool is_unipotent_positive(const UnipotentUpper& u, Cone cone) {
  return !nonpositive_unforced_minor(u, cone).has_value();
}

UnipotentUpper param_F(const PositiveParams& p, std::size_t n, Cone cone) {
  if (p.word.size() != p.values.size()) {
    fail(ErrorKind::Dimension, "param_F: word and value counts differ");
  }
  const auto sys = CoxeterSystem::type_a(n);
  if (!is_reduced(sys, p.word)) {
    fail(ErrorKind::Domain, "param_F: word " + word_to_string(p.word) + " is not reduced in S_" +
                                std::to_string(n));
  }
  UnipotentUpper u = UnipotentUpper::identity(n);
  for (std::size_t k = 0; k < p.word.size(); ++k) {
    const Rational t = cone == Cone::Positive ? p.values[k] : -p.values[k];
    u = u * elementary_u(p.word[k], t, n);
  }
  return u;
}

std::tuple<Rational, Rational, Rational> sl3_transition(const Rational& a, const Rational& b,
                                                         const Rational& c) {
  const Rational s = a + c;
  if (s.is_zero()) fail(ErrorKind::Singular, "sl3_transition: a + c = 0");
  return {b * c / s, s, a * b / s};
}

PositiveParams word_transition(const PositiveParams& p, const Word& target, std::size_t n,
                               Cone cone) {
  if (p.word.size() != p.values.size()) {
    fail(ErrorKind::Dimension, "word_transition: word and value counts differ");
  }
  for (const auto& t : p.values) {
    if (!in_cone(t, cone)) {
      fail(ErrorKind::Domain, "word_transition: parameter " + t.to_string() + " outside the cone");
    }
  }
  const auto sys = CoxeterSystem::type_a(n);
  const auto from = ReducedWord::make(sys, p.word);
  const auto to = ReducedWord::make(sys, target);
  PositiveParams cur = p;
  for (const auto& mv : braid_move_path(sys, from, to)) {
    const std::size_t k = mv.position;
    if (mv.m == 2) {
      std::swap(cur.values[k], cur.values[k + 1]);
    } else {
      // The mirrored cone is the image under t -> -t, and the transition map
      // is odd in all three arguments, so it applies unchanged.
      auto [c2, b2, a2] = sl3_transition(cur.values[k], cur.values[k + 1], cur.values[k + 2]);
      cur.values[k] = c2;
      cur.values[k + 1] = b2;
      cur.values[k + 2] = a2;
    }
    cur.word = apply_braid_move(sys, cur.word, mv);
  }
  return cur;
}

WhitneyFactors whitney_factor(const Matrix& g) {
  if (!g.is_square()) fail(ErrorKind::Dimension, "whitney_factor: matrix is not square");
  const std::size_t n = g.rows();
  Matrix lower = Matrix::identity(n);
  Matrix work = g;
  for (std::size_t k = 0; k < n; ++k) {
    if (work(k, k).is_zero()) {
      fail(ErrorKind::Decomposition, "whitney_factor: leading principal minor of order " +
                                         std::to_string(k + 1) + " vanishes");
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = work(i, k) / work(k, k);
      lower(i, k) = f;
      for (std::size_t j = k; j < n; ++j) work(i, j) -= f * work(k, j);
    }
  }
  Matrix diag(n, n);
  Matrix upper = work;
  for (std::size_t i = 0; i < n; ++i) {
    diag(i, i) = work(i, i);
    const Rational inv = Rational(1) / work(i, i);
    for (std::size_t j = i; j < n; ++j) upper(i, j) *= inv;
  }
  return {std::move(lower), std::move(diag), UnipotentUpper::make(std::move(upper))};
}

bool proximality_check(const Matrix& g) {
  if (!g.is_square()) fail(ErrorKind::Dimension, "proximality_check: matrix is not square");
  const Polynomial p = char_poly(g);
  const auto roots = isolate_real_roots(p);
  if (roots.size() != g.rows()) return false;
  for (const auto& r : roots)
    if (r.multiplicity != 1) return false;
  if (p(Rational(0)).is_zero()) return false;
  const Rational bound = cauchy_bound(p);
  const std::size_t positive = count_distinct_roots(p, Rational(0), bound);
  return positive == g.rows() || positive == 0;
}

}  // namespace thetapos
