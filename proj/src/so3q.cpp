#include "thetapos/so3q.hpp"

#include "thetapos/error.hpp"
#include "thetapos/flags.hpp"
#include "thetapos/linalg.hpp"

namespace thetapos {

namespace {

void require_len(const QFormConfig& cfg, const Vector& v, const char* what) {
  if (v.size() != cfg.cone_dim())
    fail(ErrorKind::Dimension, std::string(what) + ": expected a vector of length " +
                                   std::to_string(cfg.cone_dim()));
}

Vector j_times(const QFormConfig& cfg, const Vector& v) { return cfg.J() * v; }

const Word kW1212{1, 2, 1, 2};
const Word kW2121{2, 1, 2, 1};

void require_longest(const Word& w) {
  if (w != kW1212 && w != kW2121)
    fail(ErrorKind::Domain, "word must be (1,2,1,2) or (2,1,2,1), got " + word_to_string(w));
}

bool positive(const Rational& r) { return r.sign() > 0; }

}  // namespace

QFormConfig QFormConfig::make(int q) {
  if (q < kMinQ || q > kMaxQ)
    fail(ErrorKind::Domain, "q must lie in [" + std::to_string(kMinQ) + ", " +
                                std::to_string(kMaxQ) + "], got " + std::to_string(q));
  const std::size_t m = static_cast<std::size_t>(q) - 1;
  const std::size_t n = static_cast<std::size_t>(q) + 3;
  Matrix J(m, m);
  J(0, m - 1) = 1;
  J(m - 1, 0) = 1;
  for (std::size_t i = 1; i + 1 < m; ++i) J(i, i) = -1;
  Matrix Q(n, n);
  // K = [[0, 1], [-1, 0]] in the top right corner, -K bottom left.
  Q(0, n - 1) = 1;
  Q(1, n - 2) = -1;
  Q(n - 2, 1) = -1;
  Q(n - 1, 0) = 1;
  Q.set_block(2, 2, J);
  return QFormConfig(q, std::move(Q), std::move(J));
}

Rational bJ(const QFormConfig& cfg, const Vector& v, const Vector& w) {
  require_len(cfg, v, "bJ");
  require_len(cfg, w, "bJ");
  return dot(v, j_times(cfg, w)) / Rational(2);
}

Rational qJ(const QFormConfig& cfg, const Vector& v) { return bJ(cfg, v, v); }

bool in_cone_alpha2(const QFormConfig& cfg, const Vector& v) {
  require_len(cfg, v, "cone vector");
  return positive(qJ(cfg, v)) && positive(v.front());
}

bool in_closed_cone_alpha2(const QFormConfig& cfg, const Vector& v) {
  require_len(cfg, v, "cone vector");
  return qJ(cfg, v).sign() >= 0 && v.front().sign() >= 0 && v.back().sign() >= 0;
}

UThetaElement u_theta(const QFormConfig& cfg, const Rational& x, const Vector& v, const Vector& w,
                      const Rational& a) {
  require_len(cfg, v, "v");
  require_len(cfg, w, "w");
  const std::size_t n = cfg.dim();
  const std::size_t m = cfg.cone_dim();
  const Vector r0 = w + (x / Rational(2)) * v;
  const Vector jv = j_times(cfg, v);
  const Vector last = (x / Rational(2)) * jv - j_times(cfg, w);
  Matrix u = Matrix::identity(n);
  u(0, 1) = x;
  for (std::size_t i = 0; i < m; ++i) {
    u(0, 2 + i) = r0[i];
    u(1, 2 + i) = v[i];
    u(2 + i, n - 2) = jv[i];
    u(2 + i, n - 1) = last[i];
  }
  u(0, n - 2) = a;
  u(0, n - 1) = a * x - qJ(cfg, r0);
  u(1, n - 2) = qJ(cfg, v);
  u(1, n - 1) = a - Rational(2) * bJ(cfg, v, w);
  u(n - 2, n - 1) = x;
  return {x, v, w, a, std::move(u)};
}

UThetaElement u_theta_from_matrix(const QFormConfig& cfg, const Matrix& m) {
  const std::size_t n = cfg.dim();
  if (m.rows() != n || m.cols() != n)
    fail(ErrorKind::Dimension, "expected a " + std::to_string(n) + "x" + std::to_string(n) +
                                   " matrix for q = " + std::to_string(cfg.q()));
  const std::size_t k = cfg.cone_dim();
  const Rational x = m(0, 1);
  Vector v(k), r0(k);
  for (std::size_t i = 0; i < k; ++i) {
    v[i] = m(1, 2 + i);
    r0[i] = m(0, 2 + i);
  }
  const Vector w = r0 - (x / Rational(2)) * v;
  UThetaElement out = u_theta(cfg, x, v, w, m(0, n - 2));
  if (!(out.matrix == m)) fail(ErrorKind::Domain, "matrix is not in U_Theta");
  return out;
}

bool preserves_form(const QFormConfig& cfg, const Matrix& g) {
  if (g.rows() != cfg.dim() || g.cols() != cfg.dim()) return false;
  return g.transpose() * cfg.Q() * g == cfg.Q();
}

Matrix exp_nilpotent(const Matrix& n) {
  if (!n.is_square()) fail(ErrorKind::Dimension, "exp of a non-square matrix");
  Matrix out = Matrix::identity(n.rows());
  Matrix term = Matrix::identity(n.rows());
  for (std::size_t k = 1; k <= n.rows(); ++k) {
    term = term * n * Rational(1, static_cast<long>(k));
    if (term.is_zero()) return out;
    out += term;
  }
  if (!(term * n).is_zero()) fail(ErrorKind::Domain, "matrix is not nilpotent");
  return out;
}

Matrix alpha1_generator(const QFormConfig& cfg, const Rational& x) {
  const std::size_t n = cfg.dim();
  Matrix g(n, n);
  g(0, 1) = x;
  g(n - 2, n - 1) = x;
  return g;
}

Matrix alpha2_generator(const QFormConfig& cfg, const Vector& v) {
  require_len(cfg, v, "v");
  const std::size_t n = cfg.dim();
  const Vector jv = j_times(cfg, v);
  Matrix g(n, n);
  for (std::size_t i = 0; i < v.size(); ++i) {
    g(1, 2 + i) = v[i];
    g(2 + i, n - 2) = jv[i];
  }
  return g;
}

UThetaElement x_alpha1(const QFormConfig& cfg, const Rational& x) {
  return u_theta_from_matrix(cfg, exp_nilpotent(alpha1_generator(cfg, x)));
}

UThetaElement x_alpha2(const QFormConfig& cfg, const Vector& v) {
  return u_theta_from_matrix(cfg, exp_nilpotent(alpha2_generator(cfg, v)));
}

UThetaElement F_word(const QFormConfig& cfg, const B2Params& p) {
  const CoxeterSystem b2 = CoxeterSystem::type_b2();
  b2.check_letters(p.word);
  if (!is_reduced(b2, p.word))
    fail(ErrorKind::Domain, "word " + word_to_string(p.word) + " is not reduced in B2");
  if (p.slots.size() != p.word.size())
    fail(ErrorKind::Domain, "word has " + std::to_string(p.word.size()) + " letters but " +
                                std::to_string(p.slots.size()) + " slots were given");
  Matrix g = Matrix::identity(cfg.dim());
  for (std::size_t i = 0; i < p.word.size(); ++i) {
    if (p.word[i] == 1) {
      const auto* x = std::get_if<Rational>(&p.slots[i]);
      if (x == nullptr)
        fail(ErrorKind::Domain, "slot " + std::to_string(i) + ": letter 1 takes a scalar");
      g = g * x_alpha1(cfg, *x).matrix;
    } else {
      const auto* v = std::get_if<Vector>(&p.slots[i]);
      if (v == nullptr)
        fail(ErrorKind::Domain, "slot " + std::to_string(i) + ": letter 2 takes a vector");
      g = g * x_alpha2(cfg, *v).matrix;
    }
  }
  return u_theta_from_matrix(cfg, g);
}

B2Transition braid_transition(const QFormConfig& cfg, const Rational& x1, const Vector& v1,
                              const Rational& x2, const Vector& v2) {
  require_len(cfg, v1, "v1");
  require_len(cfg, v2, "v2");
  if (x1.sign() < 0) fail(ErrorKind::Domain, "x1 must be >= 0");
  if (!in_closed_cone_alpha2(cfg, v1)) fail(ErrorKind::Domain, "v1 must lie in the closed cone");
  if (!positive(x2)) fail(ErrorKind::Domain, "x2 must be > 0");
  if (!in_cone_alpha2(cfg, v2)) fail(ErrorKind::Domain, "v2 must lie in the open cone");

  const Vector s = v1 + v2;
  const Vector p = x1 * s + x2 * v2;
  const Rational den = x1 * qJ(cfg, s) + x2 * qJ(cfg, v2);
  const Rational num = qJ(cfg, p);
  if (den.is_zero()) fail(ErrorKind::Singular, "x1 q_J(v1+v2) + x2 q_J(v2) vanishes");
  if (num.is_zero()) fail(ErrorKind::Singular, "q_J(x1(v1+v2) + x2 v2) vanishes");
  const Rational q1 = qJ(cfg, v1);
  B2Transition out;
  out.y1 = num / den;
  out.y2 = x1 * x2 * q1 / den;
  out.w2 = (den / num) * p;
  out.w1 = (Rational(1) / num) *
           ((x1 * x2 * qJ(cfg, s) + x2 * x2 * qJ(cfg, v2)) * v1 - (x1 * x2 * q1) * s);
  return out;
}

bool is_interior(const QFormConfig& cfg, const B2Params& p) {
  for (const B2Slot& s : p.slots) {
    if (const auto* x = std::get_if<Rational>(&s)) {
      if (!positive(*x)) return false;
    } else if (!in_cone_alpha2(cfg, std::get<Vector>(s))) {
      return false;
    }
  }
  return true;
}

std::optional<B2Params> invert_F(const QFormConfig& cfg, const Matrix& u, const Word& word) {
  require_longest(word);
  u_theta_from_matrix(cfg, u);
  const std::size_t n = cfg.dim();
  const std::size_t k = cfg.cone_dim();
  const Rational X = u(0, 1);
  const Rational A = u(0, n - 2);
  Vector V(k), R(k);
  for (std::size_t i = 0; i < k; ++i) {
    V[i] = u(1, 2 + i);
    R[i] = u(0, 2 + i);
  }

  B2Params p{word, {}};
  if (word == kW1212) {
    // Row 0 gives R = X V - x2 v1 and A linear in x2 once D = -x2 v1 is known.
    const Vector D = R - X * V;
    const Rational den = A - X * qJ(cfg, V) - Rational(2) * bJ(cfg, D, V);
    if (den.is_zero()) return std::nullopt;
    const Rational x2 = qJ(cfg, D) / den;
    if (x2.is_zero()) return std::nullopt;
    const Vector v1 = (Rational(-1) / x2) * D;
    p.slots = {X - x2, v1, x2, V - v1};
  } else {
    // Row 0 gives R = y1 w2 and A = y1 q_J(w2).
    if (A.is_zero()) return std::nullopt;
    const Rational y1 = qJ(cfg, R) / A;
    if (y1.is_zero()) return std::nullopt;
    const Vector w2 = (Rational(1) / y1) * R;
    p.slots = {V - w2, y1, w2, X - y1};
  }
  if (!is_interior(cfg, p)) return std::nullopt;
  if (!(F_word(cfg, p).matrix == u)) return std::nullopt;
  return p;
}

B2Params b2_word_transition(const QFormConfig& cfg, const B2Params& p, const Word& target) {
  require_longest(p.word);
  require_longest(target);
  if (p.word == target) return p;
  if (!is_interior(cfg, p)) fail(ErrorKind::Domain, "parameters must be interior to the cones");
  if (p.word == kW1212) {
    const B2Transition t =
        braid_transition(cfg, std::get<Rational>(p.slots[0]), std::get<Vector>(p.slots[1]),
                         std::get<Rational>(p.slots[2]), std::get<Vector>(p.slots[3]));
    return {target, {t.w1, t.y1, t.w2, t.y2}};
  }
  auto inv = invert_F(cfg, F_word(cfg, p).matrix, target);
  if (!inv) fail(ErrorKind::Domain, "no interior parameters on the target word");
  return *inv;
}

UThetaElement exp_principal(const QFormConfig& cfg, const Rational& a, const Vector& w) {
  return u_theta_from_matrix(cfg,
                             exp_nilpotent(alpha1_generator(cfg, a) + alpha2_generator(cfg, w)));
}

std::vector<SubwordChart> b2_subword_charts(const Word& word) {
  require_longest(word);
  std::vector<SubwordChart> out;
  for (unsigned mask = 0; mask < 16; ++mask) {
    SubwordChart c;
    for (std::size_t i = 0; i < 4; ++i)
      if ((mask >> i) & 1U) {
        c.positions.push_back(i);
        c.letters.push_back(word[i]);
      }
    out.push_back(std::move(c));
  }
  return out;
}

IsotropicFlag IsotropicFlag::from_basis(const QFormConfig& cfg, const Matrix& basis) {
  if (basis.rows() != cfg.dim() || basis.cols() != 2)
    fail(ErrorKind::Dimension, "isotropic flag basis must be " + std::to_string(cfg.dim()) +
                                   "x2");
  if (!(basis.transpose() * cfg.Q() * basis).is_zero())
    fail(ErrorKind::Domain, "V2 is not Q-isotropic");
  return IsotropicFlag(canonical_flag_basis(basis));
}

IsotropicFlag apply(const QFormConfig& cfg, const Matrix& g, const IsotropicFlag& f) {
  return IsotropicFlag::from_basis(cfg, g * f.basis());
}

StandardIsotropicFlags StandardIsotropicFlags::of(const QFormConfig& cfg) {
  const std::size_t n = cfg.dim();
  Matrix e(n, 2), f(n, 2);
  e(n - 1, 0) = 1;
  e(n - 2, 1) = 1;
  f(0, 0) = 1;
  f(1, 1) = 1;
  return {IsotropicFlag::from_basis(cfg, e), IsotropicFlag::from_basis(cfg, f)};
}

bool is_transverse_12(const QFormConfig& cfg, const IsotropicFlag& f, const IsotropicFlag& g) {
  const Matrix pairing = f.basis().transpose() * cfg.Q() * g.basis();
  return !pairing(0, 0).is_zero() && !det(pairing).is_zero();
}

UThetaElement so3q_coordinate(const QFormConfig& cfg, const IsotropicFlag& s) {
  const auto std_flags = StandardIsotropicFlags::of(cfg);
  if (!is_transverse_12(cfg, s, std_flags.F))
    fail(ErrorKind::Transversality, "flag is not transverse to the standard flag F");
  const std::size_t n = cfg.dim();
  const std::size_t k = cfg.cone_dim();
  Vector s1 = s.basis().col(0);
  Vector s2 = s.basis().col(1);
  s1 = (Rational(1) / s1[n - 1]) * s1;
  s2 = s2 - s2[n - 1] * s1;
  // Transversality makes the (n-2) entry of s2 nonzero once its last entry is cleared.
  if (s2[n - 2].is_zero())
    fail(ErrorKind::Transversality, "flag is not transverse to the standard flag F");
  s2 = (Rational(1) / s2[n - 2]) * s2;
  const Rational x = s1[n - 2];
  Vector mid1(k), mid2(k);
  for (std::size_t i = 0; i < k; ++i) {
    mid1[i] = s1[2 + i];
    mid2[i] = s2[2 + i];
  }
  const Vector v = j_times(cfg, mid2);
  const Vector w = (x / Rational(2)) * v - j_times(cfg, mid1);
  UThetaElement u = u_theta(cfg, x, v, w, s2[0]);
  if (!(apply(cfg, u.matrix, std_flags.E) == s))
    fail(ErrorKind::Domain, "flag is not in the U_Theta orbit of E");
  return u;
}

bool is_positive_triple_so3q(const QFormConfig& cfg, const IsotropicFlag& s) {
  const UThetaElement u = so3q_coordinate(cfg, s);
  return invert_F(cfg, u.matrix, kW1212).has_value();
}

}  // namespace thetapos
