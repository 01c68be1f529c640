#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "thetapos/matrix.hpp"
#include "thetapos/weyl.hpp"

namespace thetapos {

/// The form Q = [[0, 0, K], [0, J, 0], [-K, 0, 0]] of signature (3, q) on
/// R^{q+3}, with K = [[0, 1], [-1, 0]] and J = antidiag-corners(1) with -I_{q-3}
/// in the middle.
class QFormConfig {
 public:
  static constexpr int kMinQ = 4;
  static constexpr int kMaxQ = 16;
  static QFormConfig make(int q);

  int q() const { return q_; }
  /// q + 3
  std::size_t dim() const { return static_cast<std::size_t>(q_) + 3; }
  /// q - 1, the dimension of the second weight space.
  std::size_t cone_dim() const { return static_cast<std::size_t>(q_) - 1; }
  const Matrix& Q() const { return Q_; }
  const Matrix& J() const { return J_; }

 private:
  QFormConfig(int q, Matrix Q, Matrix J) : q_(q), Q_(std::move(Q)), J_(std::move(J)) {}
  int q_;
  Matrix Q_;
  Matrix J_;
};

/// b_J(v, w) = v^T J w / 2.
Rational bJ(const QFormConfig& cfg, const Vector& v, const Vector& w);
/// q_J(v) = b_J(v, v).
Rational qJ(const QFormConfig& cfg, const Vector& v);

/// Open cone {q_J(v) > 0, v_1 > 0}.
bool in_cone_alpha2(const QFormConfig& cfg, const Vector& v);
/// Its closure {q_J(v) >= 0, v_1 >= 0, v_{q-1} >= 0}.
bool in_closed_cone_alpha2(const QFormConfig& cfg, const Vector& v);

/// Element of the unipotent radical U_Theta with its coordinates.
struct UThetaElement {
  Rational x;
  Vector v;
  Vector w;
  Rational a;
  Matrix matrix;
};

/// The coordinate matrix U(x, v, w, a). Satisfies U^T Q U = Q.
UThetaElement u_theta(const QFormConfig& cfg, const Rational& x, const Vector& v, const Vector& w,
                      const Rational& a);
/// Reads the coordinates off a matrix and checks it is exactly U(x, v, w, a);
/// throws Domain otherwise.
UThetaElement u_theta_from_matrix(const QFormConfig& cfg, const Matrix& m);
bool preserves_form(const QFormConfig& cfg, const Matrix& g);

/// Exponential of a nilpotent matrix (the series terminates); Domain if the
/// argument is not nilpotent.
Matrix exp_nilpotent(const Matrix& n);

/// Nilpotent generators of the two weight spaces.
Matrix alpha1_generator(const QFormConfig& cfg, const Rational& x);
Matrix alpha2_generator(const QFormConfig& cfg, const Vector& v);

UThetaElement x_alpha1(const QFormConfig& cfg, const Rational& x);
UThetaElement x_alpha2(const QFormConfig& cfg, const Vector& v);

/// A slot of a B2 parameter tuple: letter 1 carries a scalar, letter 2 a vector.
using B2Slot = std::variant<Rational, Vector>;

struct B2Params {
  Word word;
  std::vector<B2Slot> slots;
  friend bool operator==(const B2Params&, const B2Params&) = default;
};

/// Ordered product x_{beta_{i1}}(s_1) ... x_{beta_{il}}(s_l) over a reduced B2 word.
UThetaElement F_word(const QFormConfig& cfg, const B2Params& p);

/// Parameters (w1, y1, w2, y2) with F_{2121}(w1, y1, w2, y2) = F_{1212}(x1, v1, x2, v2).
struct B2Transition {
  Vector w1;
  Rational y1;
  Vector w2;
  Rational y2;
};

/// Requires x1 >= 0, v1 in the closed cone, x2 > 0, v2 in the open cone
/// (Domain otherwise); Singular if a denominator vanishes.
B2Transition braid_transition(const QFormConfig& cfg, const Rational& x1, const Vector& v1,
                              const Rational& x2, const Vector& v2);

/// Recovers interior parameters on `word` (one of the two reduced words of the
/// longest element) with F_word = u; nullopt when u is not Theta-positive.
std::optional<B2Params> invert_F(const QFormConfig& cfg, const Matrix& u, const Word& word);

/// Moves interior parameters to the other reduced word of the longest element.
B2Params b2_word_transition(const QFormConfig& cfg, const B2Params& p, const Word& target);

/// Every slot interior to its cone.
bool is_interior(const QFormConfig& cfg, const B2Params& p);

/// exp(a E_alpha1 + w E_alpha2).
UThetaElement exp_principal(const QFormConfig& cfg, const Rational& a, const Vector& w);

/// The 16 subwords (position subsets) of a length-4 reduced word with the slot
/// type of each kept letter; these index the charts of U_Theta^{>=0}.
struct SubwordChart {
  std::vector<std::size_t> positions;
  Word letters;
};
std::vector<SubwordChart> b2_subword_charts(const Word& word);

/// Isotropic partial flag V1 in V2 in R^{q+3}, V2 totally Q-isotropic. The
/// basis is (q+3) x 2 in canonical flag form.
class IsotropicFlag {
 public:
  static IsotropicFlag from_basis(const QFormConfig& cfg, const Matrix& basis);
  const Matrix& basis() const { return basis_; }
  friend bool operator==(const IsotropicFlag&, const IsotropicFlag&) = default;

 private:
  explicit IsotropicFlag(Matrix basis) : basis_(std::move(basis)) {}
  Matrix basis_;
};

IsotropicFlag apply(const QFormConfig& cfg, const Matrix& g, const IsotropicFlag& f);

/// E = (R e_{q+3}, + R e_{q+2}), F = (R e_1, + R e_2).
struct StandardIsotropicFlags {
  IsotropicFlag E;
  IsotropicFlag F;
  static StandardIsotropicFlags of(const QFormConfig& cfg);
};

/// Q(f_1, g_1) != 0 and the 2x2 pairing of V2 with W2 is nondegenerate.
bool is_transverse_12(const QFormConfig& cfg, const IsotropicFlag& f, const IsotropicFlag& g);

/// Unique u in U_Theta with u . E = s; Transversality unless s is transverse to F.
UThetaElement so3q_coordinate(const QFormConfig& cfg, const IsotropicFlag& s);

/// (E, s, F) is Theta-positive.
bool is_positive_triple_so3q(const QFormConfig& cfg, const IsotropicFlag& s);

}  // namespace thetapos
