#pragma once

#include <cstddef>
#include <optional>
#include <tuple>
#include <vector>

#include "thetapos/matrix.hpp"
#include "thetapos/weyl.hpp"

namespace thetapos {

/// Exhaustive minor enumeration is limited to this size.
inline constexpr std::size_t kMaxMinorSize = 5;

/// Which of the two positive components is meant: the cone R_+ or its mirror
/// -R_+ (parameters negated).
enum class Cone { Positive, Mirrored };

/// Unit upper-triangular n x n matrix.
class UnipotentUpper {
 public:
  static UnipotentUpper make(Matrix m);
  static UnipotentUpper identity(std::size_t n) { return UnipotentUpper(Matrix::identity(n)); }

  const Matrix& matrix() const { return m_; }
  std::size_t size() const { return m_.rows(); }
  friend UnipotentUpper operator*(const UnipotentUpper& a, const UnipotentUpper& b) {
    return UnipotentUpper(a.m_ * b.m_);
  }
  UnipotentUpper inverse() const;
  friend bool operator==(const UnipotentUpper&, const UnipotentUpper&) = default;

 private:
  explicit UnipotentUpper(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

/// Parameters (t_1..t_k) attached to the letters of a word in S_n.
struct PositiveParams {
  Word word;
  std::vector<Rational> values;
  friend bool operator==(const PositiveParams&, const PositiveParams&) = default;
};

/// Row and column index sets (0-based) of a minor together with its value.
struct MinorWitness {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  Rational value;
};

/// I_n + t E_{i,i+1}, i 1-based.
UnipotentUpper elementary_u(int i, const Rational& t, std::size_t n);

bool is_totally_positive(const Matrix& m);
/// First minor (by size, then lexicographic index sets) that is not > 0.
std::optional<MinorWitness> nonpositive_minor(const Matrix& m);

/// Positivity of every minor not forced to vanish on U: row set i_1<..<i_k and
/// column set j_1<..<j_k with i_l <= j_l for all l.
bool is_unipotent_positive(const UnipotentUpper& u, Cone cone = Cone::Positive);
std::optional<MinorWitness> nonpositive_unforced_minor(const UnipotentUpper& u,
                                                       Cone cone = Cone::Positive);

/// u_{i1}(t_1) ... u_{ik}(t_k); the word must be reduced in S_n. With
/// Cone::Mirrored every parameter enters negated.
UnipotentUpper param_F(const PositiveParams& p, std::size_t n, Cone cone = Cone::Positive);

/// u_i(a) u_j(b) u_i(c) = u_j(c') u_i(b') u_j(a') for adjacent i, j; returns
/// (c', b', a').
std::tuple<Rational, Rational, Rational> sl3_transition(const Rational& a, const Rational& b,
                                                         const Rational& c);

/// Re-expresses the parameters on another reduced word of the same element by
/// chaining braid moves: commutations swap, length-3 moves use sl3_transition.
PositiveParams word_transition(const PositiveParams& p, const Word& target, std::size_t n,
                               Cone cone = Cone::Positive);

struct WhitneyFactors {
  Matrix lower;
  Matrix diag;
  UnipotentUpper upper;
};

/// g = lower * diag * upper without pivoting. Throws Decomposition when a
/// leading principal minor vanishes.
WhitneyFactors whitney_factor(const Matrix& g);

/// n distinct real eigenvalues of one sign, certified by Sturm isolation.
bool proximality_check(const Matrix& g);

}  // namespace thetapos
