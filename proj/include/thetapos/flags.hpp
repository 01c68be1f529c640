#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "thetapos/matrix.hpp"
#include "thetapos/totpos.hpp"

namespace thetapos {

/// Canonical basis of a nested chain of column spans: column i is reduced
/// against the pivot rows of columns 0..i-1 and scaled to a unit pivot at its
/// first nonzero row. Two full-column-rank matrices define the same chain of
/// leading spans iff their canonical bases agree.
Matrix canonical_flag_basis(const Matrix& basis);

/// Full flag in R^n: F_i is spanned by the first i basis columns.
class Flag {
 public:
  /// Throws Domain if the basis is not square and invertible.
  static Flag from_basis(const Matrix& basis);

  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  /// Basis of F_i (first i columns).
  Matrix subspace(std::size_t i) const { return basis_.leading_cols(i); }

  friend bool operator==(const Flag&, const Flag&) = default;
  friend Flag operator*(const Matrix& g, const Flag& f) { return from_basis(g * f.basis_); }

 private:
  explicit Flag(Matrix basis) : basis_(std::move(basis)) {}
  Matrix basis_;
};

/// F_i = span(e_1..e_i), E_i = span(e_n..e_{n-i+1}).
struct StandardFlags {
  Flag E;
  Flag F;
  static StandardFlags of(std::size_t n);
};

/// F_i and F'_{n-i} intersect trivially for every i.
bool is_transverse(const Flag& f1, const Flag& f2);

/// The unique u in U with u . E = t; throws Transversality if t is not
/// transverse to F.
UnipotentUpper unipotent_coordinate(const Flag& t, const StandardFlags& std_flags);

bool is_positive_triple_standard(const Flag& t, const StandardFlags& std_flags);

/// Some g with g . f1 = E and g . f2 = F (unique up to diagonal matrices).
Matrix normalize_pair(const Flag& f1, const Flag& f2);

/// Which group extends positivity from the standard pair: GL(n) admits every
/// diagonal sign class, SL(n) only those with det(d g) > 0.
enum class Orientation { GL, SL };

/// Data showing (f1, t, f3) is positive: g normalizes (f1, f3) to (E, F), the
/// sign vector d adjusts it, and d g t = u . E with u in U^{>0}.
struct TripleCertificate {
  Matrix normalizer;
  std::vector<int> signs;
  UnipotentUpper coordinate;
};

std::optional<TripleCertificate> certify_positive_triple(const Flag& f1, const Flag& t,
                                                         const Flag& f3,
                                                         Orientation orientation = Orientation::GL);

/// Throws Transversality when f1, f3 are not transverse or t is not transverse
/// to f1; returns false when t is not transverse to f3.
bool is_positive_triple(const Flag& f1, const Flag& t, const Flag& f3,
                        Orientation orientation = Orientation::GL);

/// Both triples (f1, s, f4), (s, s2, f4) positive and, with (f1, f4) normalized
/// under one common sign class, u_{s2} = u_s w for some w in U^{>0}.
bool is_positive_quadruple(const Flag& f1, const Flag& s, const Flag& s2, const Flag& f4,
                           Orientation orientation = Orientation::GL);

}  // namespace thetapos
