#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "thetapos/matrix.hpp"

namespace thetapos {

/// R^{2n} with the standard form omega = [[0, I], [-I, 0]] in the basis
/// (e_1..e_n, f_1..f_n), so omega(e_i, f_j) = delta_ij.
class SymplecticSpace {
 public:
  static SymplecticSpace of(std::size_t n);

  std::size_t n() const { return n_; }
  const Matrix& form() const { return form_; }
  Rational omega(std::span<const Rational> x, std::span<const Rational> y) const;
  bool is_symplectic(const Matrix& g) const;

  /// span(e_1..e_n) and span(f_1..f_n) as 2n x n bases.
  Matrix l_e() const;
  Matrix l_f() const;

 private:
  SymplecticSpace(std::size_t n, Matrix form) : n_(n), form_(std::move(form)) {}
  std::size_t n_;
  Matrix form_;
};

/// rank n and basis^T omega basis = 0; throws Dimension on a wrong shape.
bool is_lagrangian(const SymplecticSpace& space, const Matrix& basis);

/// Lagrangian subspace held by its reduced column echelon basis.
class Lagrangian {
 public:
  static Lagrangian from_basis(const SymplecticSpace& space, const Matrix& basis);

  const Matrix& basis() const { return basis_; }
  std::size_t n() const { return basis_.cols(); }
  friend bool operator==(const Lagrangian&, const Lagrangian&) = default;

 private:
  explicit Lagrangian(Matrix basis) : basis_(std::move(basis)) {}
  Matrix basis_;
};

Lagrangian apply(const SymplecticSpace& space, const Matrix& g, const Lagrangian& l);
bool is_transverse(const Lagrangian& a, const Lagrangian& b);

/// Sylvester's criterion; throws Domain for a non-symmetric argument.
bool is_pos_def(const Matrix& sym);

/// [[I, 0], [M, I]], M symmetric.
Matrix v_elem(const Matrix& m);
/// [[I, N], [0, I]], N symmetric.
Matrix w_elem(const Matrix& n);
/// [[A, 0], [0, A^{-T}]], A invertible.
Matrix h_elem(const Matrix& a);

/// The symmetric M_T with v_elem(M_T) . L_E = t; Transversality unless t is
/// transverse to L_F.
Matrix lag_coordinate(const Lagrangian& t, const SymplecticSpace& space);

/// Symplectic g with g . l1 = L_E and g . l3 = L_F, from the symplectic basis
/// completing the echelon basis of l1.
Matrix symplectic_normalizer(const SymplecticSpace& space, const Lagrangian& l1,
                             const Lagrangian& l3);

/// Positivity of the coordinate of l2 after normalizing (l1, l3) to (L_E, L_F).
/// Every pair must be transverse.
bool is_positive_lag_triple(const SymplecticSpace& space, const Lagrangian& l1,
                            const Lagrangian& l2, const Lagrangian& l3);

/// Gram matrix (doubled) of the Kashiwara form
/// q(x1,x2,x3) = omega(x1,x2) + omega(x2,x3) + omega(x3,x1) on l1 + l2 + l3.
Matrix kashiwara_form(const SymplecticSpace& space, const Lagrangian& l1, const Lagrangian& l2,
                      const Lagrangian& l3);

/// Signature of the Kashiwara form.
long maslov_index(const SymplecticSpace& space, const Lagrangian& l1, const Lagrangian& l2,
                  const Lagrangian& l3);

/// One factor of a product in Sp(2n): V(M), H(A) or W(N).
struct SpFactor {
  enum class Kind { V, H, W };
  Kind kind;
  Matrix block;
};

/// g = v_elem(M) h_elem(A) w_elem(N) with M, N positive definite, det A > 0.
struct SpFactorization {
  Matrix m;
  Matrix a;
  Matrix n;
};

struct SpProduct {
  Matrix g;
  std::optional<SpFactorization> certificate;
  bool certified() const { return certificate.has_value(); }
};

/// Block elimination of g into V^{>0} H° W^{>0}; nullopt when any step fails.
std::optional<SpFactorization> factor_sp_positive(const SymplecticSpace& space, const Matrix& g);

/// Multiplies factors (each checked: V/W positive definite, H with det > 0)
/// and attempts the re-factorization.
SpProduct sp_semigroup_product(const SymplecticSpace& space, const std::vector<SpFactor>& factors);

}  // namespace thetapos
