#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "thetapos/matrix.hpp"
#include "thetapos/polynomial.hpp"

namespace thetapos {

/// Exact determinant: cofactor expansion up to 3x3, fraction-free Bareiss
/// elimination on the integer-scaled matrix beyond that.
Rational det(const Matrix& m);

/// Determinant of the submatrix on the given 0-based rows and columns. Index
/// sets must be nonempty, of equal size, strictly increasing and in range.
Rational minor(const Matrix& m, std::span<const std::size_t> rows,
               std::span<const std::size_t> cols);

/// Rank via fraction-free elimination.
std::size_t rank(const Matrix& m);

/// Reduced column echelon form with zero columns dropped: two matrices with
/// the same number of rows have equal column spans iff their echelon forms
/// are identical.
Matrix column_echelon(const Matrix& m);

/// det(xI - m).
Polynomial char_poly(const Matrix& m);

/// Inverse of a square matrix; throws Singular when not invertible.
Matrix inverse(const Matrix& m);

/// Solves a x = b for square invertible a.
Matrix solve(const Matrix& a, const Matrix& b);

/// Basis of the right null space, as columns.
Matrix null_space(const Matrix& m);

/// (positive, negative, zero) counts of a symmetric matrix's inertia, by exact
/// congruence diagonalization.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  long signature() const { return static_cast<long>(positive) - static_cast<long>(negative); }
};
Inertia inertia(const Matrix& symmetric);

}  // namespace thetapos
