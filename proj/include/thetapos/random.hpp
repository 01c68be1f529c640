#pragma once

#include <cstdint>
#include <random>

#include "thetapos/matrix.hpp"
#include "thetapos/so3q.hpp"
#include "thetapos/symplectic.hpp"
#include "thetapos/totpos.hpp"

namespace thetapos {

/// Seeded generator: std::mt19937_64, with bounded integers drawn by
/// rejection so the stream is identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  long integer(long lo, long hi);
  bool coin() { return integer(0, 1) == 1; }

  /// p/q with 1 <= p <= 30, 1 <= q <= 12.
  Rational positive();
  /// Nonzero with a random sign.
  Rational nonzero();
  /// Possibly zero, numerator in [-30, 30].
  Rational any();

 private:
  std::mt19937_64 engine_;
};

PositiveParams sample_positive_params(Rng& rng, const Word& word);
/// Product lower * diag * upper of positive Whitney factors; totally positive.
Matrix sample_tp_matrix(Rng& rng, std::size_t n);
/// Unit upper unipotent F_{w0}(t) with positive t.
UnipotentUpper sample_positive_unipotent(Rng& rng, std::size_t n);

Matrix sample_symmetric(Rng& rng, std::size_t n);
Matrix sample_pos_def(Rng& rng, std::size_t n);
Matrix sample_invertible(Rng& rng, std::size_t n);
Matrix sample_symplectic(Rng& rng, const SymplecticSpace& space);
Lagrangian sample_lagrangian(Rng& rng, const SymplecticSpace& space);

/// Open-cone vector: v_last is solved so that q_J(v) is a sampled positive value.
Vector sample_cone_vector(Rng& rng, const QFormConfig& cfg);
/// Closed-cone vector, boundary cases included.
Vector sample_closed_cone_vector(Rng& rng, const QFormConfig& cfg);
B2Params sample_interior_b2(Rng& rng, const QFormConfig& cfg, const Word& word);

}  // namespace thetapos
