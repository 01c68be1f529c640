#pragma once

#include <cstddef>
#include <vector>

#include "thetapos/polynomial.hpp"

namespace thetapos {

/// An isolating interval for one distinct real root. When `exact` holds the
/// root is lo == hi; otherwise the root lies in the open interval (lo, hi)
/// and neither endpoint is a root.
struct RootInterval {
  Rational lo;
  Rational hi;
  std::size_t multiplicity = 1;
  bool exact = false;

  bool contains(const Rational& x) const { return exact ? x == lo : (lo < x && x < hi); }
};

/// Sturm sequence p, p', -rem(p, p'), ...
std::vector<Polynomial> sturm_sequence(const Polynomial& p);

/// Sign variations of the sequence evaluated at x, zeros skipped.
std::size_t sign_variations(const std::vector<Polynomial>& seq, const Rational& x);

/// Number of distinct real roots of p in the half-open interval (a, b].
std::size_t count_distinct_roots(const Polynomial& p, const Rational& a, const Rational& b);

/// Bound B with every real root strictly inside (-B, B).
Rational cauchy_bound(const Polynomial& p);

/// Isolates all distinct real roots of p in increasing order, with
/// multiplicities from the square-free decomposition. Throws Domain on zero p.
std::vector<RootInterval> isolate_real_roots(const Polynomial& p);

/// Shrinks a non-exact interval by bisection until it is no wider than width
/// (or becomes exact). p must vanish inside the interval.
RootInterval refine(const Polynomial& p, RootInterval iv, const Rational& width);

}  // namespace thetapos
