#include "thetapos/roots.hpp"

#include <algorithm>

#include "thetapos/error.hpp"

namespace thetapos {

namespace {

Polynomial squarefree_part(const Polynomial& p) {
  return divmod(p, gcd(p, p.derivative())).first;
}

// Isolation for a square-free polynomial with sequence `seq`, restricted to
// the open interval (a, b) whose endpoints are not roots.
void isolate_open(const Polynomial& p, const std::vector<Polynomial>& seq, const Rational& a,
                  const Rational& b, std::vector<RootInterval>& out) {
  const std::size_t count = sign_variations(seq, a) - sign_variations(seq, b);
  if (count == 0) return;
  if (count == 1) {
    out.push_back({a, b, 1, false});
    return;
  }
  const Rational mid = (a + b) / Rational(2);
  if (!p(mid).is_zero()) {
    isolate_open(p, seq, a, mid, out);
    isolate_open(p, seq, mid, b, out);
    return;
  }
  // mid is itself a root: fence it off with non-root points on either side.
  Rational delta = (b - a) / Rational(4);
  while (true) {
    const Rational lo = mid - delta, hi = mid + delta;
    if (!p(lo).is_zero() && !p(hi).is_zero() &&
        sign_variations(seq, lo) - sign_variations(seq, hi) == 1) {
      isolate_open(p, seq, a, lo, out);
      out.push_back({mid, mid, 1, true});
      isolate_open(p, seq, hi, b, out);
      return;
    }
    delta /= Rational(2);
  }
}

}  // namespace

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  Polynomial d = p.derivative();
  while (!d.is_zero()) {
    seq.push_back(d);
    Polynomial r = -divmod(seq[seq.size() - 2], seq.back()).second;
    d = std::move(r);
  }
  return seq;
}

std::size_t sign_variations(const std::vector<Polynomial>& seq, const Rational& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& f : seq) {
    const int s = f(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t count_distinct_roots(const Polynomial& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) fail(ErrorKind::Domain, "root count of zero polynomial");
  if (!(a < b)) return 0;
  const auto seq = sturm_sequence(squarefree_part(p));
  return sign_variations(seq, a) - sign_variations(seq, b);
}

Rational cauchy_bound(const Polynomial& p) {
  if (p.is_zero()) fail(ErrorKind::Domain, "root bound of zero polynomial");
  Rational m;
  for (int k = 0; k < p.degree(); ++k) {
    m = std::max(m, abs(p.coefficient(static_cast<std::size_t>(k)) / p.leading()));
  }
  return m + Rational(1);
}

std::vector<RootInterval> isolate_real_roots(const Polynomial& p) {
  if (p.is_zero()) fail(ErrorKind::Domain, "cannot isolate roots of the zero polynomial");
  std::vector<RootInterval> out;
  if (p.degree() < 1) return out;
  const Polynomial sf = squarefree_part(p);
  const auto seq = sturm_sequence(sf);
  const Rational bound = cauchy_bound(sf);
  isolate_open(sf, seq, -bound, bound, out);

  const auto factors = squarefree_decomposition(p);
  for (auto& iv : out) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (factors[i].degree() < 1) continue;
      const bool hit = iv.exact ? factors[i](iv.lo).is_zero()
                                : count_distinct_roots(factors[i], iv.lo, iv.hi) > 0;
      if (hit) {
        iv.multiplicity = i + 1;
        break;
      }
    }
  }
  return out;
}

RootInterval refine(const Polynomial& p, RootInterval iv, const Rational& width) {
  if (iv.exact) return iv;
  const Polynomial sf = squarefree_part(p);
  const auto seq = sturm_sequence(sf);
  while (iv.hi - iv.lo > width) {
    const Rational mid = (iv.lo + iv.hi) / Rational(2);
    if (sf(mid).is_zero()) return {mid, mid, iv.multiplicity, true};
    if (sign_variations(seq, iv.lo) - sign_variations(seq, mid) == 1) {
      iv.hi = mid;
    } else {
      iv.lo = mid;
    }
  }
  return iv;
}

}  // namespace thetapos
