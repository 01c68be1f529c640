#include "thetapos/selftest.hpp"

#include <functional>
#include <optional>

#include "thetapos/error.hpp"
#include "thetapos/flags.hpp"
#include "thetapos/json_io.hpp"
#include "thetapos/linalg.hpp"
#include "thetapos/random.hpp"
#include "thetapos/so3q.hpp"
#include "thetapos/symplectic.hpp"
#include "thetapos/totpos.hpp"

namespace thetapos {

namespace {

using nlohmann::json;
using io::matrix_to_json;
using io::scalar_to_json;
using io::vector_to_json;

// A trial returns nullopt on success, otherwise the inputs that broke it.
using Trial = std::function<std::optional<json>(Rng&, std::size_t)>;

struct Suite {
  std::string name;
  std::size_t trials;
  Trial run;
};

Matrix upper2(const Rational& s) { return {{1, s}, {0, 1}}; }
Matrix lower2(const Rational& t) { return {{1, 0}, {t, 1}}; }

std::optional<json> check_det(Rng& rng, std::size_t) {
  const std::size_t n = static_cast<std::size_t>(rng.integer(2, 5));
  Matrix a(n, n), b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = rng.any();
      b(i, j) = rng.any();
    }
  if (det(a * b) == det(a) * det(b)) return std::nullopt;
  return json{{"a", matrix_to_json(a)}, {"b", matrix_to_json(b)}};
}

std::optional<json> check_sl2(Rng& rng, std::size_t) {
  const Rational s = rng.positive();
  const Rational t = rng.positive();
  const Rational d = Rational(1) + s * t;
  const Matrix lhs = upper2(s) * lower2(t);
  const Matrix rhs = lower2(t / d) * Matrix{{d, 0}, {0, Rational(1) / d}} * upper2(s / d);
  if (lhs == rhs) return std::nullopt;
  return json{{"s", scalar_to_json(s)}, {"t", scalar_to_json(t)}};
}

std::optional<json> check_sl3(Rng& rng, std::size_t) {
  const Rational a = rng.positive(), b = rng.positive(), c = rng.positive();
  const auto [c2, b2, a2] = sl3_transition(a, b, c);
  const bool ok = c2.sign() > 0 && b2.sign() > 0 && a2.sign() > 0 &&
                  param_F({{1, 2, 1}, {a, b, c}}, 3) == param_F({{2, 1, 2}, {c2, b2, a2}}, 3);
  if (ok) return std::nullopt;
  return json{{"values", vector_to_json({a, b, c})}};
}

std::optional<json> check_tp_semigroup(Rng& rng, std::size_t trial) {
  const std::size_t n = 3 + trial % 2;
  const Matrix a = sample_tp_matrix(rng, n);
  const Matrix b = sample_tp_matrix(rng, n);
  if (is_totally_positive(a) && is_totally_positive(b) && is_totally_positive(a * b))
    return std::nullopt;
  return json{{"a", matrix_to_json(a)}, {"b", matrix_to_json(b)}};
}

std::optional<json> check_reduced_words(Rng& rng, std::size_t) {
  const CoxeterSystem s4 = CoxeterSystem::type_a(4);
  const auto words = enumerate_reduced_words(s4, longest_word(s4));
  const auto& start = words[static_cast<std::size_t>(
      rng.integer(0, static_cast<long>(words.size()) - 1))];
  const PositiveParams p = sample_positive_params(rng, start.letters());
  const UnipotentUpper u = param_F(p, 4);
  for (const auto& w : words) {
    const PositiveParams q = word_transition(p, w.letters(), 4);
    bool ok = param_F(q, 4) == u;
    for (const auto& x : q.values) ok = ok && x.sign() > 0;
    if (!ok)
      return json{{"params", io::positive_params_to_json(p)}, {"target", w.letters()}};
  }
  return std::nullopt;
}

std::optional<json> check_flag_triple(Rng& rng, std::size_t trial) {
  if (trial % 2 == 0) {
    const auto std2 = StandardFlags::of(2);
    const Rational t = rng.nonzero();
    const Flag f = Flag::from_basis(Matrix{{t, 1}, {1, 0}});
    if (is_positive_triple_standard(f, std2) == (t.sign() > 0)) return std::nullopt;
    return json{{"n", 2}, {"t", scalar_to_json(t)}};
  }
  const auto std3 = StandardFlags::of(3);
  const PositiveParams p = sample_positive_params(rng, {1, 2, 1});
  const Flag pos = param_F(p, 3).matrix() * std3.E;
  const Flag neg = param_F(p, 3, Cone::Mirrored).matrix() * std3.E;
  if (is_positive_triple_standard(pos, std3) && !is_positive_triple_standard(neg, std3))
    return std::nullopt;
  return json{{"n", 3}, {"params", io::positive_params_to_json(p)}};
}

std::optional<json> check_gl_invariance(Rng& rng, std::size_t) {
  const std::size_t n = static_cast<std::size_t>(rng.integer(2, 4));
  const auto sf = StandardFlags::of(n);
  const Matrix g = sample_invertible(rng, n);
  const Matrix u = sample_positive_unipotent(rng, n).matrix();
  if (is_positive_triple(g * sf.E, g * (u * sf.E), g * sf.F)) return std::nullopt;
  return json{{"g", matrix_to_json(g)}, {"u", matrix_to_json(u)}};
}

std::optional<json> check_maslov(Rng& rng, std::size_t trial) {
  const std::size_t n = 1 + trial % 3;
  const SymplecticSpace sp = SymplecticSpace::of(n);
  Lagrangian l1 = sample_lagrangian(rng, sp);
  Lagrangian l2 = sample_lagrangian(rng, sp);
  Lagrangian l3 = sample_lagrangian(rng, sp);
  if (trial % 2 == 0) {
    const Matrix g = sample_symplectic(rng, sp);
    const Lagrangian le = Lagrangian::from_basis(sp, sp.l_e());
    const Lagrangian lf = Lagrangian::from_basis(sp, sp.l_f());
    l1 = apply(sp, g, le);
    l2 = apply(sp, g * v_elem(sample_pos_def(rng, n)), lf);
    l3 = apply(sp, g, lf);
  }
  if (!is_transverse(l1, l2) || !is_transverse(l2, l3) || !is_transverse(l1, l3))
    return std::nullopt;
  const bool pos = is_positive_lag_triple(sp, l1, l2, l3);
  const long mu = maslov_index(sp, l1, l2, l3);
  if (pos == (mu == static_cast<long>(n))) return std::nullopt;
  return json{{"l1", matrix_to_json(l1.basis())},
              {"l2", matrix_to_json(l2.basis())},
              {"l3", matrix_to_json(l3.basis())}};
}

std::optional<json> check_sp_semigroup(Rng& rng, std::size_t trial) {
  const std::size_t n = 1 + trial % 3;
  const SymplecticSpace sp = SymplecticSpace::of(n);
  std::vector<SpFactor> factors;
  for (int k = 0; k < 2; ++k) {
    factors.push_back({SpFactor::Kind::V, sample_pos_def(rng, n)});
    Matrix a = sample_invertible(rng, n);
    if (det(a).sign() < 0)
      for (std::size_t j = 0; j < n; ++j) a(0, j) = -a(0, j);
    factors.push_back({SpFactor::Kind::H, a});
    factors.push_back({SpFactor::Kind::W, sample_pos_def(rng, n)});
  }
  const SpProduct prod = sp_semigroup_product(sp, factors);
  if (prod.certified() && sp.is_symplectic(prod.g)) return std::nullopt;
  json fs = json::array();
  for (const auto& f : factors)
    fs.push_back({{"kind", f.kind == SpFactor::Kind::V ? "V" : (f.kind == SpFactor::Kind::H ? "H" : "W")},
                  {"block", matrix_to_json(f.block)}});
  return json{{"factors", fs}};
}

int q_for(std::size_t trial) { return 4 + static_cast<int>(trial % 3); }

std::optional<json> check_so3q_braid(Rng& rng, std::size_t trial) {
  const QFormConfig cfg = QFormConfig::make(q_for(trial));
  const B2Params p = sample_interior_b2(rng, cfg, {1, 2, 1, 2});
  const Rational& x1 = std::get<Rational>(p.slots[0]);
  const Vector& v1 = std::get<Vector>(p.slots[1]);
  const Rational& x2 = std::get<Rational>(p.slots[2]);
  const Vector& v2 = std::get<Vector>(p.slots[3]);
  const B2Transition t = braid_transition(cfg, x1, v1, x2, v2);
  const B2Params image{{2, 1, 2, 1}, {t.w1, t.y1, t.w2, t.y2}};
  const UThetaElement lhs = F_word(cfg, p);
  const bool ok =
      lhs.matrix == F_word(cfg, image).matrix && preserves_form(cfg, lhs.matrix) &&
      x1 + x2 == t.y1 + t.y2 && v1 + v2 == t.w1 + t.w2 &&
      t.y1 * t.w2 + x2 * v1 == (x1 + x2) * (v1 + v2) &&
      t.y1 * qJ(cfg, t.w2) == x1 * qJ(cfg, v1 + v2) + x2 * qJ(cfg, v2) &&
      is_interior(cfg, image) && qJ(cfg, t.w1).sign() > 0;
  if (ok) return std::nullopt;
  return json{{"q", cfg.q()}, {"params", io::b2_params_to_json(p)}};
}

std::optional<json> check_so3q_exp(Rng& rng, std::size_t trial) {
  const QFormConfig cfg = QFormConfig::make(q_for(trial));
  const Rational a = rng.positive();
  const Vector w = sample_cone_vector(rng, cfg);
  const B2Params p{{2, 1, 2, 1},
                   {Rational(1, 3) * w, Rational(3, 4) * a, Rational(2, 3) * w, Rational(1, 4) * a}};
  if (exp_principal(cfg, a, w).matrix == F_word(cfg, p).matrix) return std::nullopt;
  return json{{"q", cfg.q()}, {"a", scalar_to_json(a)}, {"w", vector_to_json(w)}};
}

std::optional<json> check_so3q_invert(Rng& rng, std::size_t trial) {
  const QFormConfig cfg = QFormConfig::make(q_for(trial));
  const Word word = trial % 2 == 0 ? Word{1, 2, 1, 2} : Word{2, 1, 2, 1};
  const B2Params p = sample_interior_b2(rng, cfg, word);
  const Matrix u = F_word(cfg, p).matrix;
  const auto back = invert_F(cfg, u, word);
  B2Params flipped = p;
  for (auto& s : flipped.slots) {
    if (auto* x = std::get_if<Rational>(&s))
      *x = -*x;
    else
      std::get<Vector>(s) = Rational(-1) * std::get<Vector>(s);
  }
  const bool ok = back && *back == p &&
                  !invert_F(cfg, Matrix::identity(cfg.dim()), word) &&
                  !invert_F(cfg, F_word(cfg, flipped).matrix, word);
  if (ok) return std::nullopt;
  return json{{"q", cfg.q()}, {"params", io::b2_params_to_json(p)}};
}

std::optional<json> check_so3q_triple(Rng& rng, std::size_t trial) {
  const QFormConfig cfg = QFormConfig::make(q_for(trial));
  const B2Params p = sample_interior_b2(rng, cfg, {1, 2, 1, 2});
  const auto sf = StandardIsotropicFlags::of(cfg);
  const IsotropicFlag s = apply(cfg, F_word(cfg, p).matrix, sf.E);
  if (is_positive_triple_so3q(cfg, s)) return std::nullopt;
  return json{{"q", cfg.q()}, {"params", io::b2_params_to_json(p)}};
}

std::optional<json> check_eigenvalues(Rng& rng, std::size_t trial) {
  const Matrix g = sample_tp_matrix(rng, 3 + trial % 2);
  if (proximality_check(g)) return std::nullopt;
  return json{{"matrix", matrix_to_json(g)}};
}

std::vector<Suite> suites() {
  return {
      {"det_multiplicative", 20, check_det},
      {"sl2_identity", 50, check_sl2},
      {"sl3_transition", 50, check_sl3},
      {"tp_semigroup_closure", 10, check_tp_semigroup},
      {"reduced_word_independence_s4", 5, check_reduced_words},
      {"flag_triple_standard", 30, check_flag_triple},
      {"flag_triple_gl_invariance", 10, check_gl_invariance},
      {"maslov_equivalence", 30, check_maslov},
      {"sp_semigroup_closure", 9, check_sp_semigroup},
      {"so3q_braid_identity", 15, check_so3q_braid},
      {"so3q_exp_identity", 15, check_so3q_exp},
      {"so3q_invert_round_trip", 12, check_so3q_invert},
      {"so3q_triple_positive", 6, check_so3q_triple},
      {"eigenvalue_separation", 10, check_eigenvalues},
  };
}

}  // namespace

std::vector<std::string> selftest_suite_names() {
  std::vector<std::string> out;
  for (const auto& s : suites()) out.push_back(s.name);
  return out;
}

json run_selftest(std::uint64_t seed, std::size_t scale) {
  json report = json::array();
  bool all = true;
  const auto list = suites();
  for (std::size_t k = 0; k < list.size(); ++k) {
    const Suite& s = list[k];
    // Each suite owns a stream so adding suites leaves the others reproducible.
    Rng rng(seed * 1000003ULL + k);
    const std::size_t trials = s.trials * scale;
    std::size_t passed = 0;
    json counterexample;
    for (std::size_t t = 0; t < trials; ++t) {
      std::optional<json> bad;
      try {
        bad = s.run(rng, t);
      } catch (const Error& e) {
        bad = json{{"error", e.what()}};
      }
      if (!bad) {
        ++passed;
      } else if (counterexample.is_null()) {
        counterexample = *bad;
        counterexample["trial"] = t;
      }
    }
    json entry{{"suite", s.name}, {"trials", trials}, {"passed", passed},
               {"status", passed == trials ? "pass" : "fail"}};
    if (!counterexample.is_null()) entry["counterexample"] = counterexample;
    all = all && passed == trials;
    report.push_back(entry);
  }
  return json{{"seed", seed}, {"scale", scale}, {"suites", report}, {"verdict", all ? "pass" : "fail"}};
}

}  // namespace thetapos
