#include "thetapos.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "thetapos/error.hpp"
#include "thetapos/flags.hpp"
#include "thetapos/json_io.hpp"
#include "thetapos/linalg.hpp"
#include "thetapos/random.hpp"
#include "thetapos/roots.hpp"
#include "thetapos/selftest.hpp"
#include "thetapos/so3q.hpp"
#include "thetapos/symplectic.hpp"
#include "thetapos/totpos.hpp"

struct tp_matrix {
  thetapos::Matrix m;
};
struct tp_params {
  thetapos::PositiveParams p;
};
struct tp_b2params {
  thetapos::B2Params p;
};

namespace {

using namespace thetapos;
using io::json;

thread_local std::string g_last_error;

tp_status status_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return TP_ERR_PARSE;
    case ErrorKind::Dimension: return TP_ERR_DIMENSION;
    case ErrorKind::Index: return TP_ERR_INDEX;
    case ErrorKind::Domain: return TP_ERR_DOMAIN;
    case ErrorKind::Singular: return TP_ERR_SINGULAR;
    case ErrorKind::Transversality: return TP_ERR_TRANSVERSALITY;
    case ErrorKind::Decomposition: return TP_ERR_DECOMPOSITION;
    case ErrorKind::Limit: return TP_ERR_LIMIT;
  }
  return TP_ERR_INTERNAL;
}

struct NullArgument {};

template <class T>
const T& need(const T* p) {
  if (p == nullptr) throw NullArgument{};
  return *p;
}

const char* need_str(const char* p) {
  if (p == nullptr) throw NullArgument{};
  return p;
}

template <class T>
void need_out(T* p) {
  if (p == nullptr) throw NullArgument{};
}

template <class F>
tp_status guarded(F&& f) {
  g_last_error.clear();
  try {
    f();
    return TP_OK;
  } catch (const NullArgument&) {
    g_last_error = "null argument";
    return TP_ERR_NULL_ARGUMENT;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TP_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

char* dup(const json& j) { return dup(j.dump()); }

std::string field_or(const char* field, const char* fallback) {
  return field != nullptr ? field : fallback;
}

// Index sets leave the library 1-based.
json minor_to_json(const MinorWitness& w) {
  auto one_based = [](std::vector<std::size_t> v) {
    for (auto& x : v) ++x;
    return v;
  };
  return {{"rows", one_based(w.rows)}, {"cols", one_based(w.cols)},
          {"value", io::scalar_to_json(w.value)}};
}

Cone cone_of(int mirrored) { return mirrored != 0 ? Cone::Mirrored : Cone::Positive; }

Orientation orientation_of(int o) {
  if (o != 0 && o != 1) fail(ErrorKind::Domain, "orientation must be 0 (GL) or 1 (SL)");
  return o == 0 ? Orientation::GL : Orientation::SL;
}

void set_witness(char** out, const json& j) {
  if (out != nullptr) *out = j.is_null() ? nullptr : dup(j);
}

Word word_of(const int* w, std::size_t len) {
  if (w == nullptr && len != 0) throw NullArgument{};
  return len == 0 ? Word{} : Word(w, w + len);
}

}  // namespace

extern "C" {

const char* tp_last_error(void) { return g_last_error.c_str(); }

const char* tp_status_name(tp_status status) {
  switch (status) {
    case TP_OK: return "ok";
    case TP_ERR_PARSE: return "parse";
    case TP_ERR_DIMENSION: return "dimension";
    case TP_ERR_INDEX: return "index";
    case TP_ERR_DOMAIN: return "domain";
    case TP_ERR_SINGULAR: return "singular";
    case TP_ERR_TRANSVERSALITY: return "transversality";
    case TP_ERR_DECOMPOSITION: return "decomposition";
    case TP_ERR_LIMIT: return "limit";
    case TP_ERR_NULL_ARGUMENT: return "null-argument";
    case TP_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void tp_string_free(char* s) { std::free(s); }

tp_status tp_matrix_from_json(const char* text, const char* field, tp_matrix** out) {
  return guarded([&] {
    need_out(out);
    *out = nullptr;
    const json j = io::parse_document(need_str(text));
    *out = new tp_matrix{io::matrix_from_json(j, field_or(field, "matrix"))};
  });
}

tp_status tp_matrix_to_json(const tp_matrix* m, char** out) {
  return guarded([&] {
    need_out(out);
    *out = dup(io::matrix_to_json(need(m).m));
  });
}

tp_status tp_matrix_dims(const tp_matrix* m, size_t* rows, size_t* cols) {
  return guarded([&] {
    need_out(rows);
    need_out(cols);
    *rows = need(m).m.rows();
    *cols = m->m.cols();
  });
}

void tp_matrix_free(tp_matrix* m) { delete m; }

tp_status tp_params_from_json(const char* text, const char* field, tp_params** out) {
  return guarded([&] {
    need_out(out);
    *out = nullptr;
    const json j = io::parse_document(need_str(text));
    *out = new tp_params{io::positive_params_from_json(j, field_or(field, "params"))};
  });
}

tp_status tp_params_to_json(const tp_params* p, char** out) {
  return guarded([&] {
    need_out(out);
    *out = dup(io::positive_params_to_json(need(p).p));
  });
}

void tp_params_free(tp_params* p) { delete p; }

tp_status tp_b2params_from_json(const char* text, const char* field, tp_b2params** out) {
  return guarded([&] {
    need_out(out);
    *out = nullptr;
    const json j = io::parse_document(need_str(text));
    *out = new tp_b2params{io::b2_params_from_json(j, field_or(field, "params"))};
  });
}

tp_status tp_b2params_to_json(const tp_b2params* p, char** out) {
  return guarded([&] {
    need_out(out);
    *out = dup(io::b2_params_to_json(need(p).p));
  });
}

void tp_b2params_free(tp_b2params* p) { delete p; }

tp_status tp_is_totally_positive(const tp_matrix* m, int* verdict, char** witness) {
  return guarded([&] {
    need_out(verdict);
    const auto w = nonpositive_minor(need(m).m);
    *verdict = w ? 0 : 1;
    set_witness(witness, w ? minor_to_json(*w) : json());
  });
}

tp_status tp_whitney_factor(const tp_matrix* g, char** factors) {
  return guarded([&] {
    need_out(factors);
    const WhitneyFactors f = whitney_factor(need(g).m);
    *factors = dup(json{{"lower", io::matrix_to_json(f.lower)},
                        {"diag", io::matrix_to_json(f.diag)},
                        {"upper", io::matrix_to_json(f.upper.matrix())}});
  });
}

tp_status tp_eigenvalue_separation(const tp_matrix* g, int* verdict, char** intervals) {
  return guarded([&] {
    need_out(verdict);
    const Matrix& m = need(g).m;
    *verdict = proximality_check(m) ? 1 : 0;
    json out = json::array();
    for (const auto& r : isolate_real_roots(char_poly(m)))
      out.push_back({{"lo", io::scalar_to_json(r.lo)},
                     {"hi", io::scalar_to_json(r.hi)},
                     {"exact", r.exact},
                     {"multiplicity", r.multiplicity}});
    set_witness(intervals, out);
  });
}

tp_status tp_param_F(const tp_params* p, size_t n, int mirrored, tp_matrix** out) {
  return guarded([&] {
    need_out(out);
    *out = new tp_matrix{param_F(need(p).p, n, cone_of(mirrored)).matrix()};
  });
}

tp_status tp_is_unipotent_positive(const tp_matrix* u, int mirrored, int* verdict,
                                   char** witness) {
  return guarded([&] {
    need_out(verdict);
    const auto w =
        nonpositive_unforced_minor(UnipotentUpper::make(need(u).m), cone_of(mirrored));
    *verdict = w ? 0 : 1;
    set_witness(witness, w ? minor_to_json(*w) : json());
  });
}

tp_status tp_word_transition(const tp_params* p, const int* target, size_t target_len, size_t n,
                             int mirrored, tp_params** out) {
  return guarded([&] {
    need_out(out);
    *out = new tp_params{
        word_transition(need(p).p, word_of(target, target_len), n, cone_of(mirrored))};
  });
}

tp_status tp_flag_triple(const tp_matrix* f1, const tp_matrix* t, const tp_matrix* f3,
                         int orientation, int* verdict, char** certificate) {
  return guarded([&] {
    need_out(verdict);
    const Flag a = Flag::from_basis(need(f1).m);
    const Flag b = Flag::from_basis(need(t).m);
    const Flag c = Flag::from_basis(need(f3).m);
    const Orientation o = orientation_of(orientation);
    const bool positive = is_positive_triple(a, b, c, o);
    *verdict = positive ? 1 : 0;
    json cert;
    if (positive) {
      const auto c2 = certify_positive_triple(a, b, c, o);
      if (c2)
        cert = {{"normalizer", io::matrix_to_json(c2->normalizer)},
                {"signs", c2->signs},
                {"coordinate", io::matrix_to_json(c2->coordinate.matrix())}};
    }
    set_witness(certificate, cert);
  });
}

tp_status tp_flag_triple_standard(const tp_matrix* t, int* verdict, tp_matrix** coordinate) {
  return guarded([&] {
    need_out(verdict);
    const Flag f = Flag::from_basis(need(t).m);
    const auto sf = StandardFlags::of(f.dim());
    const UnipotentUpper u = unipotent_coordinate(f, sf);
    *verdict = is_unipotent_positive(u) ? 1 : 0;
    if (coordinate != nullptr) *coordinate = new tp_matrix{u.matrix()};
  });
}

tp_status tp_flag_quadruple(const tp_matrix* f1, const tp_matrix* s, const tp_matrix* s2,
                            const tp_matrix* f4, int orientation, int* verdict) {
  return guarded([&] {
    need_out(verdict);
    *verdict = is_positive_quadruple(Flag::from_basis(need(f1).m), Flag::from_basis(need(s).m),
                                     Flag::from_basis(need(s2).m), Flag::from_basis(need(f4).m),
                                     orientation_of(orientation))
                   ? 1
                   : 0;
  });
}

namespace {

SymplecticSpace space_for(const Matrix& basis) {
  if (basis.rows() != 2 * basis.cols() || basis.cols() == 0)
    fail(ErrorKind::Dimension, "Lagrangian basis must be 2n x n");
  return SymplecticSpace::of(basis.cols());
}

}  // namespace

tp_status tp_maslov_index(const tp_matrix* l1, const tp_matrix* l2, const tp_matrix* l3,
                          long* index) {
  return guarded([&] {
    need_out(index);
    const SymplecticSpace sp = space_for(need(l1).m);
    *index = maslov_index(sp, Lagrangian::from_basis(sp, l1->m),
                          Lagrangian::from_basis(sp, need(l2).m),
                          Lagrangian::from_basis(sp, need(l3).m));
  });
}

tp_status tp_lag_triple(const tp_matrix* l1, const tp_matrix* l2, const tp_matrix* l3,
                        int* verdict) {
  return guarded([&] {
    need_out(verdict);
    const SymplecticSpace sp = space_for(need(l1).m);
    *verdict = is_positive_lag_triple(sp, Lagrangian::from_basis(sp, l1->m),
                                      Lagrangian::from_basis(sp, need(l2).m),
                                      Lagrangian::from_basis(sp, need(l3).m))
                   ? 1
                   : 0;
  });
}

tp_status tp_sp_factor(const tp_matrix* g, int* verdict, char** factors) {
  return guarded([&] {
    need_out(verdict);
    const Matrix& m = need(g).m;
    if (!m.is_square() || m.rows() % 2 != 0 || m.rows() == 0)
      fail(ErrorKind::Dimension, "symplectic matrix must be 2n x 2n");
    const SymplecticSpace sp = SymplecticSpace::of(m.rows() / 2);
    if (!sp.is_symplectic(m)) fail(ErrorKind::Domain, "matrix is not symplectic");
    const auto f = factor_sp_positive(sp, m);
    *verdict = f ? 1 : 0;
    set_witness(factors, f ? json{{"M", io::matrix_to_json(f->m)},
                                  {"A", io::matrix_to_json(f->a)},
                                  {"N", io::matrix_to_json(f->n)}}
                           : json());
  });
}

tp_status tp_so3q_F(int q, const tp_b2params* p, tp_matrix** out) {
  return guarded([&] {
    need_out(out);
    *out = new tp_matrix{F_word(QFormConfig::make(q), need(p).p).matrix};
  });
}

tp_status tp_so3q_braid(int q, const tp_b2params* p, tp_b2params** out) {
  return guarded([&] {
    need_out(out);
    const B2Params& in = need(p).p;
    if (in.word != Word{1, 2, 1, 2}) fail(ErrorKind::Domain, "braid expects the word (1,2,1,2)");
    const QFormConfig cfg = QFormConfig::make(q);
    const auto* x1 = std::get_if<Rational>(&in.slots[0]);
    const auto* v1 = std::get_if<Vector>(&in.slots[1]);
    const auto* x2 = std::get_if<Rational>(&in.slots[2]);
    const auto* v2 = std::get_if<Vector>(&in.slots[3]);
    if (!x1 || !v1 || !x2 || !v2) fail(ErrorKind::Domain, "slot types must be scalar, vector, scalar, vector");
    const B2Transition t = braid_transition(cfg, *x1, *v1, *x2, *v2);
    *out = new tp_b2params{{{2, 1, 2, 1}, {t.w1, t.y1, t.w2, t.y2}}};
  });
}

tp_status tp_so3q_invert(int q, const tp_matrix* u, const int* word, size_t word_len,
                         int* verdict, tp_b2params** out) {
  return guarded([&] {
    need_out(verdict);
    need_out(out);
    *out = nullptr;
    const auto p = invert_F(QFormConfig::make(q), need(u).m, word_of(word, word_len));
    *verdict = p ? 1 : 0;
    if (p) *out = new tp_b2params{*p};
  });
}

tp_status tp_so3q_exp(int q, const char* a, const char* w, tp_matrix** out) {
  return guarded([&] {
    need_out(out);
    const Rational av = io::scalar_from_json(json(std::string(need_str(a))), "a");
    const Vector wv = io::vector_from_json(io::parse_document(need_str(w)), "w");
    *out = new tp_matrix{exp_principal(QFormConfig::make(q), av, wv).matrix};
  });
}

tp_status tp_so3q_exp_params(int q, const char* a, const char* w, tp_b2params** out) {
  return guarded([&] {
    need_out(out);
    const QFormConfig cfg = QFormConfig::make(q);
    const Rational av = io::scalar_from_json(json(std::string(need_str(a))), "a");
    const Vector wv = io::vector_from_json(io::parse_document(need_str(w)), "w");
    if (wv.size() != cfg.cone_dim()) fail(ErrorKind::Dimension, "w: expected length " + std::to_string(cfg.cone_dim()));
    *out = new tp_b2params{{{2, 1, 2, 1},
                            {Rational(1, 3) * wv, Rational(3, 4) * av, Rational(2, 3) * wv,
                             Rational(1, 4) * av}}};
  });
}

tp_status tp_so3q_triple(int q, const tp_matrix* flag, int* verdict, tp_matrix** coordinate) {
  return guarded([&] {
    need_out(verdict);
    const QFormConfig cfg = QFormConfig::make(q);
    const IsotropicFlag s = IsotropicFlag::from_basis(cfg, need(flag).m);
    const UThetaElement u = so3q_coordinate(cfg, s);
    *verdict = invert_F(cfg, u.matrix, {1, 2, 1, 2}) ? 1 : 0;
    if (coordinate != nullptr) *coordinate = new tp_matrix{u.matrix};
  });
}

tp_status tp_so3q_in_cone(int q, const char* v, int* verdict) {
  return guarded([&] {
    need_out(verdict);
    const Vector vv = io::vector_from_json(io::parse_document(need_str(v)), "v");
    *verdict = in_cone_alpha2(QFormConfig::make(q), vv) ? 1 : 0;
  });
}

tp_status tp_sample(const char* kind, size_t size, uint64_t seed, size_t count, char** out) {
  return guarded([&] {
    need_out(out);
    const std::string k = need_str(kind);
    Rng rng(seed);
    json items = json::array();
    for (std::size_t i = 0; i < count; ++i) {
      if (k == "tp") {
        items.push_back(io::matrix_to_json(sample_tp_matrix(rng, size)));
      } else if (k == "unipotent") {
        items.push_back(io::matrix_to_json(sample_positive_unipotent(rng, size).matrix()));
      } else if (k == "params") {
        const ReducedWord w0 = longest_word(CoxeterSystem::type_a(size));
        items.push_back(io::positive_params_to_json(sample_positive_params(rng, w0.letters())));
      } else if (k == "symplectic") {
        items.push_back(io::matrix_to_json(sample_symplectic(rng, SymplecticSpace::of(size))));
      } else if (k == "lagrangian") {
        items.push_back(
            io::matrix_to_json(sample_lagrangian(rng, SymplecticSpace::of(size)).basis()));
      } else if (k == "cone") {
        items.push_back(
            io::vector_to_json(sample_cone_vector(rng, QFormConfig::make(static_cast<int>(size)))));
      } else if (k == "b2") {
        items.push_back(io::b2_params_to_json(sample_interior_b2(
            rng, QFormConfig::make(static_cast<int>(size)), {1, 2, 1, 2})));
      } else {
        fail(ErrorKind::Parse,
             "kind: expected one of tp, unipotent, params, symplectic, lagrangian, cone, b2");
      }
    }
    *out = dup(items);
  });
}

tp_status tp_selftest(uint64_t seed, size_t scale, int* verdict, char** report) {
  return guarded([&] {
    need_out(verdict);
    need_out(report);
    const json r = run_selftest(seed, scale);
    *verdict = r["verdict"] == "pass" ? 1 : 0;
    *report = dup(r);
  });
}

}  // extern "C"
