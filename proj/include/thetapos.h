#ifndef THETAPOS_H
#define THETAPOS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define TP_API __attribute__((visibility("default")))
#else
#define TP_API
#endif

typedef enum tp_status {
  TP_OK = 0,
  TP_ERR_PARSE = 1,
  TP_ERR_DIMENSION = 2,
  TP_ERR_INDEX = 3,
  TP_ERR_DOMAIN = 4,
  TP_ERR_SINGULAR = 5,
  TP_ERR_TRANSVERSALITY = 6,
  TP_ERR_DECOMPOSITION = 7,
  TP_ERR_LIMIT = 8,
  TP_ERR_NULL_ARGUMENT = 9,
  TP_ERR_INTERNAL = 10
} tp_status;

/* Message of the last failed call on this thread ("" if none). */
TP_API const char* tp_last_error(void);
TP_API const char* tp_status_name(tp_status status);

/* Strings returned through char** out-parameters are owned by the caller. */
TP_API void tp_string_free(char* s);

/* Dense rational matrix in the shared JSON format
   {"rows": n, "cols": m, "entries": [["p/q", ...], ...]}. `field` names the
   document location in parse diagnostics (NULL means "matrix"). */
typedef struct tp_matrix tp_matrix;
TP_API tp_status tp_matrix_from_json(const char* json, const char* field, tp_matrix** out);
TP_API tp_status tp_matrix_to_json(const tp_matrix* m, char** out);
TP_API tp_status tp_matrix_dims(const tp_matrix* m, size_t* rows, size_t* cols);
TP_API void tp_matrix_free(tp_matrix* m);

/* Type-A parameters {"word": [...], "values": ["p/q", ...]}. */
typedef struct tp_params tp_params;
TP_API tp_status tp_params_from_json(const char* json, const char* field, tp_params** out);
TP_API tp_status tp_params_to_json(const tp_params* p, char** out);
TP_API void tp_params_free(tp_params* p);

/* B2 parameters {"word": [...], "slots": [{"scalar": ..} | {"vector": [..]}]}. */
typedef struct tp_b2params tp_b2params;
TP_API tp_status tp_b2params_from_json(const char* json, const char* field, tp_b2params** out);
TP_API tp_status tp_b2params_to_json(const tp_b2params* p, char** out);
TP_API void tp_b2params_free(tp_b2params* p);

/* Verdicts are written as 1 (true) or 0 (false). Witness strings are JSON or
   NULL when there is nothing to report. */

/* Total positivity; on false, *witness holds a non-positive minor. */
TP_API tp_status tp_is_totally_positive(const tp_matrix* m, int* verdict, char** witness);
/* Whitney factorization g = lower * diag * upper as JSON {lower, diag, upper}. */
TP_API tp_status tp_whitney_factor(const tp_matrix* g, char** factors);
/* Proximality: n distinct positive eigenvalues, with isolating intervals. */
TP_API tp_status tp_eigenvalue_separation(const tp_matrix* g, int* verdict, char** intervals);

/* F_w(values) in U for GL(n); mirrored != 0 uses the negated cone. */
TP_API tp_status tp_param_F(const tp_params* p, size_t n, int mirrored, tp_matrix** out);
/* Positivity of a unit upper triangular matrix; witness is an unforced minor. */
TP_API tp_status tp_is_unipotent_positive(const tp_matrix* u, int mirrored, int* verdict,
                                          char** witness);
TP_API tp_status tp_word_transition(const tp_params* p, const int* target, size_t target_len,
                                    size_t n, int mirrored, tp_params** out);

/* Flags are n x n basis matrices. orientation: 0 = GL, 1 = SL. */
TP_API tp_status tp_flag_triple(const tp_matrix* f1, const tp_matrix* t, const tp_matrix* f3,
                                int orientation, int* verdict, char** certificate);
TP_API tp_status tp_flag_triple_standard(const tp_matrix* t, int* verdict, tp_matrix** coordinate);
TP_API tp_status tp_flag_quadruple(const tp_matrix* f1, const tp_matrix* s, const tp_matrix* s2,
                                   const tp_matrix* f4, int orientation, int* verdict);

/* Lagrangians are 2n x n basis matrices in (R^2n, omega = [[0, I], [-I, 0]]). */
TP_API tp_status tp_maslov_index(const tp_matrix* l1, const tp_matrix* l2, const tp_matrix* l3,
                                 long* index);
TP_API tp_status tp_lag_triple(const tp_matrix* l1, const tp_matrix* l2, const tp_matrix* l3,
                               int* verdict);
/* Factor a symplectic g as V(M) H(A) W(N) with M, N positive definite and
   det A > 0; *verdict = 0 when g is outside that semigroup. */
TP_API tp_status tp_sp_factor(const tp_matrix* g, int* verdict, char** factors);

/* SO(3,q), 4 <= q <= 16. */
TP_API tp_status tp_so3q_F(int q, const tp_b2params* p, tp_matrix** out);
/* p on (1,2,1,2) -> parameters on (2,1,2,1) with the same product. */
TP_API tp_status tp_so3q_braid(int q, const tp_b2params* p, tp_b2params** out);
/* *verdict = 0 (NotPositive) leaves *out NULL. */
TP_API tp_status tp_so3q_invert(int q, const tp_matrix* u, const int* word, size_t word_len,
                                int* verdict, tp_b2params** out);
/* exp(a E_alpha1 + w E_alpha2); a is "p/q", w a JSON array of scalars. */
TP_API tp_status tp_so3q_exp(int q, const char* a, const char* w, tp_matrix** out);
/* The parameters (w/3, 3a/4, 2w/3, a/4) on (2,1,2,1) whose product equals
   exp(a E_alpha1 + w E_alpha2) for a > 0 and w in the open cone. */
TP_API tp_status tp_so3q_exp_params(int q, const char* a, const char* w, tp_b2params** out);
/* (E, S, F) with S given by a (q+3) x 2 basis; *coordinate is u with u E = S. */
TP_API tp_status tp_so3q_triple(int q, const tp_matrix* flag, int* verdict, tp_matrix** coordinate);
TP_API tp_status tp_so3q_in_cone(int q, const char* v, int* verdict);

/* Random positive elements. kind: "tp", "unipotent", "params", "symplectic",
   "lagrangian", "cone", "b2". size is n (or q for "cone" and "b2"). Output is a
   JSON array of `count` items. */
TP_API tp_status tp_sample(const char* kind, size_t size, uint64_t seed, size_t count,
                           char** out);

/* Full invariant suite; *verdict = 1 when every suite passes. */
TP_API tp_status tp_selftest(uint64_t seed, size_t scale, int* verdict, char** report);

#ifdef __cplusplus
}
#endif

#endif
