/* cdtower: exact Cayley-Dickson tower algebras, interlaced 2x2 matrix model,
 * and identity verification campaigns, behind a plain C interface.
 *
 * Conventions:
 *  - Every function that can fail returns an int error code (CDT_OK on
 *    success) and reports results through out-parameters. On failure the
 *    out-parameters are untouched and cdt_last_error_message() describes
 *    what went wrong (thread-local).
 *  - Sign patterns are strings of '+'/'-' characters, one per doubling
 *    level; "" denotes the level-0 algebra (the rationals). The level is
 *    always the pattern length.
 *  - Orientation: 0 selects the default doubling formula, 1 the
 *    eq1-verbatim variant (conjugation moved to the other factor of the low
 *    cross term).
 *  - Strings returned through char** are heap-allocated; release them with
 *    cdt_string_free. Handles are released with the matching *_free.
 */

#ifndef CDTOWER_H
#define CDTOWER_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CDT_API __declspec(dllexport)
#else
#define CDT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum {
  CDT_OK = 0,
  CDT_ERR_INVALID_ARGUMENT = 1,
  CDT_ERR_PARSE = 2,
  CDT_ERR_INDEX_RANGE = 3,
  CDT_ERR_SIGNATURE_MISMATCH = 4,
  CDT_ERR_NOT_INVERTIBLE = 5,
  CDT_ERR_STRUCTURE = 6,
  CDT_ERR_LEVEL_BOUND = 7,
  CDT_ERR_DIVISION_BY_ZERO = 8,
  CDT_ERR_JSON = 9,
  CDT_ERR_INTERNAL = 10
};

typedef struct cdt_element cdt_element; /* one algebra element */
typedef struct cdt_matrix cdt_matrix;   /* embedded 2x2 model M(o) with its gamma */

CDT_API const char* cdt_version(void);

/* Description of the most recent failure on this thread. Valid until the
 * next failing call; never NULL. */
CDT_API const char* cdt_last_error_message(void);

CDT_API void cdt_string_free(char* s);
CDT_API void cdt_element_free(cdt_element* e);
CDT_API void cdt_matrix_free(cdt_matrix* m);

/* ---- element construction ---- */

CDT_API int cdt_element_zero(const char* signs, cdt_element** out);
CDT_API int cdt_element_basis(const char* signs, size_t k, cdt_element** out);

/* Parses and evaluates an expression ("(e0+e4)*(e0-e4)", "inv(e1+e2)", ...).
 * If warnings_text is non-NULL it receives a (possibly empty) newline-
 * separated list of reassociation warnings for unparenthesized product
 * chains whose groupings disagree. */
CDT_API int cdt_element_eval(const char* expr, const char* signs, int orientation,
                             char** warnings_text, cdt_element** out);

CDT_API int cdt_element_from_json(const char* json_text, cdt_element** out);

/* ---- element accessors and operations ---- */

CDT_API int cdt_element_level(const cdt_element* e, int* out);
CDT_API int cdt_element_coeff(const cdt_element* e, size_t k, char** out); /* "p/q" or "p" */
CDT_API int cdt_element_equal(const cdt_element* a, const cdt_element* b, int* out);
CDT_API int cdt_element_is_zero(const cdt_element* e, int* out);
CDT_API int cdt_element_format(const cdt_element* e, char** out);
CDT_API int cdt_element_to_json(const cdt_element* e, int indent, char** out);

CDT_API int cdt_element_add(const cdt_element* a, const cdt_element* b, cdt_element** out);
CDT_API int cdt_element_sub(const cdt_element* a, const cdt_element* b, cdt_element** out);
CDT_API int cdt_element_neg(const cdt_element* a, cdt_element** out);
CDT_API int cdt_element_mul(const cdt_element* a, const cdt_element* b, int orientation,
                            cdt_element** out);
CDT_API int cdt_element_conjugate(const cdt_element* a, cdt_element** out);
CDT_API int cdt_element_norm(const cdt_element* a, int orientation, char** out);

/* Conjugate-over-norm inverse. Fails with CDT_ERR_NOT_INVERTIBLE when the
 * norm is zero. left_ok/right_ok (nullable) report whether the value
 * verifies as a left resp. right inverse; both are expected to be 1. */
CDT_API int cdt_element_inverse(const cdt_element* a, int orientation, cdt_element** out,
                                int* left_ok, int* right_ok);

/* ---- multiplication tables ---- */

/* Full basis table e_j * e_k = sign * e_m. Levels above 6 are rejected with
 * CDT_ERR_LEVEL_BOUND. CSV header is "j,k,sign,m". Byte-deterministic. */
CDT_API int cdt_table_csv(const char* signs, int orientation, char** out);
CDT_API int cdt_table_json(const char* signs, int orientation, int indent, char** out);

/* ---- interlaced 2x2 matrix model ---- */

CDT_API int cdt_matrix_embed(const cdt_element* e, cdt_matrix** out); /* level >= 1 */
CDT_API int cdt_matrix_extract(const cdt_matrix* m, cdt_element** out);
CDT_API int cdt_matrix_format(const cdt_matrix* m, char** out);
CDT_API int cdt_matrix_to_json(const cdt_matrix* m, int indent, char** out);

/* Adjugate-based one-sided inverse diagnostics for the embedded matrix:
 * both deltas, both candidates, nucleus hypotheses and exact identity
 * verdicts. Fails with CDT_ERR_NOT_INVERTIBLE when a delta has zero norm.
 * json_out and text_out are each optional (pass NULL to skip). */
CDT_API int cdt_matrix_inverse_report(const cdt_matrix* m, int orientation, int indent,
                                      char** json_out, char** text_out);

/* ---- verification campaigns ---- */

/* Runs one law campaign. Laws: "mnemonic", "alternative", "flexible",
 * "moufang", "norm", "adjugate". Levels <= 4 run the exhaustive basis
 * campaign plus `samples` seeded dense random tuples where the law is not
 * multilinear; higher levels run the random campaign alone. holds receives
 * the verdict; json_out/text_out (each optional) receive the report. */
CDT_API int cdt_verify(const char* law, const char* signs, int orientation, uint64_t seed,
                       int samples, int indent, char** json_out, char** text_out, int* holds);

/* Documented expectation for a (law, signs) cell. known receives 0 when the
 * cell is outside the shipped table, otherwise 1 with holds filled in. */
CDT_API int cdt_expected_verdict(const char* law, const char* signs, int* known, int* holds);

/* The embedded expected-verdict table, verbatim JSON. */
CDT_API int cdt_expected_verdicts_json(char** out);

/* Structured family scan plus `budget` seeded random pairs; every reported
 * pair (x, y) satisfies x != 0, y != 0, x*y = 0 exactly. */
CDT_API int cdt_zero_divisors(const char* signs, int orientation, int budget, uint64_t seed,
                              int indent, char** json_out, char** text_out, size_t* count);

#ifdef __cplusplus
}
#endif

#endif /* CDTOWER_H */
