#ifndef OKUBO_H
#define OKUBO_H

/* C interface to the okubo library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every call that can fail returns an okb_status; on failure the message is
 * available from okb_last_error() on the same thread.  Strings returned
 * through char** are heap allocated and released with okb_string_free. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define OKB_API __declspec(dllexport)
#else
#define OKB_API __attribute__((visibility("default")))
#endif

typedef enum okb_status {
  OKB_OK = 0,
  OKB_INVALID_ARGUMENT,
  OKB_PARSE_ERROR,
  OKB_NON_PRIME_CHARACTERISTIC,
  OKB_REDUCIBLE_MODULUS,
  OKB_DIVISION_BY_ZERO,
  OKB_MIXED_FIELDS,
  OKB_ZERO_ELEMENT,
  OKB_FACTORIZATION_OVERFLOW,
  OKB_NOT_QUADRATIC_EXTENSION,
  OKB_FIELD_TOO_LARGE,
  OKB_WRONG_CHARACTERISTIC,
  OKB_NOT_IDEMPOTENT,
  OKB_UNEXPECTED_RANK,
  OKB_NOT_TRACE_ZERO,
  OKB_NO_OMEGA,
  OKB_STRUCTURE_MISMATCH,
  OKB_DEGENERATE_FORM,
  OKB_BAD_EXTENSION,
  OKB_CLOSURE_OVERFLOW,
  OKB_GROUP_TOO_LARGE,
  OKB_NOT_SUBGROUP,
  OKB_NOT_NORMAL,
  OKB_WRONG_RANK,
  OKB_INTERNAL_ERROR
} okb_status;

typedef struct okb_field okb_field;
typedef struct okb_scalar okb_scalar;
typedef struct okb_algebra okb_algebra;
typedef struct okb_vector okb_vector;
typedef struct okb_report okb_report;

typedef enum okb_op { OKB_ADD, OKB_SUB, OKB_MUL, OKB_DIV, OKB_NEG, OKB_INV } okb_op;

OKB_API const char* okb_status_string(okb_status status);
/* Message of the last failed call on this thread, "" if none. */
OKB_API const char* okb_last_error(void);
OKB_API void okb_string_free(char* s);

/* Fields: "2", "4", "7", "GF(9)", "Q". */
OKB_API okb_status okb_field_new(const char* spec, okb_field** out);
OKB_API void okb_field_free(okb_field* f);
OKB_API okb_status okb_field_name(const okb_field* f, char** out);
/* Order of the field, 0 for the rationals. */
OKB_API uint64_t okb_field_order(const okb_field* f);
OKB_API uint32_t okb_field_characteristic(const okb_field* f);

OKB_API okb_status okb_scalar_parse(const okb_field* f, const char* text, okb_scalar** out);
OKB_API void okb_scalar_free(okb_scalar* s);
OKB_API okb_status okb_scalar_to_string(const okb_scalar* s, char** out);
/* b is ignored for OKB_NEG and OKB_INV and may be NULL. */
OKB_API okb_status okb_scalar_arith(okb_op op, const okb_scalar* a, const okb_scalar* b, okb_scalar** out);
OKB_API okb_status okb_scalar_equal(const okb_scalar* a, const okb_scalar* b, int* out);

/* O_{alpha,beta}; alpha and beta must be nonzero. */
OKB_API okb_status okb_algebra_new(const okb_field* f, const char* alpha, const char* beta, okb_algebra** out);
OKB_API void okb_algebra_free(okb_algebra* a);
OKB_API okb_status okb_algebra_name(const okb_algebra* a, char** out);
/* Index 0..7 in the order z~_{1,0}, z~_{2,0}, z~_{0,1}, z~_{0,2},
 * z~_{1,1}, z~_{2,2}, z~_{1,2}, z~_{2,1}. */
OKB_API okb_status okb_vector_basis(const okb_algebra* a, int index, okb_vector** out);
/* Eight comma or space separated coordinates. */
OKB_API okb_status okb_vector_parse(const okb_algebra* a, const char* text, okb_vector** out);
OKB_API void okb_vector_free(okb_vector* v);
/* "[c1,...,c8]". */
OKB_API okb_status okb_vector_to_string(const okb_vector* v, char** out);
/* Linear combination of basis labels. */
OKB_API okb_status okb_vector_format(const okb_vector* v, char** out);
OKB_API okb_status okb_multiply(const okb_vector* x, const okb_vector* y, okb_vector** out);
OKB_API okb_status okb_norm(const okb_vector* x, okb_scalar** out);
OKB_API okb_status okb_polar(const okb_vector* x, const okb_vector* y, okb_scalar** out);

/* Reports behind the command line tool.  NULL strings select defaults:
 * the command's default field, alpha = beta = 1, targets = 1. */
typedef struct okb_request {
  const char* command; /* table verify phi weyl aut autfull unitary idem iso */
  const char* field;
  const char* alpha;
  const char* beta;
  const char* target_alpha;
  const char* target_beta;
  uint64_t seed;
} okb_request;

OKB_API okb_status okb_run(const okb_request* request, okb_report** out);
OKB_API void okb_report_free(okb_report* r);
OKB_API int okb_report_passed(const okb_report* r);
/* Borrowed strings, valid until okb_report_free. */
OKB_API const char* okb_report_text(const okb_report* r);
OKB_API const char* okb_report_json(const okb_report* r);
OKB_API const char* okb_report_failures(const okb_report* r);

#ifdef __cplusplus
}
#endif

#endif
