/* SPDX-License-Identifier: Apache-2.0 */
/* Copyright (c) 2026 The exnil Authors */

#ifndef EXNIL_EXNIL_H
#define EXNIL_EXNIL_H

#include <stddef.h>

#if defined(EXNIL_BUILDING_LIBRARY)
#define EXNIL_API __attribute__((visibility("default")))
#else
#define EXNIL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every fallible call returns a status; on failure exnil_last_error() describes it. */
typedef enum exnil_status {
  EXNIL_OK = 0,
  EXNIL_E_NULL = 1,         /* required pointer argument was NULL */
  EXNIL_E_PARSE = 2,        /* malformed text or JSON */
  EXNIL_E_STRUCTURAL = 3,   /* mismatched sizes or indices */
  EXNIL_E_PRECONDITION = 4, /* input outside the operation's domain */
  EXNIL_E_CAP = 5,          /* a computation cap was exceeded */
  EXNIL_E_INVARIANT = 6,    /* internal consistency check failed */
  EXNIL_E_INTERNAL = 7
} exnil_status;

/* Message of the last failed call on this thread; "" if none. Valid until the next call. */
EXNIL_API const char* exnil_last_error(void);
EXNIL_API const char* exnil_version(void);
EXNIL_API const char* exnil_status_name(exnil_status s);

/* Strings returned through char** are owned by the caller. */
EXNIL_API void exnil_string_free(char* s);

/* ---- commands ---------------------------------------------------------- */

typedef struct exnil_result exnil_result;

/* Runs a CLI command with arguments given as a JSON object, e.g.
 * exnil_run("schubert", "{\"n\":3,\"perm\":\"s1 s2\"}", &r). */
EXNIL_API exnil_status exnil_run(const char* command, const char* args_json, exnil_result** out);
EXNIL_API const char* exnil_result_text(const exnil_result* r);
/* Pretty-printed JSON with two-space indentation. */
EXNIL_API const char* exnil_result_json(const exnil_result* r);
/* 1 when every verification inside the command passed. */
EXNIL_API int exnil_result_ok(const exnil_result* r);
/* 1 when a check was refused for exceeding a cap. */
EXNIL_API int exnil_result_cap_exceeded(const exnil_result* r);
EXNIL_API void exnil_result_free(exnil_result* r);

/* Number of commands and the i-th command name. */
EXNIL_API size_t exnil_command_count(void);
EXNIL_API const char* exnil_command_name(size_t i);

/* ---- polynomials ------------------------------------------------------- */

typedef struct exnil_poly exnil_poly;

EXNIL_API exnil_status exnil_poly_parse(int n, const char* text, exnil_poly** out);
EXNIL_API exnil_status exnil_poly_add(const exnil_poly* a, const exnil_poly* b, exnil_poly** out);
EXNIL_API exnil_status exnil_poly_mul(const exnil_poly* a, const exnil_poly* b, exnil_poly** out);
/* Divided difference d_i. */
EXNIL_API exnil_status exnil_poly_dd(int i, const exnil_poly* f, exnil_poly** out);
/* Schubert polynomial of a permutation given as "s1 s2" or "[2,3,1]". */
EXNIL_API exnil_status exnil_schubert(int n, const char* perm, exnil_poly** out);
EXNIL_API exnil_status exnil_poly_to_string(const exnil_poly* f, char** out);
EXNIL_API exnil_status exnil_poly_to_json(const exnil_poly* f, char** out);
/* 1 if equal, 0 if not, -1 on error. */
EXNIL_API int exnil_poly_equal(const exnil_poly* a, const exnil_poly* b);
EXNIL_API void exnil_poly_free(exnil_poly* f);

/* ---- extended nilHecke elements ---------------------------------------- */

typedef struct exnil_nh exnil_nh;

EXNIL_API exnil_status exnil_nh_parse(int n, const char* text, exnil_nh** out);
EXNIL_API exnil_status exnil_nh_from_json(int n, const char* json, exnil_nh** out);
EXNIL_API exnil_status exnil_nh_mul(const exnil_nh* a, const exnil_nh* b, exnil_nh** out);
EXNIL_API exnil_status exnil_nh_to_string(const exnil_nh* e, char** out);
EXNIL_API exnil_status exnil_nh_to_json(const exnil_nh* e, char** out);
EXNIL_API int exnil_nh_equal(const exnil_nh* a, const exnil_nh* b);
EXNIL_API void exnil_nh_free(exnil_nh* e);

#ifdef __cplusplus
}
#endif

#endif /* EXNIL_EXNIL_H */
