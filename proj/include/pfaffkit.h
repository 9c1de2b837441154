/*
 * Copyright 2026 The pfaffkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PFAFFKIT_H
#define PFAFFKIT_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(PFAFFKIT_BUILDING)
#define PK_API __declspec(dllexport)
#else
#define PK_API __declspec(dllimport)
#endif
#else
#define PK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pk_status {
  PK_OK = 0,
  PK_FAIL = 1,       /* a verification ran and at least one check failed */
  PK_EPARAM = 2,     /* bad parameters or out-of-range sizes */
  PK_EINTERNAL = 3,
  PK_EPARSE = 4      /* malformed JSON or descriptor */
} pk_status;

typedef struct pk_report pk_report;
typedef struct pk_ratfn pk_ratfn;

PK_API const char* pk_version(void);

/*
 * Message of the last failing call on this thread, or "" if none. Valid
 * until the next call into the library from the same thread.
 */
PK_API const char* pk_last_error(void);

/* Strings returned through char** out-parameters are owned by the caller. */
PK_API void pk_string_free(char* s);

/*
 * Runs one verification. params_json may be NULL or a JSON object with keys
 * n, m, r, k, p, alpha, beta, shape, variant and producers (role -> descriptor).
 * On PK_OK or PK_FAIL *out receives a report; otherwise *out is NULL.
 */
PK_API pk_status pk_verify(const char* id, const char* params_json, pk_report** out);
PK_API int pk_report_passed(const pk_report* rep);
PK_API pk_status pk_report_json(const pk_report* rep, int with_timing, char** out);
PK_API pk_status pk_report_text(const pk_report* rep, int with_timing, char** out);
PK_API void pk_report_free(pk_report* rep);

/* Space separated list of verification ids. */
PK_API const char* pk_verification_ids(void);

/* Rational functions in the JSON term format, {"num":..,"den":..} or a polynomial. */
PK_API pk_status pk_ratfn_parse(const char* json, pk_ratfn** out);
PK_API pk_status pk_ratfn_equal(const pk_ratfn* f, const pk_ratfn* g, int* equal);
PK_API pk_status pk_ratfn_to_json(const pk_ratfn* f, char** out);
PK_API void pk_ratfn_free(pk_ratfn* f);

/*
 * Pfaffian of an antisymmetric matrix, or the hafnian when the matrix is
 * marked symmetric. Input {"n":N,"entries":[{"i","j","value"}],"symmetric":bool};
 * output {"kind":"pfaffian"|"hafnian","value":ratfn}.
 */
PK_API pk_status pk_pfaffian_json(const char* matrix_json, char** out);

/* Standard tableaux of a shape (JSON array of parts) with their graph ranks. */
PK_API pk_status pk_tableaux_json(const char* shape_json, char** out);
/* Young basis of a shape with its matrix on the Specht basis. */
PK_API pk_status pk_young_basis_json(const char* shape_json, char** out);
PK_API pk_status pk_young_basis_text(const char* shape_json, char** out);

#ifdef __cplusplus
}
#endif

#endif
