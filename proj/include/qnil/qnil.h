// Copyright 2026 The qnil Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QNIL_QNIL_H
#define QNIL_QNIL_H

/*
 * C interface to the qnil graded-algebra engine.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Functions return a qnil_status; on failure the
 * thread-local message from qnil_last_error() describes the problem. Strings
 * returned through char** out-parameters are released with qnil_string_free.
 */

#include <stddef.h>

#if defined(_WIN32)
#if defined(QNIL_BUILDING_LIBRARY)
#define QNIL_API __declspec(dllexport)
#else
#define QNIL_API __declspec(dllimport)
#endif
#else
#define QNIL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qnil_status {
    QNIL_OK = 0,
    QNIL_PARSE_ERROR = 1,
    QNIL_ARITY_ERROR = 2,
    QNIL_UNIVERSE_ERROR = 3,
    QNIL_SECTOR_ERROR = 4,
    QNIL_PARITY_ERROR = 5,
    QNIL_BODY_ERROR = 6,
    QNIL_NOT_INVERTIBLE_ERROR = 7,
    QNIL_SHAPE_ERROR = 8,
    QNIL_INDEX_ERROR = 9,
    QNIL_SPLIT_ERROR = 10,
    QNIL_RANGE_ERROR = 11,
    QNIL_INVALID_ARGUMENT = 12,
    QNIL_INTERNAL_ERROR = 13
} qnil_status;

typedef struct qnil_state qnil_state;
typedef struct qnil_report qnil_report;
typedef struct qnil_multivector qnil_multivector;

typedef struct qnil_run_options {
    double tolerance;  /* zero tolerance for decisions and pruning */
    int pair_i;        /* wronskian: first qubit (1-based) */
    int pair_j;        /* wronskian: second qubit (1-based) */
    const int *split;  /* factor: left block, 1-based qubit indices */
    size_t split_len;
} qnil_run_options;

QNIL_API const char *qnil_version(void);

/* "NotInvertibleError", "ParseError", ...; "Ok" for QNIL_OK. */
QNIL_API const char *qnil_status_name(qnil_status status);

/* Message of the most recent failure on this thread. */
QNIL_API const char *qnil_last_error(void);

/* Line and column of the most recent QNIL_PARSE_ERROR on this thread, 0 if
 * none. */
QNIL_API void qnil_last_error_position(int *line, int *column);

/* 1 for parse-stage failures (syntax, ket arity), 0 otherwise. */
QNIL_API int qnil_status_is_parse_error(qnil_status status);

QNIL_API void qnil_string_free(char *s);

/* Defaults: tolerance 1e-12, pair (1,2), split {1}. */
QNIL_API qnil_run_options qnil_run_options_default(void);

/* ---- states ---------------------------------------------------------- */

/* Parses and evaluates one state expression (see README for the grammar). */
QNIL_API qnil_status qnil_state_parse(const char *text, double tolerance, qnil_state **out);
QNIL_API qnil_status qnil_state_from_json(const char *json, double tolerance, qnil_state **out);
QNIL_API qnil_status qnil_state_to_json(const qnil_state *state, char **out);
/* "element", "qubit", "superqubit", "superqubit2" or "squbit". */
QNIL_API const char *qnil_state_kind(const qnil_state *state);
QNIL_API void qnil_state_free(qnil_state *state);

/* Canonical, fully parenthesized rendering of an expression. */
QNIL_API qnil_status qnil_expr_normalize(const char *text, char **out);

/* ---- commands -------------------------------------------------------- */

/* command: tangle2, wronskian, factor, sdet, stau, ber, norm, squbit-norm,
 * sectors. options may be NULL for the defaults. */
QNIL_API qnil_status qnil_run(const qnil_state *state, const char *command, const qnil_run_options *options,
                              qnil_report **out);
QNIL_API void qnil_report_body(const qnil_report *report, double *re, double *im);
/* JSON document owned by the report. */
QNIL_API const char *qnil_report_json(const qnil_report *report);
QNIL_API void qnil_report_free(qnil_report *report);

/* ---- multivectors ---------------------------------------------------- */

QNIL_API qnil_status qnil_multivector_from_json(const char *json, qnil_multivector **out);
QNIL_API qnil_status qnil_multivector_to_json(const qnil_multivector *m, char **out);
QNIL_API qnil_status qnil_multivector_mul(const qnil_multivector *a, const qnil_multivector *b,
                                          qnil_multivector **out);
QNIL_API qnil_status qnil_multivector_add(const qnil_multivector *a, const qnil_multivector *b,
                                          qnil_multivector **out);
QNIL_API qnil_status qnil_multivector_sharp(const qnil_multivector *a, qnil_multivector **out);
QNIL_API qnil_status qnil_multivector_star(const qnil_multivector *a, qnil_multivector **out);
QNIL_API qnil_status qnil_multivector_invert(const qnil_multivector *a, qnil_multivector **out);
QNIL_API void qnil_multivector_body(const qnil_multivector *a, double *re, double *im);
QNIL_API void qnil_multivector_free(qnil_multivector *m);

#ifdef __cplusplus
}
#endif

#endif /* QNIL_QNIL_H */
