// Copyright 2026 The qcptp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* qcptp.h: C interface of the qcptp shared library. */

#ifndef QCPTP_H
#define QCPTP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define QCPTP_API __declspec(dllexport)
#else
#define QCPTP_API __attribute__((visibility("default")))
#endif

typedef struct qcptp_system qcptp_system;
typedef struct qcptp_buffer qcptp_buffer;

typedef enum {
    QCPTP_OK = 0,
    QCPTP_E_INVALID_INPUT = 1,
    QCPTP_E_CONSTRAINT_VIOLATION,
    QCPTP_E_NO_REAL_SHIFT,
    QCPTP_E_UNSUPPORTED,
    QCPTP_E_OVERFLOW,
    QCPTP_E_NOT_HURWITZ,
    QCPTP_E_NOT_POSITIVE_DEFINITE,
    QCPTP_E_BUDGET_EXCEEDED,
    QCPTP_E_TRUNCATION_BREACH,
    QCPTP_E_NON_UNIFORM_TEMPERATURE,
    QCPTP_E_NOT_UNITARY,
    QCPTP_E_NOT_G_COMMUTING,
    QCPTP_E_STEP_UNDERFLOW,
    QCPTP_E_DEGENERATE,
    QCPTP_E_UNEMBEDDABLE,
    QCPTP_E_NULL_ARGUMENT = 100,
    QCPTP_E_INTERNAL = 101
} qcptp_status;

typedef enum { QCPTP_APPENDIX_B = 0, QCPTP_MAIN_TEXT = 1 } qcptp_convention;

/* Numbering follows the CLI exit codes. */
typedef enum { QCPTP_CPTP = 0, QCPTP_NOT_CPTP = 1, QCPTP_MARGINAL = 3 } qcptp_verdict;

typedef struct {
    double tol;                  /* PSD band, default 1e-10 */
    qcptp_convention convention;
    int timestamp;               /* nonzero: embed a generation time */
    const char* command;         /* recorded in the output header, may be NULL */
} qcptp_options;

typedef struct {
    const char* source; /* "direct", "qtcl" or "high-temp" */
    int truncation;
    double scale;
    double t_end;
    int steps;
} qcptp_oracle_options;

QCPTP_API const char* qcptp_version(void);
/* Message of the last failure on the calling thread. */
QCPTP_API const char* qcptp_last_error(void);
QCPTP_API void qcptp_default_options(qcptp_options* opt);

QCPTP_API qcptp_status qcptp_system_from_json(const char* text, size_t len, qcptp_system** out);
QCPTP_API qcptp_status qcptp_system_from_file(const char* path, qcptp_system** out);
QCPTP_API void qcptp_system_free(qcptp_system* sys);
QCPTP_API int qcptp_system_dof(const qcptp_system* sys);

/* eigenvalues must hold 2n doubles; any output pointer may be NULL. */
QCPTP_API qcptp_status qcptp_check(const qcptp_system* sys, const qcptp_options* opt, int* verdict,
                                   double* eigenvalues, double* xi_a_norm);

QCPTP_API qcptp_status qcptp_check_json(const qcptp_system* sys, const qcptp_options* opt, int* verdict,
                                        qcptp_buffer** out);
/* grid: "b1min:b1max:count[,b2min:b2max:count|,locked]" */
QCPTP_API qcptp_status qcptp_scan_csv(const qcptp_system* sys, const char* grid, int jobs,
                                      const qcptp_options* opt, qcptp_buffer** out);
QCPTP_API qcptp_status qcptp_evolve_csv(const qcptp_system* sys, double t_end, int steps, int substeps,
                                        const qcptp_options* opt, qcptp_buffer** out);
QCPTP_API qcptp_status qcptp_oracle_json(const qcptp_system* sys, const qcptp_oracle_options* oracle,
                                         const qcptp_options* opt, qcptp_buffer** out);
QCPTP_API qcptp_status qcptp_lindblad_json(const qcptp_system* sys, const qcptp_options* opt, qcptp_buffer** out);
QCPTP_API qcptp_status qcptp_balance_json(const qcptp_system* sys, const qcptp_options* opt, qcptp_buffer** out);

QCPTP_API const char* qcptp_buffer_data(const qcptp_buffer* buf);
QCPTP_API size_t qcptp_buffer_size(const qcptp_buffer* buf);
QCPTP_API void qcptp_buffer_free(qcptp_buffer* buf);

#ifdef __cplusplus
}
#endif

#endif /* QCPTP_H */
