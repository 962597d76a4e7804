// Copyright 2026 The statent Authors
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

#ifndef STATENT_STATENT_H
#define STATENT_STATENT_H

/*
 * C interface to the statent library.
 *
 * Objects are opaque handles created by *_create / run functions and released
 * with the matching *_destroy. Every fallible function returns a
 * statent_status; on failure a thread-local message is available from
 * statent_last_error(). Strings returned through char** are heap allocated
 * and must be released with statent_string_free().
 *
 * Status values double as CLI exit codes: 0 success, 2 invalid input,
 * 3 solver failure.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(STATENT_BUILDING_LIBRARY)
#    define STATENT_API __declspec(dllexport)
#  else
#    define STATENT_API __declspec(dllimport)
#  endif
#else
#  define STATENT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum statent_status {
    STATENT_OK = 0,
    STATENT_ERR_INTERNAL = 1,
    STATENT_ERR_INVALID_INPUT = 2,
    STATENT_ERR_SOLVER = 3
} statent_status;

typedef enum statent_command {
    STATENT_CMD_WITNESS = 0,
    STATENT_CMD_SEPARABILITY = 1,
    STATENT_CMD_SWEEP = 2,
    STATENT_CMD_SAMPLE = 3
} statent_command;

typedef struct statent_config statent_config;
typedef struct statent_report statent_report;

STATENT_API const char *statent_version(void);
/* Message for the most recent failure on this thread ("" if none). */
STATENT_API const char *statent_last_error(void);
STATENT_API void statent_string_free(char *s);

/* ---- configuration ---------------------------------------------------- */

STATENT_API statent_status statent_config_create(statent_config **out);
STATENT_API void statent_config_destroy(statent_config *config);

/* Exactly one state specification may be set; a second one is rejected. */
STATENT_API statent_status statent_config_set_bloch(statent_config *config, double x, double y, double z);
/* Row-major dim x dim entries; imag may be NULL for a real matrix. */
STATENT_API statent_status statent_config_set_density(statent_config *config, const double *real,
                                                      const double *imag, size_t dim);
/* Amplitudes need not be normalized. imag may be NULL. */
STATENT_API statent_status statent_config_set_pure(statent_config *config, const double *real,
                                                   const double *imag, size_t dim);
/* Optional orthogonal partner for the pure state (same dimension). */
STATENT_API statent_status statent_config_set_pure_perp(statent_config *config, const double *real,
                                                        const double *imag, size_t dim);
/* Canonical basis indices spanning the qubit for density inputs with d > 2. */
STATENT_API statent_status statent_config_set_subspace(statent_config *config, size_t first, size_t second);
STATENT_API statent_status statent_config_set_eta(statent_config *config, double eta);
STATENT_API statent_status statent_config_set_grid(statent_config *config, unsigned rings, unsigned angles);
STATENT_API statent_status statent_config_set_shots(statent_config *config, uint64_t shots, uint64_t seed);
STATENT_API statent_status statent_config_set_sigma(statent_config *config, double sigma);
STATENT_API statent_status statent_config_set_sweep(statent_config *config, double s_lo, double s_hi,
                                                    unsigned s_steps, double eta_lo, double eta_hi,
                                                    unsigned eta_steps, int with_lp);

STATENT_API statent_status statent_config_to_json(const statent_config *config, char **out);
STATENT_API statent_status statent_config_from_json(const char *json, statent_config **out);

/* ---- commands --------------------------------------------------------- */

STATENT_API statent_status statent_run(statent_command command, const statent_config *config,
                                       statent_report **out);
/* CSV table for STATENT_CMD_SWEEP. Warnings, if any, go to *warnings
 * (newline separated; may be NULL to discard). */
STATENT_API statent_status statent_run_sweep_csv(const statent_config *config, char **csv, char **warnings);
/* Re-runs the command recorded in a serialized report. */
STATENT_API statent_status statent_replay(const char *report_json, statent_report **out);

/* ---- reports ---------------------------------------------------------- */

STATENT_API void statent_report_destroy(statent_report *report);
STATENT_API statent_status statent_report_to_json(const statent_report *report, char **out);
STATENT_API statent_status statent_report_to_text(const statent_report *report, char **out);
STATENT_API statent_status statent_report_from_json(const char *json, statent_report **out);

STATENT_API statent_status statent_report_nonclassical(const statent_report *report, int *out);
STATENT_API statent_status statent_report_min_entry(const statent_report *report, double *out);
/* Quasi-distribution in the order (+1,+1), (+1,-1), (-1,+1), (-1,-1). */
STATENT_API statent_status statent_report_quasi(const statent_report *report, double out[4]);
/* 1 feasible, 0 infeasible; STATENT_ERR_INVALID_INPUT if no LP was run. */
STATENT_API statent_status statent_report_separable(const statent_report *report, int *out);
/* STATENT_ERR_INVALID_INPUT if the report has no sampling block. */
STATENT_API statent_status statent_report_certified(const statent_report *report, int *out, double *z_score);
STATENT_API size_t statent_report_warning_count(const statent_report *report);

/* ---- direct computations --------------------------------------------- */

/* Observed joint statistics (1 + eta(x,y).s)/4 for the symmetric POVM. */
STATENT_API statent_status statent_observed_joint(const double s[3], double eta, double out[4]);
/* Applies mu(x,x') mu(y,y') to a joint distribution. */
STATENT_API statent_status statent_invert_joint(double eta, const double observed[4], double out[4]);

#ifdef __cplusplus
}
#endif

#endif /* STATENT_STATENT_H */
