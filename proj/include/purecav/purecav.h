// Copyright 2026 The purecav Authors
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


/* C interface to the purecav core. All functions return a purecav_status; on failure the
 * message is available from purecav_last_error() on the calling thread until the next call. */

#ifndef PURECAV_PURECAV_H
#define PURECAV_PURECAV_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(PURECAV_BUILDING)
#define PURECAV_API __declspec(dllexport)
#else
#define PURECAV_API __declspec(dllimport)
#endif
#else
#define PURECAV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum purecav_status {
    PURECAV_OK = 0,
    PURECAV_INVALID_ARGUMENT = 1,
    PURECAV_THRESHOLD_VIOLATION = 2,
    PURECAV_DIMENSION_MISMATCH = 3,
    PURECAV_NOT_HERMITIAN = 4,
    PURECAV_NOT_POSITIVE = 5,
    PURECAV_NULL_OUTCOME = 6,
    PURECAV_TRUNCATION_OVERFLOW = 7,
    PURECAV_NUMERICAL_INSTABILITY = 8,
    PURECAV_USAGE = 9,
    PURECAV_IO = 10,
    PURECAV_INTERNAL = 100
} purecav_status;

typedef enum purecav_scheme { PURECAV_SCHEME_ORIGINAL = 0, PURECAV_SCHEME_MODIFIED = 1 } purecav_scheme;
typedef enum purecav_restart { PURECAV_RESTART_INIT = 0, PURECAV_RESTART_ROUND1 = 1 } purecav_restart;
typedef enum purecav_appendix { PURECAV_APPENDIX_A = 0, PURECAV_APPENDIX_C = 1 } purecav_appendix;

PURECAV_API const char *purecav_version(void);
PURECAV_API const char *purecav_last_error(void);
PURECAV_API const char *purecav_status_name(purecav_status status);

PURECAV_API purecav_status purecav_parse_scheme(const char *name, purecav_scheme *out);
PURECAV_API purecav_status purecav_parse_restart(const char *name, purecav_restart *out);

/* Owned text buffer (CSV, reports). */
typedef struct purecav_text purecav_text;
PURECAV_API const char *purecav_text_data(const purecav_text *text);
PURECAV_API size_t purecav_text_size(const purecav_text *text);
PURECAV_API void purecav_text_free(purecav_text *text);

/* Purification. */
PURECAV_API purecav_status purecav_closed_form(purecav_scheme scheme, double f, double f_perm, double *out);
PURECAV_API purecav_status purecav_simulate_round(purecav_scheme scheme, double f, double f_perm, int n,
                                                  double *fidelity, double *success);
/* out receives F_1 ... F_rounds. */
PURECAV_API purecav_status purecav_iterate(purecav_scheme scheme, double f, int rounds, double *out, size_t out_len);
/* Initialization round then `rounds` modified rounds; each array receives rounds + 1 values. */
PURECAV_API purecav_status purecav_init_sequence(double f, int rounds, int n, double *fidelity, double *coherence,
                                                 double *success, size_t out_len);
PURECAV_API purecav_status purecav_gate_time(int n, double coupling, double *out);
PURECAV_API purecav_status purecav_distribution_fidelity(double eta, double alpha_sq, double theta, double *out);

/* Figure-data sweep. */
typedef struct purecav_sweep_config {
    purecav_scheme scheme;
    double f_min;
    double f_max;
    double f_step;
    int rounds;
    int n;
    int init;
    uint64_t seed;
    unsigned workers;
} purecav_sweep_config;

PURECAV_API void purecav_sweep_config_init(purecav_sweep_config *config);
PURECAV_API purecav_status purecav_sweep(const purecav_sweep_config *config, purecav_text **csv);

/* Resource estimation. */
typedef struct purecav_resource_config {
    purecav_scheme scheme;
    double f;
    int rounds;
    uint64_t trials;
    uint64_t seed;
    int init;
    int fusion;
    double alpha_sq;
    purecav_restart restart;
    int force_p_enabled;
    double force_p;
    unsigned workers;
} purecav_resource_config;

typedef struct purecav_resource_estimate {
    double expected_temporary_pairs;
    double expected_rounds_attempted;
    uint64_t trials;
    double half_width;
    double rounds_half_width;
    double analytic_pairs;
    double analytic_rounds;
    double fusion_success;
} purecav_resource_estimate;

PURECAV_API void purecav_resource_config_init(purecav_resource_config *config);
/* report (optional) receives one line per stage and per note. */
PURECAV_API purecav_status purecav_resources(const purecav_resource_config *config, purecav_resource_estimate *out,
                                             purecav_text **report);

/* Fusion block. kappa_t > 0 integrates the master equation; 0 uses steady-state maps. */
typedef struct purecav_fusion_report {
    double alpha_abs;
    double no_photon_probability;
    double trace_distance;
    double kappa_t;
    int numeric;
} purecav_fusion_report;

PURECAV_API purecav_status purecav_fusion(double j2, double kappa, double f, double kappa_t,
                                          purecav_fusion_report *out, purecav_text **warnings);

/* Effective-Hamiltonian ladders. */
typedef struct purecav_drive {
    double g;
    double omega;
    double delta;
    double delta_l;
} purecav_drive;

typedef struct purecav_ladder_row {
    double multiplier;
    double g;
    double omega;
    double delta;
    double delta_l;
    double gate_time;
    double trace_distance;
    double excited_population_max;
    double leakage;
} purecav_ladder_row;

typedef struct purecav_ladder purecav_ladder;

PURECAV_API purecav_status purecav_default_drive(purecav_appendix which, purecav_drive *out);
/* base may be NULL for the defaults; n_max = 0 selects the default cutoff. */
PURECAV_API purecav_status purecav_ladder_run(purecav_appendix which, const purecav_drive *base,
                                              const double *multipliers, size_t count, size_t n_max,
                                              purecav_ladder **out);
PURECAV_API size_t purecav_ladder_size(const purecav_ladder *ladder);
PURECAV_API purecav_status purecav_ladder_get(const purecav_ladder *ladder, size_t index, purecav_ladder_row *row);
PURECAV_API int purecav_ladder_monotone(const purecav_ladder *ladder);
PURECAV_API size_t purecav_ladder_warning_count(const purecav_ladder *ladder);
PURECAV_API const char *purecav_ladder_warning(const purecav_ladder *ladder, size_t index);
PURECAV_API purecav_status purecav_ladder_csv(const purecav_ladder *ladder, purecav_text **csv);
PURECAV_API void purecav_ladder_free(purecav_ladder *ladder);

/* Acceptance suite. ids may be NULL (count 0) for all criteria. */
typedef struct purecav_selftest purecav_selftest;

typedef struct purecav_criterion {
    int id;
    int passed;
    double seconds;
    const char *title;
    const char *detail;
} purecav_criterion;

PURECAV_API purecav_status purecav_selftest_run(const int *ids, size_t count, purecav_selftest **out);
PURECAV_API size_t purecav_selftest_size(const purecav_selftest *suite);
/* Strings stay valid until purecav_selftest_free. */
PURECAV_API purecav_status purecav_selftest_get(const purecav_selftest *suite, size_t index, purecav_criterion *out);
PURECAV_API void purecav_selftest_free(purecav_selftest *suite);

#ifdef __cplusplus
}
#endif

#endif
