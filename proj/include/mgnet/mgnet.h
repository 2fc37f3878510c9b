/**
 * Copyright 2026 The mgnet Authors
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

#ifndef MGNET_MGNET_H
#define MGNET_MGNET_H

#include <stddef.h>

#if defined(MGNET_BUILDING)
#define MGNET_API __attribute__((visibility("default")))
#else
#define MGNET_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mgnet_layout mgnet_layout;
typedef struct mgnet_state mgnet_state;
typedef struct mgnet_report mgnet_report;
typedef struct mgnet_search mgnet_search;

typedef enum {
    MGNET_OK = 0,
    MGNET_E_VALIDATION = 1,
    MGNET_E_NUMERICAL = 2,
    MGNET_E_SINGULAR = 3,
    MGNET_E_CAPACITY = 4,
    MGNET_E_GEOMETRY = 5,
    MGNET_E_DEGENERATE = 6,
    MGNET_E_NOT_GAPPED = 7,
    MGNET_E_CONVERSION = 8,
    MGNET_E_IO = 9,
    MGNET_E_ARGUMENT = 10,
    MGNET_E_INTERNAL = 99
} mgnet_status;

typedef enum { MGNET_ANTIPERIODIC = 0, MGNET_PERIODIC = 1 } mgnet_boundary;
typedef enum { MGNET_FILL_ZERO = 1, MGNET_FILL_ONE = 2 } mgnet_fill;

MGNET_API const char* mgnet_version(void);
/* message of the last failure on the calling thread, "" if none */
MGNET_API const char* mgnet_last_error(void);
MGNET_API const char* mgnet_status_name(mgnet_status s);
/* strings returned through char** are owned by the caller */
MGNET_API void mgnet_free_string(char* s);

/* layouts */
MGNET_API mgnet_status mgnet_layout_regular(int q, double cutoff, int chi, mgnet_boundary bc,
                                            mgnet_layout** out);
MGNET_API mgnet_status mgnet_layout_happy(int layers, mgnet_layout** out);
MGNET_API mgnet_status mgnet_layout_happy_growth(const char* word, mgnet_layout** out);
MGNET_API mgnet_status mgnet_layout_mmera(int layers, mgnet_layout** out);
MGNET_API mgnet_status mgnet_layout_ir_cutoff(const mgnet_layout* in, double region,
                                              mgnet_fill fill, mgnet_layout** out);
MGNET_API mgnet_status mgnet_layout_info(const mgnet_layout* l, int* tiles, long* boundary_sites);
/* comma separated accepted parameter names */
MGNET_API mgnet_status mgnet_layout_parameter_names(const mgnet_layout* l, char** out);
MGNET_API mgnet_status mgnet_layout_json(const mgnet_layout* l, char** out);
MGNET_API void mgnet_layout_free(mgnet_layout* l);

/* contraction */
MGNET_API mgnet_status mgnet_execute(const mgnet_layout* l, int nparams, const char* const* names,
                                     const double* values, mgnet_state** out);
/* row-major 2L x 2L covariance */
MGNET_API mgnet_status mgnet_state_from_covariance(const double* g, long majoranas,
                                                   mgnet_state** out);
MGNET_API mgnet_status mgnet_state_info(const mgnet_state* s, long* majoranas, double* log_z,
                                        int* covariance_path, double* norm_factor);
MGNET_API mgnet_status mgnet_state_covariance(const mgnet_state* s, double* buf, long len);
MGNET_API mgnet_status mgnet_state_write_csv(const mgnet_state* s, const char* path);
MGNET_API void mgnet_state_free(mgnet_state* s);

/* observables */
MGNET_API mgnet_status mgnet_energy_density(const mgnet_state* s, double* out);
MGNET_API mgnet_status mgnet_invariants(const mgnet_state* s, double* purity, double* parity);
/* out[l - 1] = mean entropy of l units, l = 1..lmax */
MGNET_API mgnet_status mgnet_entropy_profile(const mgnet_state* s, long lmax, long unit,
                                             double* out);
/* out[d], d = 0..majoranas/2 */
MGNET_API mgnet_status mgnet_pair_frequency(const mgnet_state* s, double* out, long len);
/* which: "psi", "epsilon", "sigma", "sse"; out[d - dmin] */
MGNET_API mgnet_status mgnet_correlator(const mgnet_state* s, const char* which, long dmin,
                                        long dmax, double* out);
/* zero windows take the defaults */
MGNET_API mgnet_status mgnet_conformal_report(const mgnet_state* s, long dmin, long dmax,
                                              long lmin, long lmax, mgnet_report** out);
MGNET_API mgnet_status mgnet_report_get(const mgnet_report* r, const char* key, double* out);
MGNET_API mgnet_status mgnet_report_text(const mgnet_report* r, char** out);
MGNET_API void mgnet_report_free(mgnet_report* r);

/* fits; profile[l - 1] holds S(l) */
MGNET_API mgnet_status mgnet_fit_cardy(const double* profile, long n, long length, long lmin,
                                       long lmax, double* c, double* cutoff);
MGNET_API mgnet_status mgnet_fit_power_law(const double* x, const double* y, long n, double lo,
                                           double hi, double* slope, double* intercept);
MGNET_API mgnet_status mgnet_correlation_length(const double* profile, long n, double c,
                                                double* xi);

/* searches */
MGNET_API mgnet_status mgnet_find_critical(const mgnet_layout* l, int threads, mgnet_search** out);
MGNET_API mgnet_status mgnet_optimize_mmera(int layers, const double* init, int full, double tol,
                                            int max_evaluations, mgnet_search** out);
MGNET_API mgnet_status mgnet_search_info(const mgnet_search* r, int* nparams, double* objective,
                                         int* evaluations, int* converged, int* flag);
MGNET_API mgnet_status mgnet_search_param(const mgnet_search* r, int i, const char** name,
                                          double* value);
MGNET_API mgnet_status mgnet_search_history_csv(const mgnet_search* r, char** out);
MGNET_API void mgnet_search_free(mgnet_search* r);

/* oracle and invariant suite; failures counts failed checks */
MGNET_API mgnet_status mgnet_verify(unsigned long seed, char** table, int* failures);

#ifdef __cplusplus
}
#endif

#endif
