// Copyright 2026 The acspin Authors
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

/* C interface to the acspin library. Every call returns an acs_status;
 * on failure acs_last_error() describes the problem (per thread). Strings
 * returned through char** are owned by the caller: release them with
 * acs_string_free. Handles are released with the matching *_free. */
#ifndef ACSPIN_ACSPIN_H
#define ACSPIN_ACSPIN_H

#include <stddef.h>
#include <stdint.h>

#if defined(ACSPIN_BUILDING_LIBRARY)
#define ACSPIN_API __attribute__((visibility("default")))
#else
#define ACSPIN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum acs_status {
  ACS_OK = 0,
  ACS_INVALID_ARGUMENT = 1,
  ACS_DIMENSION_MISMATCH = 2,
  ACS_NOT_HERMITIAN = 3,
  ACS_UNSUPPORTED = 4,
  ACS_UNCONVERGED = 5,
  ACS_LEAKAGE = 6,
  ACS_IO = 7,
  ACS_PARSE = 8,
  ACS_INTERNAL = 9
} acs_status;

typedef struct acs_protocol acs_protocol;
typedef struct acs_sequence acs_sequence;
typedef struct acs_bench acs_bench;

ACSPIN_API const char* acs_version(void);
ACSPIN_API const char* acs_status_name(acs_status status);
/* Message of the last failed call on this thread; "" if none. */
ACSPIN_API const char* acs_last_error(void);
ACSPIN_API void acs_string_free(char* s);

/* ---- protocols ---- */

typedef struct acs_generate_options {
  int two_j;             /* 2j */
  int t;                 /* anticoherence order */
  int n_cycles;          /* 0: t + 1 */
  uint64_t seed;
  int analytic;          /* closed-form parameters instead of the optimizer */
  int max_starts;
  long budget;           /* objective evaluations per start */
  int min_squeezing;     /* pick the least-squeezing converged start */
  double target_deviation;
  int workers;           /* 0: ACSPIN_WORKERS or hardware threads */
} acs_generate_options;

typedef struct acs_protocol_info {
  int two_j;
  int t;
  size_t n_cycles;
  int converged;
  double total_rotation;
  double total_squeezing;
  double max_deviation; /* max over orders 1..t of 1 - A_s */
} acs_protocol_info;

ACSPIN_API void acs_generate_options_init(acs_generate_options* opts);
/* ACS_UNCONVERGED still hands back the best protocol found in *out. */
ACSPIN_API acs_status acs_protocol_generate(const acs_generate_options* opts, acs_protocol** out);
ACSPIN_API acs_status acs_protocol_from_json(const char* json, acs_protocol** out);
ACSPIN_API acs_status acs_protocol_load(const char* path, acs_protocol** out);
ACSPIN_API acs_status acs_protocol_to_json(const acs_protocol* p, char** out);
ACSPIN_API acs_status acs_protocol_get_info(const acs_protocol* p, acs_protocol_info* out);
/* 1 - A_order of the final state, for 1 <= order <= t. */
ACSPIN_API acs_status acs_protocol_deviation(const acs_protocol* p, int order, double* out);
ACSPIN_API acs_status acs_protocol_cycle(const acs_protocol* p, size_t index, double* theta, double* eta);
ACSPIN_API void acs_protocol_free(acs_protocol* p);

/* ---- dynamical decoupling sequences ---- */

enum {
  ACS_FAMILY_DISORDER = 1,
  ACS_FAMILY_DIPOLAR_RWA = 2,
  ACS_FAMILY_DIPOLAR_GENERAL = 4,
  ACS_FAMILY_ROTATION_FDE = 8
};

typedef enum acs_axis_set { ACS_AXES_CUBE = 0, ACS_AXES_TILTED_CUBE = 1 } acs_axis_set;

typedef struct acs_sequence_info {
  size_t group_order;
  size_t pulse_count;
  unsigned families; /* ACS_FAMILY_* mask */
} acs_sequence_info;

ACSPIN_API acs_status acs_sequence_load(const char* path, acs_sequence** out);
ACSPIN_API acs_status acs_sequence_from_json(const char* json, acs_sequence** out);
/* First generator pair whose group has the given order and decouples every
 * family in the mask. */
ACSPIN_API acs_status acs_sequence_search(const char* name, size_t group_order, acs_axis_set axes, unsigned families,
                                          acs_sequence** out);
ACSPIN_API acs_status acs_sequence_to_json(const acs_sequence* s, char** out);
ACSPIN_API acs_status acs_sequence_get_info(const acs_sequence* s, acs_sequence_info* out);
/* Closure, Eulerian order and decoupling of each declared family on n spins.
 * *report (optional) gets a human-readable summary. Returns
 * ACS_INVALID_ARGUMENT when a check fails. */
ACSPIN_API acs_status acs_sequence_validate(const acs_sequence* s, int n_spins, double* worst_residual, char** report);
ACSPIN_API void acs_sequence_free(acs_sequence* s);

/* ---- experiments; each writes CSV text ---- */

ACSPIN_API acs_status acs_powerlaw_csv(int j_min, int j_max, int points, int workers, char** csv);
ACSPIN_API acs_status acs_trace_csv(const acs_protocol* p, char** csv);

enum { ACS_STRATEGY_NODD = 1, ACS_STRATEGY_PER_PULSE = 2, ACS_STRATEGY_PER_CYCLE = 4 };
typedef enum acs_strategy { ACS_NODD = 0, ACS_DCG_PER_PULSE = 1, ACS_DCG_PER_CYCLE = 2 } acs_strategy;
typedef enum acs_regime { ACS_DISORDER_DOMINATED = 0, ACS_DIPOLAR_DOMINATED = 1 } acs_regime;
typedef enum acs_control_error { ACS_ERROR_NONE = 0, ACS_ERROR_DD = 1, ACS_ERROR_BP_TYPE1 = 2, ACS_ERROR_BP_TYPE2 = 3 } acs_control_error;

/* State preparation on N = 2j spins from an anticoherence protocol. */
ACSPIN_API acs_status acs_bench_create_ac(const acs_protocol* p, const acs_sequence* rotation_seq,
                                          const acs_sequence* squeezing_seq, double chi, unsigned strategies,
                                          acs_bench** out);
/* GHZ preparation on n spins: R_x(pi/2) then exp(-i pi/2 J_z^2). */
ACSPIN_API acs_status acs_bench_create_ghz(int n_spins, const acs_sequence* rotation_seq,
                                           const acs_sequence* squeezing_seq, double chi, unsigned strategies,
                                           acs_bench** out);
ACSPIN_API void acs_bench_free(acs_bench* b);

typedef struct acs_noise_grid {
  const double* disorder; /* delta / chi */
  size_t n_disorder;
  const double* dipolar; /* Delta / chi */
  size_t n_dipolar;
  int instances;
  int rwa;
  uint64_t seed;
  int workers;
} acs_noise_grid;

typedef struct acs_control_grid {
  acs_control_error error_type;
  acs_regime regime;
  double ratio; /* subdominant / dominant norm */
  const double* noise; /* |H_err| / chi */
  size_t n_noise;
  const double* epsilon;
  size_t n_epsilon;
  int instances;
  int rwa;
  uint64_t seed;
  int workers;
} acs_control_grid;

/* Shared settings of the bisection searches. */
typedef struct acs_search {
  acs_regime regime;
  double ratio;
  int instances;
  int rwa;
  uint64_t seed;
  double log_lo;
  double log_hi;
} acs_search;

ACSPIN_API acs_status acs_noise_grid_csv(const acs_bench* b, const acs_noise_grid* grid, char** csv);
ACSPIN_API acs_status acs_control_grid_csv(const acs_bench* b, const acs_control_grid* grid, char** csv);
/* log10 of the dominant noise term / chi where the strategy stops beating
 * NoDD; *found = 0 when the bracket holds no sign change. */
ACSPIN_API acs_status acs_crossover(const acs_bench* b, acs_strategy s, const acs_search* search, int* found,
                                    double* log10_noise, double* nodd_infidelity);
/* log10 of the largest flip-angle error at which the strategy beats NoDD. */
ACSPIN_API acs_status acs_advantage_boundary(const acs_bench* b, acs_strategy s, acs_control_error type,
                                             const acs_search* search, double noise, int* found,
                                             double* log10_epsilon);
/* Least-squares slope and intercept of log10 y against log10 x. */
ACSPIN_API acs_status acs_fit_loglog(const double* x, const double* y, size_t n, double* slope, double* intercept);

#ifdef __cplusplus
}
#endif

#endif /* ACSPIN_ACSPIN_H */
