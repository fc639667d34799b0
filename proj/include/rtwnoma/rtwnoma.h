/* SPDX-License-Identifier: Apache-2.0
 *
 * rtwnoma - performance analysis of RIS-assisted two-way NOMA networks
 * Copyright (C) 2026 The rtwnoma Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ------------------------------------------------------------------------ */

/* C interface of the rtwnoma shared library.
 *
 * Every function returns an rtw_status. On failure the message is available
 * from rtw_last_error() until the next call on the same thread. Handles are
 * opaque and owned by the caller; release them with the matching destroy
 * function. Passing NULL to a destroy function is a no-op. */

#ifndef RTWNOMA_H
#define RTWNOMA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32) && defined(RTW_BUILDING)
#define RTW_API __declspec(dllexport)
#elif defined(_WIN32)
#define RTW_API __declspec(dllimport)
#elif defined(__GNUC__)
#define RTW_API __attribute__((visibility("default")))
#else
#define RTW_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rtw_status {
    RTW_OK = 0,
    RTW_E_INVALID_ARGUMENT = 1,
    RTW_E_VALIDATION = 2,
    RTW_E_PARSE = 3,
    RTW_E_NUMERIC = 4,
    RTW_E_IO = 5,
    RTW_E_INTERNAL = 6
} rtw_status;

typedef enum rtw_scheme { RTW_RIS_TW_NOMA = 0, RTW_RIS_TW_OMA = 1, RTW_TWR_OMA = 2 } rtw_scheme;
typedef enum rtw_user { RTW_D1 = 0, RTW_D2 = 1 } rtw_user;
typedef enum rtw_sic { RTW_SIC_PERFECT = 0, RTW_SIC_IMPERFECT = 1 } rtw_sic;
typedef enum rtw_metric { RTW_METRIC_OUTAGE = 0, RTW_METRIC_ERGODIC_RATE = 1 } rtw_metric;
typedef enum rtw_residual { RTW_RESIDUAL_RANDOM = 0, RTW_RESIDUAL_AVERAGED = 1 } rtw_residual;

/* Linear-scale system parameters. Fill with rtw_system_defaults(). */
typedef struct rtw_system {
    unsigned m_elements;
    double a1, a2;
    double r1, r2;
    double sigma_n1_sq, sigma_n2_sq;
    double sigma_i1_sq, sigma_i2_sq;
    double sigma_gh_sq;
    rtw_sic sic_mode;
    double epsilon_sic;
    int oma_threshold_doubling;
} rtw_system;

typedef struct rtw_estimate {
    double value;
    double std_error;
    double ci95_half_width;
    uint64_t trials;
    int low_confidence;
} rtw_estimate;

typedef struct rtw_sweep rtw_sweep;
typedef struct rtw_table rtw_table;

RTW_API const char* rtw_version(void);

/* Message of the last failure on this thread, or "" after a success. */
RTW_API const char* rtw_last_error(void);

/* 1-based location of the last parse failure; 0 when unknown. */
RTW_API void rtw_last_error_location(size_t* line, size_t* column);

RTW_API void rtw_system_defaults(rtw_system* sys);
RTW_API rtw_status rtw_system_validate(const rtw_system* sys);

/* Closed-form outage probability at linear transmit power pu. `clamped`
 * may be NULL. */
RTW_API rtw_status rtw_outage(const rtw_system* sys, rtw_scheme scheme, rtw_user user, double pu, double* out,
                              int* clamped);
RTW_API rtw_status rtw_outage_upper_bound(const rtw_system* sys, rtw_scheme scheme, rtw_user user, double pu,
                                          double* out, int* clamped);
RTW_API rtw_status rtw_outage_asymptotic(const rtw_system* sys, rtw_scheme scheme, rtw_user user, double pu,
                                         double* out, int* clamped);

/* Ergodic rate in bits per channel use; RIS schemes only. */
RTW_API rtw_status rtw_ergodic_rate(const rtw_system* sys, rtw_scheme scheme, rtw_user user, double pu, double* out);

/* Monte Carlo estimate. threads = 0 uses every hardware thread. */
RTW_API rtw_status rtw_simulate(const rtw_system* sys, rtw_scheme scheme, rtw_user user, rtw_metric metric, double pu,
                                uint64_t trials, uint64_t seed, uint64_t stream_id, rtw_residual residual,
                                unsigned threads, rtw_estimate* out);

RTW_API size_t rtw_preset_count(void);
/* NULL when index is out of range. */
RTW_API const char* rtw_preset_name(size_t index);

/* A sweep with the default parameters. */
RTW_API rtw_status rtw_sweep_create(rtw_sweep** out);
RTW_API rtw_status rtw_sweep_from_preset(const char* id, rtw_sweep** out);
/* Overlays a configuration file or text onto the sweep. On failure the
 * sweep is unchanged. */
RTW_API rtw_status rtw_sweep_apply_file(rtw_sweep* sweep, const char* path);
RTW_API rtw_status rtw_sweep_apply_text(rtw_sweep* sweep, const char* text);
RTW_API rtw_status rtw_sweep_set_trials(rtw_sweep* sweep, uint64_t trials);
RTW_API rtw_status rtw_sweep_set_seed(rtw_sweep* sweep, uint64_t seed);
RTW_API rtw_status rtw_sweep_figure_id(const rtw_sweep* sweep, const char** out);
RTW_API void rtw_sweep_destroy(rtw_sweep* sweep);

RTW_API rtw_status rtw_sweep_run(const rtw_sweep* sweep, unsigned threads, rtw_table** out);

RTW_API rtw_status rtw_table_row_count(const rtw_table* table, size_t* out);
/* format is "csv" or "json"; path "-" writes to standard output. */
RTW_API rtw_status rtw_table_write(const rtw_table* table, const char* format, const char* path);
/* Serialised table; free the string with rtw_string_free(). */
RTW_API rtw_status rtw_table_serialize(const rtw_table* table, const char* format, char** out);
RTW_API void rtw_string_free(char* text);
RTW_API void rtw_table_destroy(rtw_table* table);

#ifdef __cplusplus
}
#endif

#endif
