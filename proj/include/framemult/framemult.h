/* include/framemult/framemult.h */

// Copyright 2026  The framemult Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to the framemult library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_destroy function. Every fallible call returns an fm_status;
 * on failure fm_last_error_message() describes the error for the calling
 * thread until the next failing call. Strings returned through char** out
 * parameters are heap allocated and must be released with fm_string_free.
 *
 * Complex numbers are passed as interleaved (re, im) double pairs.
 * Matrices are column-major, so a d x N synthesis matrix holds frame
 * vector n at offset 2*d*n.
 */

#ifndef FRAMEMULT_FRAMEMULT_H_
#define FRAMEMULT_FRAMEMULT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FM_API __declspec(dllexport)
#else
#define FM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fm_status {
  FM_OK = 0,
  FM_ERR_PARSE = 1,
  FM_ERR_DIMENSION_MISMATCH = 2,
  FM_ERR_NOT_HERMITIAN = 3,
  FM_ERR_NOT_A_FRAME = 4,
  FM_ERR_NOT_INVERTIBLE = 5,
  FM_ERR_ZERO_SYMBOL_ENTRY = 6,
  FM_ERR_NOT_A_DUAL = 7,
  FM_ERR_IDENTITY_DOES_NOT_HOLD = 8,
  FM_ERR_IMPLICATION_VIOLATED = 9,
  FM_ERR_PRECONDITION_FAILED = 10,
  FM_ERR_UNKNOWN_EXAMPLE = 11,
  FM_ERR_METADATA_MISSING = 12,
  FM_ERR_METADATA_INCONSISTENT = 13,
  FM_ERR_RATIO_NOT_CERTIFIED = 14,
  FM_ERR_INVALID_ARGUMENT = 15,
  FM_ERR_INTERNAL = 99
} fm_status;

typedef struct fm_tolerance {
  double rel_eps;
  double cond_max;
} fm_tolerance;

typedef struct fm_frame fm_frame;
typedef struct fm_symbol fm_symbol;
typedef struct fm_multiplier fm_multiplier;

FM_API fm_tolerance fm_default_tolerance(void);
FM_API const char *fm_status_string(fm_status status);
FM_API const char *fm_last_error_message(void);
FM_API void fm_string_free(char *s);

/* Frames */
FM_API fm_status fm_frame_create(size_t dim, size_t count, const double *synthesis,
                                 fm_frame **out);
FM_API fm_status fm_frame_from_json(const char *json, fm_frame **out);
FM_API fm_status fm_frame_to_json(const fm_frame *frame, char **out);
FM_API void fm_frame_destroy(fm_frame *frame);
FM_API size_t fm_frame_dim(const fm_frame *frame);
FM_API size_t fm_frame_count(const fm_frame *frame);
/* Copies 2*dim*count doubles. */
FM_API fm_status fm_frame_synthesis(const fm_frame *frame, double *out);
FM_API fm_status fm_frame_bounds(const fm_frame *frame, const fm_tolerance *tol, double *lower,
                                 double *upper);
FM_API fm_status fm_frame_canonical_dual(const fm_frame *frame, const fm_tolerance *tol,
                                         fm_frame **out);
FM_API fm_status fm_frame_is_dual(const fm_frame *candidate, const fm_frame *frame,
                                  const fm_tolerance *tol, int *out);

/* Symbols */
FM_API fm_status fm_symbol_create(size_t count, const double *values, fm_symbol **out);
FM_API fm_status fm_symbol_from_json(const char *json, fm_symbol **out);
FM_API void fm_symbol_destroy(fm_symbol *symbol);
FM_API size_t fm_symbol_count(const fm_symbol *symbol);

/* Multipliers. The handle copies its inputs. */
FM_API fm_status fm_multiplier_create(const fm_symbol *m, const fm_frame *phi, const fm_frame *psi,
                                      const fm_tolerance *tol, fm_multiplier **out);
FM_API void fm_multiplier_destroy(fm_multiplier *mult);
FM_API size_t fm_multiplier_dim(const fm_multiplier *mult);
/* Copies 2*dim*dim doubles. */
FM_API fm_status fm_multiplier_matrix(const fm_multiplier *mult, double *out);
FM_API fm_status fm_multiplier_is_invertible(const fm_multiplier *mult, int *out);
/* FM_ERR_NOT_INVERTIBLE when sigma_min/sigma_max < 1/cond_max. */
FM_API fm_status fm_multiplier_invert(const fm_multiplier *mult, double *out);
FM_API fm_status fm_multiplier_induced_duals(const fm_multiplier *mult, fm_frame **psi_dagger,
                                             fm_frame **phi_dagger);
/* Residual of the inverse built from the canonical duals and 1/m. */
FM_API fm_status fm_multiplier_canonical_inversion(const fm_multiplier *mult, double *residual);

/* JSON reports. seed may be NULL when verify_all is zero. */
FM_API fm_status fm_report_frame_info(const char *frame_json, const fm_tolerance *tol, char **out);
FM_API fm_status fm_report_multiplier(const char *symbol_json, const char *phi_json,
                                      const char *psi_json, int invert, int induced_duals,
                                      int verify_all, int expect_invertible,
                                      const uint64_t *seed, const fm_tolerance *tol, char **out);
FM_API fm_status fm_report_example(const char *name, const fm_tolerance *tol, char **out);
FM_API fm_status fm_report_render_pretty(const char *report_json, char **out);

FM_API size_t fm_example_count(void);
/* Borrowed pointer, valid for the lifetime of the process. NULL if out of range. */
FM_API const char *fm_example_name(size_t index);
FM_API fm_status fm_example_show(const char *name, char **out);

#ifdef __cplusplus
}
#endif

#endif /* FRAMEMULT_FRAMEMULT_H_ */
