/*
   Copyright 2026 The hankellab authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
 * C interface of the hankellab shared library.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Every function returns an hl_status; on failure hl_last_error() carries a
 * one-line diagnostic for the calling thread. Strings returned through
 * char** output parameters are heap-allocated and must be released with
 * hl_string_free().
 */

#ifndef HANKELLAB_H
#define HANKELLAB_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hl_status {
  HL_OK = 0,
  HL_ERR_NULL_POINTER = 1,
  HL_ERR_INVALID_ARGUMENT = 2,
  HL_ERR_DIMENSION_MISMATCH = 3,
  HL_ERR_PARSE = 4,
  HL_ERR_IO = 5,
  HL_ERR_NO_MEMORY = 6,
  HL_ERR_INTERNAL = 7
} hl_status;

typedef struct hl_symbol hl_symbol;   /* operator-valued analytic symbol */
typedef struct hl_measure hl_measure; /* finite atomic measure on the disc */

const char* hl_version(void);
const char* hl_status_name(hl_status status);

/* Last error message of the calling thread; empty string when none. */
const char* hl_last_error(void);

void hl_string_free(char* text);

/* Caps worker threads used by the library; 0 restores the hardware default. */
hl_status hl_set_max_threads(int threads);

/*
 * Symbols. coeffs is indexed [n][row][col] with interleaved re, im doubles:
 * length 2 * (degree + 1) * dim * dim.
 */
hl_status hl_symbol_create(int dim, int degree, const double* coeffs, hl_symbol** out);
hl_status hl_symbol_from_json(const char* text, hl_symbol** out);
hl_status hl_symbol_to_json(const hl_symbol* symbol, char** json_out);
hl_status hl_symbol_shape(const hl_symbol* symbol, int* dim, int* degree);
void hl_symbol_free(hl_symbol* symbol);

hl_status hl_measure_from_json(const char* text, hl_measure** out);
void hl_measure_free(hl_measure* measure);

/*
 * Experiments. JSON/CSV documents are deterministic for fixed inputs and
 * seeds and never contain timestamps.
 */

/* Six-norm chain of the symbol at order alpha > 0 and truncation n. */
hl_status hl_norm_chain(const hl_symbol* symbol, double alpha, int n_trunc, char** json_out);

/* mode: "anti", "analytic", "weak" or "rk". */
hl_status hl_embedding(const hl_symbol* symbol, const char* mode, double alpha, int n_trunc,
                       char** json_out);

/* beta_rule: "default" or "power=<q>". CSV columns: experiment,alpha,N,value,witness. */
hl_status hl_dp1(double alpha, const char* beta_rule, const int* n_ladder, int ladder_len,
                 char** csv_out);

/* family: "all" or comma-separated subset of ones,hilbert,uppertri,gauss. */
hl_status hl_dp2(double alpha, const int* n_ladder, int ladder_len, const char* family,
                 unsigned long long seed, char** csv_out);

/* psi == NULL selects the built-in lacunary test symbol. */
hl_status hl_lemma_order(const hl_symbol* psi, double alpha, int l_min, int l_max, int n_trunc,
                         char** json_out);

hl_status hl_lemma_primitive(const double* alphas, int alpha_count, int l_min, int l_max,
                             int nzero_min, int nzero_max, char** json_out);

hl_status hl_carleson_intensity(const hl_measure* measure, int levels, double* value_out);

hl_status hl_bloch_norm(const hl_symbol* symbol, int radial, int angular, int refine,
                        double* value_out, double* argmax_re, double* argmax_im);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HANKELLAB_H */
