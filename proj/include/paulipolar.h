/* Copyright 2026 The PauliPolar Authors
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

/* C interface of the paulipolar shared library.
 *
 * Conventions:
 *   - every fallible call returns a paulipolar_status; 0 means success;
 *   - on failure paulipolar_last_error() holds a message for the calling
 *     thread until the next failing call;
 *   - output strings (*out) are heap-allocated JSON or DOT text and must be
 *     released with paulipolar_string_free;
 *   - polar spaces are opaque handles released with paulipolar_space_free.
 */

#ifndef PAULIPOLAR_H
#define PAULIPOLAR_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum paulipolar_status {
  PAULIPOLAR_OK = 0,
  PAULIPOLAR_ERR_INVALID_ARGUMENT = 1,
  PAULIPOLAR_ERR_PARSE = 2,
  PAULIPOLAR_ERR_CHECK_FAILED = 3,
  PAULIPOLAR_ERR_INTERNAL = 4
} paulipolar_status;

const char* paulipolar_version(void);
const char* paulipolar_status_name(paulipolar_status status);
const char* paulipolar_last_error(void);
void paulipolar_string_free(char* s);

/* ---- Pauli group arithmetic ---- */

/* op_text follows the grammar ["-"]["i"] ("I"|"X"|"Y"|"Z"){N}; the output is
 * {"op":...,"phase_exponent":...,"bits":[mu1,nu1,...]}. */
paulipolar_status paulipolar_pauli_json(const char* op_text, char** out);
/* Canonical product a * b in the same JSON form, plus a "commute" flag. */
paulipolar_status paulipolar_pauli_multiply_json(const char* a_text, const char* b_text,
                                                 char** out);

/* ---- symplectic polar spaces W(2N-1,2) ---- */

typedef struct paulipolar_space paulipolar_space;

/* n_qubits in 1..6; with_planes: 1 force on, 0 force off, -1 automatic. */
paulipolar_status paulipolar_space_build(int n_qubits, int with_planes,
                                         paulipolar_space** out);
void paulipolar_space_free(paulipolar_space* space);
int paulipolar_space_point_count(const paulipolar_space* space);
int paulipolar_space_line_count(const paulipolar_space* space);
/* -1 when planes were not materialized. */
int paulipolar_space_plane_count(const paulipolar_space* space);

paulipolar_status paulipolar_space_json(const paulipolar_space* space, char** out);
paulipolar_status paulipolar_space_dot(const paulipolar_space* space, char** out);
paulipolar_status paulipolar_hyperplane_census_json(const paulipolar_space* space,
                                                    char** out);
paulipolar_status paulipolar_hyperplane_list_json(const paulipolar_space* space,
                                                  char** out);
/* The 3x3 grid GQ(2,1): 15 hyperplanes = 9 perps + 6 ovoids. */
paulipolar_status paulipolar_grid_census_json(char** out);
paulipolar_status paulipolar_veldkamp_census_json(const paulipolar_space* space,
                                                  char** out);

/* ---- contextuality ---- */

/* verify != 0 re-derives every context sign with the dense matrix oracle and
 * fails with PAULIPOLAR_ERR_CHECK_FAILED on a mismatch. */
paulipolar_status paulipolar_mermin_square_json(int verify, char** out);
paulipolar_status paulipolar_mermin_pentagram_json(int verify, char** out);
paulipolar_status paulipolar_configuration_dot(const char* config_json, char** out);
paulipolar_status paulipolar_enumerate_grids_json(int verify, char** out);
/* within_json: NULL for the whole space, or {"points":[...]} / [...] of
 * operator strings; list != 0 embeds the configurations; threads <= 0 uses
 * PAULI_POLAR_THREADS or the hardware concurrency. */
paulipolar_status paulipolar_enumerate_pentagrams_json(const char* within_json,
                                                       int list, int threads,
                                                       char** out);
paulipolar_status paulipolar_game_value_json(const char* config_json, char** out);

/* ---- the magic Veldkamp line of W(5,2) ---- */

paulipolar_status paulipolar_magic_line_json(char** out);
paulipolar_status paulipolar_weight_diagram_json(char** out);
paulipolar_status paulipolar_weight_diagram_dot(char** out);
paulipolar_status paulipolar_pfaffian_check_json(int samples, unsigned long long seed,
                                                 char** out);

/* ---- SLOCC classification ---- */

/* state_json: {"format":[2,2,2],"re":[...],"im":[...]}; epsilon <= 0 uses the
 * default 1e-8. */
paulipolar_status paulipolar_slocc_classify_json(const char* state_json, double epsilon,
                                                 char** out);
/* format_csv e.g. "2,2,2". */
paulipolar_status paulipolar_secant_dimension_json(const char* format_csv, int k,
                                                   int repeats, unsigned long long seed,
                                                   int symmetric, char** out);
/* chart_csv: one fixed coordinate per factor, e.g. "0,1,1,1". */
paulipolar_status paulipolar_singularity_json(const char* state_json,
                                              const char* chart_csv, char** out);

#ifdef __cplusplus
}
#endif

#endif /* PAULIPOLAR_H */
