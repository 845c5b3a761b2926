/*
   Copyright 2026 The pmforms authors

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

/* C interface of the pmforms shared library.
 *
 * Polynomial matrices live behind the opaque pmf_matrix handle; every
 * function reports a pmf_status and leaves a human-readable message for the
 * most recent failure in thread-local storage (pmf_last_error).
 *
 * Matrix text format: line 1 the prime field modulus p, line 2 "m n", then
 * m*n lines row major, each line the coefficients c0 c1 ... cd of one entry
 * (low degree first, single spaces), the single token "0" for a zero entry.
 * Lines starting with '#' are comments. Shifts are arrays of int64_t, one
 * entry per matrix column (or per unknown); a NULL shift means uniform 0.
 */

#ifndef PMFORMS_H
#define PMFORMS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pmf_matrix pmf_matrix;

typedef enum pmf_status {
    PMF_OK = 0,
    PMF_ERR_PARSE = 1,    /* malformed input text */
    PMF_ERR_SINGULAR = 2, /* nonsingular matrix required */
    PMF_ERR_INTERNAL = 3, /* internal invariant violation (a bug) */
    PMF_ERR_USAGE = 4,    /* precondition violated by the caller */
    PMF_ERR_IO = 5,       /* file could not be read or written */
} pmf_status;

/* Message describing the most recent failure in this thread; never NULL. */
const char* pmf_last_error(void);

/* --- matrix lifecycle ------------------------------------------------- */

pmf_status pmf_matrix_read_file(const char* path, pmf_matrix** out);
pmf_status pmf_matrix_read_string(const char* text, pmf_matrix** out);
/* Canonical text form; free with pmf_string_free. */
pmf_status pmf_matrix_write_string(const pmf_matrix* m, char** out);
void pmf_string_free(char* s);
void pmf_matrix_free(pmf_matrix* m);

uint64_t pmf_matrix_modulus(const pmf_matrix* m);
size_t pmf_matrix_rows(const pmf_matrix* m);
size_t pmf_matrix_cols(const pmf_matrix* m);
/* Max entry degree, -1 for the zero matrix. */
int64_t pmf_matrix_degree(const pmf_matrix* m);

/* --- normal forms ------------------------------------------------------ */

/* Shifted Popov form of a square nonsingular matrix; shift has one entry
 * per column, NULL meaning the uniform shift. */
pmf_status pmf_popov_form(const pmf_matrix* a, const int64_t* shift, pmf_matrix** out);

/* Hermite form (lower triangular, monic diagonal). */
pmf_status pmf_hermite_form(const pmf_matrix* a, pmf_matrix** out);

/* The staircase shift (0, d, 2d, ...) with d = n*deg(a); fills shift_out
 * with rows(a) entries. */
pmf_status pmf_hermite_shift(const pmf_matrix* a, int64_t* shift_out);

/* Invariant factors of the Smith form as an n x 1 matrix, low to high. */
pmf_status pmf_smith_form(const pmf_matrix* a, pmf_matrix** invariants_out);

/* --- modular systems and order bases ------------------------------------ */

/* Shifted Popov basis of {p : p*F = 0 mod (m_1, ..., m_k)}. moduli is a
 * k x 1 matrix, equations is n x k with deg of column j below deg(m_j),
 * shift has n entries (NULL = uniform). delta_out, when non-NULL, receives
 * the n pivot degrees. */
pmf_status pmf_solution_basis(const pmf_matrix* moduli, const pmf_matrix* equations,
                              const int64_t* shift, pmf_matrix** basis_out, int64_t* delta_out);

/* Shifted Popov order basis for F and per-column orders (all >= 1); shift
 * has rows(f) entries. delta_out as above. */
pmf_status pmf_order_basis(const pmf_matrix* f, const int64_t* orders, const int64_t* shift,
                           pmf_matrix** basis_out, int64_t* delta_out);

/* --- predicates --------------------------------------------------------- */

/* holds_out receives 1 or 0. */
pmf_status pmf_is_popov(const pmf_matrix* m, const int64_t* shift, int* holds_out);
pmf_status pmf_is_reduced(const pmf_matrix* m, const int64_t* shift, int* holds_out);

/* Pivot columns (1-based) and pivot degrees, one per row; fails with
 * PMF_ERR_USAGE when some row is zero. Either output may be NULL. */
pmf_status pmf_pivot_profile(const pmf_matrix* m, const int64_t* shift, size_t* index_out,
                             int64_t* degree_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PMFORMS_H */
