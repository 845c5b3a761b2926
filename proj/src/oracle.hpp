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

#pragma once

#include "polmat.hpp"

namespace pmforms::oracle {

// Slow, independent reference algorithms. They share only the base
// arithmetic (poly / polmat) with the fast pipeline so that equality tests
// between the two are meaningful. Quadratic-to-cubic costs throughout, by
// design.

/// s-Popov form of a nonsingular matrix by iterative weak-Popov reduction:
/// normalize s to min 0, work on A * diag(X^s), cancel colliding pivots by
/// polynomial row operations until weak Popov, sort rows by pivot index,
/// make pivots monic, reduce nonpivot column entries, divide column j by
/// X^{s_j}. Throws SingularMatrixError on singular input.
PolMat naive_popov_form(const PolMat& a, const Shift& s);

/// s-Popov basis of {p : p*F = 0 mod (m_1, ..., m_k)} computed from a left
/// nullspace basis of [F over diag(M)] (row echelon reduction with a tracked
/// identity), restricted to the first n coordinates and Popov-normalized.
PolMat naive_solution_basis(const std::vector<Poly>& moduli, const PolMat& f, const Shift& s);

/// Unique remainder r = v - u*P with deg(r_j) < pivot degree of column j for
/// every pivot column of P. Requires P square in s-Popov form; r = 0 iff v
/// lies in the row space of P.
PolMat reduce_row_mod_basis(const PolMat& v, const PolMat& p, const Shift& s);

/// True iff every row of A reduces to 0 against B and deg det A equals the
/// pivot degree sum of B. Requires B square in s-Popov form.
bool row_space_equal(const PolMat& a, const PolMat& b, const Shift& s);

/// Determinant by fraction-free (Bareiss) elimination; exact divisions are
/// asserted.
Poly det_fraction_free(const PolMat& a);

} // namespace pmforms::oracle
