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

#include "modsys.hpp"
#include "polmat.hpp"

namespace pmforms {

/// Smith form data of a nonsingular matrix: the invariant factors
/// s_1 | s_2 | ... | s_m (monic, constant factors normalized to 1) and the
/// right transform V reduced column-wise modulo the invariants, i.e.
/// V mod diag(invariants) for some unimodular V with U A V diagonal.
struct SmithDecomposition {
    std::vector<Poly> invariants;
    PolMat right_transform_mod;
};

/// Deterministic Smith normal form by elementary row and column operations
/// with minimal-degree pivoting; column operations are tracked to recover
/// the reduced right transform. Throws SingularMatrixError when rank < n.
SmithDecomposition smith_with_right_transform(const PolMat& a);

/// The modular system whose solution module is the row space of A:
/// moduli are the nontrivial Smith invariants and the equations are the
/// corresponding columns of the reduced right transform. When A is
/// unimodular the system keeps a single constant modulus with a zero
/// equation column, so the basis of its (unconstrained) solutions is the
/// identity.
ModularSystem system_from_matrix(const PolMat& a, const Shift& s);

/// Column partial linearization: columns of degree above
/// chunk = 1 + floor(sum(delta)/n) are split into chunks of X^chunk steps,
/// extra columns appended after the original n, stitched by
/// [-X^chunk, 1] rows so that the result is left-unimodularly equivalent to
/// diag(A, I).
PolMat col_partial_linearization(const PolMat& a, const std::vector<std::int64_t>& delta);

/// Row variant; equals the transposed column linearization of the
/// transpose.
PolMat row_partial_linearization(const PolMat& a, const std::vector<std::int64_t>& delta);

struct LinearizationPlan {
    std::vector<std::int64_t> row_targets; // degree profile driving the row pass
    std::vector<std::int64_t> col_targets; // column degrees driving the column pass
    std::size_t original_dim = 0;
    std::size_t expanded_dim = 0;
};

struct UniformReduction {
    PolMat matrix; // row-then-column linearized input, degree <= ceil(sigma/n)
    Shift shift;   // (s, t, ..., t) with t = max(s) + n deg(A); s itself when trivial
    LinearizationPlan plan;
};

/// Degree normalization ahead of the Popov computation: a diagonal-
/// dominance permutation picks the degree profile, then row and column
/// partial linearizations produce an equivalent matrix of dimension at most
/// 3n and degree at most ceil(sigma(A)/n), whose shifted Popov form
/// contains the shifted Popov form of A as its principal n x n block.
UniformReduction reduce_to_uniform(const PolMat& a, const Shift& s);

/// The unique matrix in s-Popov form that is left-unimodularly equivalent
/// to A. Pipeline: reduce_to_uniform, Smith system, shifted Popov solution
/// basis, principal block extraction.
PolMat popov_form(const PolMat& a, const Shift& s);

/// The staircase shift (0, d, 2d, ..., (n-1)d) with d = n deg(A).
Shift hermite_shift(const PolMat& a);

/// Hermite form: the shifted Popov form under hermite_shift(a); lower
/// triangular with monic diagonal.
PolMat hermite_form(const PolMat& a);

} // namespace pmforms
