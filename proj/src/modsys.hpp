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

#include <cstdint>
#include <optional>
#include <vector>

#include "order_basis.hpp"
#include "polmat.hpp"

namespace pmforms {

/// A system of modular equations: the solutions are the row vectors p with
/// p * F = 0 mod (m_1, ..., m_k), column-wise. Invariants: every m_j is
/// nonzero and deg(F_{.,j}) < deg(m_j).
struct ModularSystem {
    std::vector<Poly> moduli; // m_1, ..., m_k
    PolMat equations;         // n x k
    Shift shift;              // length n
};

/// Throws UsageError when the system invariants fail.
void validate_modular_system(const ModularSystem& sys);

struct SolutionBasisResult {
    PolMat basis;                         // n x n, in shift-Popov form
    std::vector<std::int64_t> min_degree; // its pivot degrees; sum <= sigma
};

/// Expansion of a pivot-degree tuple into near-uniform chunks of size
/// chunk = ceil(sigma / n), together with the expansion-compression matrix
/// E whose block i holds the rows X^0, X^chunk, ..., X^{(alpha_i-1) chunk}
/// in column i. Requires sigma >= 1 and sum(delta) <= sigma; the expanded
/// dimension is at most 2n.
struct MinDegreeExpansion {
    std::int64_t chunk;                          // ceil(sigma / n)
    std::vector<std::size_t> block_counts;       // alpha_i, one per row
    std::vector<std::int64_t> expanded_degree;   // delta-tilde, length sum(alpha)
    PolMat expansion;                            // E, sum(alpha) x n
};

MinDegreeExpansion expand_min_degree(const PrimeField& field,
                                     const std::vector<std::int64_t>& delta, std::int64_t sigma);

/// Solves the system when delta is known to be its exact shift-minimal
/// degree: partial linearization by expand_min_degree, one Popov order
/// basis on [E*F mod M over diag(M)], then compression back. Throws
/// InternalError("inconsistent minimal degree") when the candidate fails
/// its Popov or residual check, which signals a wrong delta.
PolMat known_degree_solution_basis(const ModularSystem& sys,
                                   const std::vector<std::int64_t>& delta);

/// Partition of the shift into buckets of width alpha: bucket b holds the
/// entries with value in [min(s) + b*alpha, min(s) + (b+1)*alpha - 1].
/// Bucket contents are original indices ordered by (value, index), so their
/// concatenation is the stable sorting permutation of s.
struct ShiftPartition {
    std::int64_t width;
    std::vector<std::vector<std::size_t>> buckets;
};

ShiftPartition partition_shift(const Shift& s, std::int64_t alpha);

/// Largest i in [1, n-1] such that, with mu the stable sorting permutation
/// of t, delta_{mu_j} + t_{mu_j} - t_{mu_{i+1}} < 0 for all j <= i; nullopt
/// when no such i exists. The value i counts the sorted-lowest entries that
/// split off a leading block of the Popov solution basis.
std::optional<std::size_t> largest_splitting_index(const std::vector<std::int64_t>& delta,
                                                   const Shift& t);

/// Single-modulus solver (divide and conquer on the shift amplitude).
/// Requires deg(f) < deg(modulus) = sigma >= 1 and alpha >= 2 sigma; the
/// initial call uses alpha = 2 sigma. Consecutive sorted shift gaps are
/// clamped to sigma on entry, which leaves the Popov solution basis
/// unchanged and guarantees that a splitting index exists on the recursive
/// path.
SolutionBasisResult solution_basis_one(const Poly& modulus, const PolMat& f, const Shift& s,
                                       std::int64_t alpha);

/// P * F mod M computed through the column partial linearization of P so
/// that intermediate degrees stay near sum(cdeg P) / n. Identical to the
/// naive multiply-then-reduce.
PolMat residual_product(const PolMat& p, const PolMat& f, const std::vector<Poly>& moduli);

/// The shift-Popov solution basis and minimal degree of the system:
/// divide and conquer on the number of moduli, with single-modulus base
/// cases and a known-degree reconstruction at each join.
SolutionBasisResult solution_basis(const ModularSystem& sys);

/// Test instrumentation: counters over solution_basis_one executions in
/// the current thread.
struct SolveStats {
    std::uint64_t base_cases = 0;
    std::uint64_t recursive_steps = 0;       // amplitude-splitting branches taken
    std::uint64_t splitting_indices = 0;     // splitting indices located
    std::uint64_t exact_shift_downs = 0;     // exact divisions by X^{2 sigma}
    std::uint64_t clamped_gaps = 0;          // shift gaps clamped to sigma
    std::uint64_t max_depth = 0;

    void reset() { *this = SolveStats{}; }
};

SolveStats& solve_stats();

} // namespace pmforms
