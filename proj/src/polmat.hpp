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
#include <limits>
#include <vector>

#include "poly.hpp"

namespace pmforms {

/// Column weights biasing degree comparisons: the "s" of s-reduced and
/// s-Popov. Plain integers, one per column of the matrix they apply to.
using Shift = std::vector<std::int64_t>;

/// Sentinel row degree for zero rows, safely below any reachable shifted
/// degree and far from overflow when shifts are added to it.
constexpr std::int64_t kZeroRowDegree = std::numeric_limits<std::int64_t>::min() / 4;

std::int64_t shift_min(const Shift& s);
std::int64_t shift_max(const Shift& s);
/// max(s) - min(s).
std::int64_t shift_amplitude(const Shift& s);

/// Per-row pivot description of a matrix: for each row, the pivot column
/// (0-based here; the text formats and CLI print 1-based positions) and the
/// plain degree of the pivot entry.
struct PivotProfile {
    std::vector<std::size_t> index;
    std::vector<std::int64_t> degree;

    bool operator==(const PivotProfile&) const = default;
};

/// Dense matrix over the base field (no polynomial entries); used for
/// leading matrices and for constant elimination steps.
class FieldMatrix {
  public:
    FieldMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint64_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    std::uint64_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  private:
    std::size_t rows_, cols_;
    std::vector<std::uint64_t> a_;
};

std::size_t field_rank(FieldMatrix m, const PrimeField& field);
/// Inverse of a square matrix over the field; throws SingularMatrixError.
FieldMatrix field_inverse(const FieldMatrix& m, const PrimeField& field);

/// m x n matrix of polynomials over a common prime field, m, n >= 1.
class PolMat {
  public:
    PolMat(const PrimeField& field, std::size_t rows, std::size_t cols);

    static PolMat identity(const PrimeField& field, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint64_t modulus() const { return p_; }
    PrimeField field() const { return PrimeField(p_); }

    const Poly& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    Poly& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

    bool row_is_zero(std::size_t i) const;
    /// max entry degree; -1 for the (singular) all-zero matrix.
    std::int64_t deg() const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);

    PolMat submatrix(const std::vector<std::size_t>& row_idx,
                     const std::vector<std::size_t>& col_idx) const;
    /// Leading rows/cols block.
    PolMat principal_submatrix(std::size_t rows, std::size_t cols) const;
    PolMat transpose() const;

    bool operator==(const PolMat& other) const {
        return p_ == other.p_ && rows_ == other.rows_ && cols_ == other.cols_ && e_ == other.e_;
    }
    bool operator!=(const PolMat& other) const { return !(*this == other); }

  private:
    std::uint64_t p_;
    std::size_t rows_, cols_;
    std::vector<Poly> e_;
};

/// Exact matrix product.
PolMat operator*(const PolMat& a, const PolMat& b);

/// The s-row degree: entry i is max_j (deg p_ij + s_j) over nonzero entries,
/// kZeroRowDegree for zero rows. Requires |s| = cols.
std::vector<std::int64_t> shifted_row_degree(const PolMat& p, const Shift& s);

/// The s-leading matrix: entry (i,j) is the coefficient of degree d_i - s_j
/// of p_ij, where d_i is the s-row degree of row i. Zero rows map to zero
/// rows.
FieldMatrix shifted_leading_matrix(const PolMat& p, const Shift& s);

/// Per row, the largest column index attaining the s-row degree together
/// with the plain degree of that entry. Throws UsageError on zero rows.
PivotProfile pivot_profile(const PolMat& p, const Shift& s);

/// True iff the s-leading matrix has full row rank. Requires rows <= cols.
bool is_reduced(const PolMat& p, const Shift& s);

/// The three conditions of the shifted Popov form: strictly increasing pivot
/// indices, monic pivot entries, and in every pivot column all nonpivot
/// entries of degree less than the pivot degree. Zero rows yield false.
bool is_popov(const PolMat& p, const Shift& s);

/// Generic bound for deg(det(A)): max over permutations pi of
/// sum_i deg_bar(a_{i,pi(i)}). Exhaustive search for n <= 6, max-weight
/// bipartite matching (Hungarian method) for larger n.
std::int64_t generic_det_bound(const PolMat& a);

/// Column-wise remainder: column j of the result is column j of a reduced
/// modulo m[j]. Requires |m| = cols and all m[j] nonzero.
PolMat col_mod(const PolMat& a, const std::vector<Poly>& m);

/// P * diag(X^{s_1}, ..., X^{s_n}); requires s >= 0 componentwise.
PolMat apply_shift_diag(const PolMat& p, const Shift& s);

/// result = c * b for a constant matrix c (rows(c) x rows(b)).
PolMat mul_field_polmat(const FieldMatrix& c, const PolMat& b);

} // namespace pmforms
