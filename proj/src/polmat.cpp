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

#include "polmat.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace pmforms {

using detail::add_mod;
using detail::inv_mod;
using detail::mul_mod;
using detail::neg_mod;
using detail::sub_mod;

std::int64_t shift_min(const Shift& s) {
    if (s.empty()) throw UsageError("empty shift");
    return *std::min_element(s.begin(), s.end());
}

std::int64_t shift_max(const Shift& s) {
    if (s.empty()) throw UsageError("empty shift");
    return *std::max_element(s.begin(), s.end());
}

std::int64_t shift_amplitude(const Shift& s) { return shift_max(s) - shift_min(s); }

std::size_t field_rank(FieldMatrix m, const PrimeField& field) {
    std::uint64_t p = field.modulus();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < m.rows() && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != rank)
            for (std::size_t j = col; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(rank, j));
        std::uint64_t d = inv_mod(m.at(rank, col), p);
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            std::uint64_t f = mul_mod(m.at(i, col), d, p);
            if (f == 0) continue;
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = sub_mod(m.at(i, j), mul_mod(f, m.at(rank, j), p), p);
        }
        ++rank;
    }
    return rank;
}

FieldMatrix field_inverse(const FieldMatrix& m, const PrimeField& field) {
    if (m.rows() != m.cols()) throw UsageError("inverse of non-square matrix");
    std::size_t n = m.rows();
    std::uint64_t p = field.modulus();
    FieldMatrix a = m;
    FieldMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) inv.at(i, i) = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a.at(piv, col) == 0) ++piv;
        if (piv == n) throw SingularMatrixError("constant matrix is singular");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        std::uint64_t d = inv_mod(a.at(col, col), p);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) = mul_mod(a.at(col, j), d, p);
            inv.at(col, j) = mul_mod(inv.at(col, j), d, p);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            std::uint64_t f = a.at(i, col);
            if (f == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) = sub_mod(a.at(i, j), mul_mod(f, a.at(col, j), p), p);
                inv.at(i, j) = sub_mod(inv.at(i, j), mul_mod(f, inv.at(col, j), p), p);
            }
        }
    }
    return inv;
}

PolMat::PolMat(const PrimeField& field, std::size_t rows, std::size_t cols)
    : p_(field.modulus()), rows_(rows), cols_(cols) {
    if (rows == 0 || cols == 0) throw UsageError("matrix dimensions must be at least 1 x 1");
    e_.assign(rows * cols, Poly(field));
}

PolMat PolMat::identity(const PrimeField& field, std::size_t n) {
    PolMat m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::constant(field, 1);
    return m;
}

bool PolMat::row_is_zero(std::size_t i) const {
    for (std::size_t j = 0; j < cols_; ++j)
        if (!at(i, j).is_zero()) return false;
    return true;
}

std::int64_t PolMat::deg() const {
    std::int64_t d = -1;
    for (const Poly& e : e_) d = std::max(d, e.deg());
    return d;
}

void PolMat::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void PolMat::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

PolMat PolMat::submatrix(const std::vector<std::size_t>& row_idx,
                         const std::vector<std::size_t>& col_idx) const {
    PolMat m(field(), row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j) m.at(i, j) = at(row_idx[i], col_idx[j]);
    return m;
}

PolMat PolMat::principal_submatrix(std::size_t r, std::size_t c) const {
    if (r > rows_ || c > cols_) throw UsageError("principal submatrix larger than matrix");
    PolMat m(field(), r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = at(i, j);
    return m;
}

PolMat PolMat::transpose() const {
    PolMat m(field(), cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

PolMat operator*(const PolMat& a, const PolMat& b) {
    if (a.modulus() != b.modulus()) throw UsageError("matrix product over different fields");
    if (a.cols() != b.rows()) throw UsageError("matrix product dimension mismatch");
    PolMat r(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Poly& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) += aik * b.at(k, j);
            }
        }
    return r;
}

std::vector<std::int64_t> shifted_row_degree(const PolMat& p, const Shift& s) {
    if (s.size() != p.cols()) throw UsageError("shift length does not match column count");
    std::vector<std::int64_t> d(p.rows(), kZeroRowDegree);
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j)
            if (!p.at(i, j).is_zero()) d[i] = std::max(d[i], p.at(i, j).deg() + s[j]);
    return d;
}

FieldMatrix shifted_leading_matrix(const PolMat& p, const Shift& s) {
    std::vector<std::int64_t> d = shifted_row_degree(p, s);
    FieldMatrix lm(p.rows(), p.cols());
    for (std::size_t i = 0; i < p.rows(); ++i) {
        if (d[i] == kZeroRowDegree) continue;
        for (std::size_t j = 0; j < p.cols(); ++j) {
            std::int64_t k = d[i] - s[j];
            if (k >= 0 && !p.at(i, j).is_zero())
                lm.at(i, j) = p.at(i, j).coeff(static_cast<std::size_t>(k));
        }
    }
    return lm;
}

PivotProfile pivot_profile(const PolMat& p, const Shift& s) {
    std::vector<std::int64_t> d = shifted_row_degree(p, s);
    PivotProfile prof;
    prof.index.resize(p.rows());
    prof.degree.resize(p.rows());
    for (std::size_t i = 0; i < p.rows(); ++i) {
        if (d[i] == kZeroRowDegree) throw UsageError("pivot of a zero row is undefined");
        std::size_t piv = 0;
        bool found = false;
        for (std::size_t j = 0; j < p.cols(); ++j) {
            if (!p.at(i, j).is_zero() && p.at(i, j).deg() + s[j] == d[i]) {
                piv = j; // keep scanning: the largest attaining index wins
                found = true;
            }
        }
        PMF_CHECK(found);
        prof.index[i] = piv;
        prof.degree[i] = p.at(i, piv).deg();
    }
    return prof;
}

bool is_reduced(const PolMat& p, const Shift& s) {
    if (p.rows() > p.cols()) throw UsageError("is_reduced requires rows <= cols");
    return field_rank(shifted_leading_matrix(p, s), p.field()) == p.rows();
}

bool is_popov(const PolMat& p, const Shift& s) {
    if (p.rows() > p.cols()) throw UsageError("is_popov requires rows <= cols");
    if (s.size() != p.cols()) throw UsageError("shift length does not match column count");
    for (std::size_t i = 0; i < p.rows(); ++i)
        if (p.row_is_zero(i)) return false;
    PivotProfile prof = pivot_profile(p, s);
    for (std::size_t i = 0; i < p.rows(); ++i) {
        if (i > 0 && prof.index[i] <= prof.index[i - 1]) return false;
        if (!p.at(i, prof.index[i]).is_monic()) return false;
    }
    for (std::size_t i = 0; i < p.rows(); ++i) {
        std::size_t col = prof.index[i];
        for (std::size_t r = 0; r < p.rows(); ++r) {
            if (r == i) continue;
            if (p.at(r, col).deg() >= prof.degree[i]) return false;
        }
    }
    return true;
}

namespace {

// Max-weight perfect matching on an n x n nonnegative weight matrix,
// O(n^3) Hungarian method with potentials (stated for minimization, so
// weights are negated).
std::int64_t max_weight_assignment(const std::vector<std::vector<std::int64_t>>& w) {
    std::size_t n = w.size();
    const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
    std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0);
    std::vector<std::size_t> match(n + 1, 0); // 1-based columns -> matched row
    for (std::size_t i = 1; i <= n; ++i) {
        match[0] = i;
        std::size_t j0 = 0;
        std::vector<std::int64_t> minv(n + 1, inf);
        std::vector<bool> used(n + 1, false);
        std::vector<std::size_t> way(n + 1, 0);
        do {
            used[j0] = true;
            std::size_t i0 = match[j0], j1 = 0;
            std::int64_t delta = inf;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                std::int64_t cur = -w[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            std::size_t j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::int64_t total = 0;
    for (std::size_t j = 1; j <= n; ++j) total += w[match[j] - 1][j - 1];
    return total;
}

} // namespace

std::int64_t generic_det_bound(const PolMat& a) {
    if (a.rows() != a.cols()) throw UsageError("generic determinant bound of non-square matrix");
    std::size_t n = a.rows();
    std::vector<std::vector<std::int64_t>> w(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w[i][j] = a.at(i, j).deg_bar();
    if (n <= 6) {
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::int64_t best = 0;
        do {
            std::int64_t sum = 0;
            for (std::size_t i = 0; i < n; ++i) sum += w[i][perm[i]];
            best = std::max(best, sum);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    }
    return max_weight_assignment(w);
}

PolMat col_mod(const PolMat& a, const std::vector<Poly>& m) {
    if (m.size() != a.cols()) throw UsageError("modulus count does not match column count");
    for (const Poly& mj : m)
        if (mj.is_zero()) throw UsageError("zero modulus in column reduction");
    PolMat r = a;
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) r.at(i, j) = r.at(i, j) % m[j];
    return r;
}

PolMat apply_shift_diag(const PolMat& p, const Shift& s) {
    if (s.size() != p.cols()) throw UsageError("shift length does not match column count");
    for (std::int64_t v : s)
        if (v < 0) throw UsageError("apply_shift_diag requires a nonnegative shift");
    PolMat r = p;
    for (std::size_t j = 0; j < p.cols(); ++j) {
        if (s[j] == 0) continue;
        for (std::size_t i = 0; i < p.rows(); ++i)
            r.at(i, j) = shift_up(r.at(i, j), static_cast<std::size_t>(s[j]));
    }
    return r;
}

PolMat mul_field_polmat(const FieldMatrix& c, const PolMat& b) {
    if (c.cols() != b.rows()) throw UsageError("constant-matrix product dimension mismatch");
    PolMat r(b.field(), c.rows(), b.cols());
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t k = 0; k < c.cols(); ++k) {
            std::uint64_t f = c.at(i, k);
            if (f == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                add_scaled_shifted(r.at(i, j), b.at(k, j), f, 0);
        }
    return r;
}

} // namespace pmforms
