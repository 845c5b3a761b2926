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

#include "oracle.hpp"

#include <algorithm>
#include <optional>

#include "errors.hpp"

namespace pmforms::oracle {

namespace {

// 0-pivot of a row of W: the largest column attaining the plain row degree.
struct RowPivot {
    std::size_t col;
    std::int64_t deg;
};

std::optional<RowPivot> row_pivot(const PolMat& w, std::size_t i) {
    std::int64_t d = kZeroRowDegree;
    for (std::size_t j = 0; j < w.cols(); ++j)
        if (!w.at(i, j).is_zero()) d = std::max(d, w.at(i, j).deg());
    if (d == kZeroRowDegree) return std::nullopt;
    std::size_t col = 0;
    for (std::size_t j = 0; j < w.cols(); ++j)
        if (!w.at(i, j).is_zero() && w.at(i, j).deg() == d) col = j;
    return RowPivot{col, d};
}

void sub_scaled_shifted_row(PolMat& w, std::size_t dst, std::size_t src, std::uint64_t c,
                            std::size_t e) {
    std::uint64_t cneg = detail::neg_mod(c, w.modulus());
    for (std::size_t j = 0; j < w.cols(); ++j)
        add_scaled_shifted(w.at(dst, j), w.at(src, j), cneg, e);
}

// row dst -= q * row src
void sub_poly_row(PolMat& w, std::size_t dst, std::size_t src, const Poly& q) {
    if (q.is_zero()) return;
    for (std::size_t j = 0; j < w.cols(); ++j)
        if (!w.at(src, j).is_zero()) w.at(dst, j) -= q * w.at(src, j);
}

// Mulders-Storjohann: cancel colliding 0-pivots until the pivot indices are
// pairwise distinct. Cancellation always rewrites the row of larger degree
// using the row of smaller degree, ties broken by row index.
void weak_popov_inplace(PolMat& w) {
    std::size_t m = w.rows();
    std::vector<std::optional<RowPivot>> piv(m);
    for (std::size_t i = 0; i < m; ++i) {
        piv[i] = row_pivot(w, i);
        if (!piv[i]) throw SingularMatrixError("matrix is singular");
    }
    while (true) {
        bool collided = false;
        for (std::size_t i = 0; i < m && !collided; ++i)
            for (std::size_t j = i + 1; j < m && !collided; ++j) {
                if (piv[i]->col != piv[j]->col) continue;
                collided = true;
                std::size_t lo = j, hi = i; // rewrite hi using lo
                if (piv[i]->deg < piv[j]->deg || (piv[i]->deg == piv[j]->deg && i < j)) {
                    lo = i;
                    hi = j;
                }
                std::size_t col = piv[lo]->col;
                std::uint64_t c = detail::mul_mod(w.at(hi, col).lc(),
                                                  detail::inv_mod(w.at(lo, col).lc(), w.modulus()),
                                                  w.modulus());
                sub_scaled_shifted_row(w, hi, lo, c,
                                       static_cast<std::size_t>(piv[hi]->deg - piv[lo]->deg));
                piv[hi] = row_pivot(w, hi);
                if (!piv[hi]) throw SingularMatrixError("matrix is singular");
            }
        if (!collided) return;
    }
}

// One division step of the column-degree normalization: among entries
// (r, j), j != r, of excess degree (deg >= deg of pivot (j,j)), reduce the
// one with the largest (degree + s_j, then j). The pivot entries themselves
// are never touched at the top, so this terminates.
void reduce_offpivot_inplace(PolMat& w, const Shift& s) {
    std::size_t n = w.rows();
    std::vector<std::int64_t> pivdeg(n);
    for (std::size_t i = 0; i < n; ++i) pivdeg[i] = w.at(i, i).deg();
    while (true) {
        bool found = false;
        std::size_t br = 0, bj = 0;
        std::int64_t bkey = 0;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t j = 0; j < n; ++j) {
                if (j == r || w.at(r, j).is_zero()) continue;
                if (w.at(r, j).deg() < pivdeg[j]) continue;
                std::int64_t key = w.at(r, j).deg() + s[j];
                if (!found || key > bkey || (key == bkey && j > bj)) {
                    found = true;
                    br = r;
                    bj = j;
                    bkey = key;
                }
            }
        if (!found) return;
        Poly q = w.at(br, bj) / w.at(bj, bj);
        sub_poly_row(w, br, bj, q);
    }
}

} // namespace

PolMat naive_popov_form(const PolMat& a, const Shift& s) {
    if (a.rows() != a.cols()) throw UsageError("Popov form requires a square matrix");
    if (s.size() != a.cols()) throw UsageError("shift length does not match column count");
    std::int64_t mn = shift_min(s);
    Shift s0(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) s0[j] = s[j] - mn;

    PolMat w = apply_shift_diag(a, s0);
    weak_popov_inplace(w);

    // sort by pivot index; square weak Popov => pivots are a permutation
    std::size_t n = w.rows();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto piv = row_pivot(w, i);
        PMF_CHECK(piv.has_value());
        order[piv->col] = i;
    }
    PolMat sorted(w.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sorted.at(i, j) = w.at(order[i], j);
    w = std::move(sorted);

    for (std::size_t i = 0; i < n; ++i) {
        PMF_CHECK(!w.at(i, i).is_zero());
        std::uint64_t linv = detail::inv_mod(w.at(i, i).lc(), w.modulus());
        if (linv != 1)
            for (std::size_t j = 0; j < n; ++j) w.at(i, j).scale(linv);
    }
    reduce_offpivot_inplace(w, Shift(n, 0));

    // undo the X^s column scaling
    PolMat out = w;
    for (std::size_t j = 0; j < n; ++j) {
        if (s0[j] == 0) continue;
        for (std::size_t i = 0; i < n; ++i)
            out.at(i, j) = shift_down_exact(out.at(i, j), static_cast<std::size_t>(s0[j]));
    }
    PMF_CHECK(is_popov(out, s));
    return out;
}

PolMat naive_solution_basis(const std::vector<Poly>& moduli, const PolMat& f, const Shift& s) {
    std::size_t n = f.rows();
    std::size_t k = f.cols();
    if (moduli.size() != k) throw UsageError("modulus count does not match equation columns");
    if (s.size() != n) throw UsageError("shift length does not match unknown count");
    for (const Poly& m : moduli)
        if (m.is_zero()) throw UsageError("zero modulus");
    PrimeField field = f.field();

    // stacked matrix N = [F over diag(M)] with a tracked identity
    PolMat nmat(field, n + k, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) nmat.at(i, j) = f.at(i, j);
    for (std::size_t j = 0; j < k; ++j) nmat.at(n + j, j) = moduli[j];
    PolMat t = PolMat::identity(field, n + k);

    std::size_t rank = 0;
    for (std::size_t col = 0; col < k; ++col) {
        while (true) {
            std::size_t best = n + k;
            for (std::size_t r = rank; r < n + k; ++r) {
                if (nmat.at(r, col).is_zero()) continue;
                if (best == n + k || nmat.at(r, col).deg() < nmat.at(best, col).deg()) best = r;
            }
            PMF_CHECK(best != n + k); // diag(M) guarantees a pivot
            nmat.swap_rows(rank, best);
            t.swap_rows(rank, best);
            bool clean = true;
            for (std::size_t r = rank + 1; r < n + k; ++r) {
                if (nmat.at(r, col).is_zero()) continue;
                Poly q = nmat.at(r, col) / nmat.at(rank, col);
                sub_poly_row(nmat, r, rank, q);
                sub_poly_row(t, r, rank, q);
                if (!nmat.at(r, col).is_zero()) clean = false;
            }
            if (clean) break;
        }
        ++rank;
    }
    PMF_CHECK(rank == k);
    for (std::size_t r = k; r < n + k; ++r)
        for (std::size_t col = 0; col < k; ++col) PMF_CHECK(nmat.at(r, col).is_zero());

    // kernel rows, restricted to the first n coordinates
    PolMat basis(field, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j < n; ++j) basis.at(r, j) = t.at(k + r, j);
    return naive_popov_form(basis, s);
}

PolMat reduce_row_mod_basis(const PolMat& v, const PolMat& p, const Shift& s) {
    if (v.rows() != 1) throw UsageError("reduce_row_mod_basis expects a single row");
    if (p.rows() != p.cols() || v.cols() != p.cols())
        throw UsageError("basis dimensions do not match the row");
    if (!is_popov(p, s)) throw UsageError("reduction basis is not in shifted Popov form");
    std::size_t n = p.cols();
    std::vector<std::int64_t> pivdeg(n);
    for (std::size_t j = 0; j < n; ++j) pivdeg[j] = p.at(j, j).deg();

    PolMat r = v;
    while (true) {
        bool found = false;
        std::size_t bj = 0;
        std::int64_t bkey = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (r.at(0, j).is_zero() || r.at(0, j).deg() < pivdeg[j]) continue;
            std::int64_t key = r.at(0, j).deg() + s[j];
            if (!found || key > bkey || (key == bkey && j > bj)) {
                found = true;
                bj = j;
                bkey = key;
            }
        }
        if (!found) return r;
        Poly q = r.at(0, bj) / p.at(bj, bj);
        for (std::size_t j = 0; j < n; ++j)
            if (!p.at(bj, j).is_zero()) r.at(0, j) -= q * p.at(bj, j);
    }
}

bool row_space_equal(const PolMat& a, const PolMat& b, const Shift& s) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.cols() != b.cols())
        throw UsageError("row_space_equal expects square matrices of equal size");
    if (!is_popov(b, s)) throw UsageError("second matrix is not in shifted Popov form");
    std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i) {
        PolMat row(a.field(), 1, n);
        for (std::size_t j = 0; j < n; ++j) row.at(0, j) = a.at(i, j);
        PolMat rem = reduce_row_mod_basis(row, b, s);
        for (std::size_t j = 0; j < n; ++j)
            if (!rem.at(0, j).is_zero()) return false;
    }
    Poly da = det_fraction_free(a);
    if (da.is_zero()) return false;
    std::int64_t pivsum = 0;
    for (std::size_t j = 0; j < n; ++j) pivsum += b.at(j, j).deg();
    return da.deg() == pivsum;
}

Poly det_fraction_free(const PolMat& a) {
    if (a.rows() != a.cols()) throw UsageError("determinant of non-square matrix");
    std::size_t n = a.rows();
    PrimeField field = a.field();
    PolMat m = a;
    bool negate = false;
    Poly prev = Poly::constant(field, 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m.at(piv, k).is_zero()) ++piv;
        if (piv == n) return Poly(field);
        if (piv != k) {
            m.swap_rows(piv, k);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly num = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
                auto [q, rem] = divrem(num, prev);
                PMF_CHECK(rem.is_zero()); // Bareiss divisions are exact
                m.at(i, j) = std::move(q);
            }
        for (std::size_t i = k + 1; i < n; ++i) m.at(i, k) = Poly(field);
        prev = m.at(k, k);
    }
    Poly det = m.at(n - 1, n - 1);
    if (negate) det.negate();
    return det;
}

} // namespace pmforms::oracle
