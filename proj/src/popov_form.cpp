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

#include "popov_form.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace pmforms {

namespace {

// row dst -= q * row src over columns >= from
void sub_poly_row(PolMat& m, std::size_t dst, std::size_t src, const Poly& q, std::size_t from) {
    if (q.is_zero()) return;
    for (std::size_t j = from; j < m.cols(); ++j)
        if (!m.at(src, j).is_zero()) m.at(dst, j) -= q * m.at(src, j);
}

void sub_poly_col(PolMat& m, std::size_t dst, std::size_t src, const Poly& q, std::size_t from) {
    if (q.is_zero()) return;
    for (std::size_t i = from; i < m.rows(); ++i)
        if (!m.at(i, src).is_zero()) m.at(i, dst) -= q * m.at(i, src);
}

// Column-operation tracker for the right transform. Every invariant factor
// divides det(A), so the transform only matters modulo det(A): keeping the
// tracked columns reduced modulo a multiple of det keeps their degrees
// bounded without changing V mod diag(invariants).
struct TransformTracker {
    PolMat v;
    Poly reducer; // monic multiple of det(A); constant disables reduction

    TransformTracker(const PrimeField& field, std::size_t n, Poly red)
        : v(PolMat::identity(field, n)), reducer(std::move(red)) {}

    void swap_cols(std::size_t i, std::size_t j) { v.swap_cols(i, j); }

    void add_col(std::size_t dst, std::size_t src) {
        for (std::size_t i = 0; i < v.rows(); ++i) {
            v.at(i, dst) += v.at(i, src);
            reduce(v.at(i, dst));
        }
    }

    void sub_col_multiple(std::size_t dst, std::size_t src, const Poly& q) {
        Poly qr = q;
        reduce(qr);
        if (qr.is_zero()) return;
        for (std::size_t i = 0; i < v.rows(); ++i) {
            if (v.at(i, src).is_zero()) continue;
            v.at(i, dst) -= qr * v.at(i, src);
            reduce(v.at(i, dst));
        }
    }

  private:
    void reduce(Poly& f) {
        if (reducer.deg() >= 1 && f.deg() >= reducer.deg()) f = f % reducer;
    }
};

// One full diagonalization with minimal-degree pivoting followed by the
// divisibility sweep. Column operations are mirrored into the tracker when
// one is given.
std::vector<Poly> diagonalize(PolMat& s, TransformTracker* tracker) {
    std::size_t n = s.rows();

    // Local divisibility repair on the diagonal pair (d, d+1): add column
    // d+1 to column d, run Euclid on the column by row operations, clear
    // the fill-in. Replaces (a, b) by (gcd, lcm) up to units.
    auto fix_divisibility = [&](std::size_t d) {
        for (std::size_t i = 0; i < n; ++i) s.at(i, d) += s.at(i, d + 1);
        if (tracker) tracker->add_col(d, d + 1);
        while (!s.at(d + 1, d).is_zero()) {
            if (s.at(d, d).is_zero() || s.at(d, d).deg() > s.at(d + 1, d).deg()) {
                s.swap_rows(d, d + 1);
                continue;
            }
            Poly q = s.at(d + 1, d) / s.at(d, d);
            sub_poly_row(s, d + 1, d, q, d);
        }
        // the fill-in above the diagonal is a multiple of the new pivot
        auto [q, rem] = divrem(s.at(d, d + 1), s.at(d, d));
        PMF_CHECK(rem.is_zero());
        sub_poly_col(s, d + 1, d, q, 0);
        if (tracker) tracker->sub_col_multiple(d + 1, d, q);
    };

    for (std::size_t d = 0; d < n; ++d) {
        while (true) {
            // minimal-degree pivot in the trailing block
            std::size_t pr = n, pc = n;
            for (std::size_t i = d; i < n; ++i)
                for (std::size_t j = d; j < n; ++j) {
                    if (s.at(i, j).is_zero()) continue;
                    if (pr == n || s.at(i, j).deg() < s.at(pr, pc).deg()) {
                        pr = i;
                        pc = j;
                    }
                }
            if (pr == n) throw SingularMatrixError("matrix is singular");
            s.swap_rows(d, pr);
            s.swap_cols(d, pc);
            if (tracker) tracker->swap_cols(d, pc);

            bool clean = true;
            for (std::size_t i = d + 1; i < n; ++i) {
                if (s.at(i, d).is_zero()) continue;
                Poly q = s.at(i, d) / s.at(d, d);
                sub_poly_row(s, i, d, q, d);
                if (!s.at(i, d).is_zero()) clean = false;
            }
            for (std::size_t j = d + 1; j < n; ++j) {
                if (s.at(d, j).is_zero()) continue;
                Poly q = s.at(d, j) / s.at(d, d);
                sub_poly_col(s, j, d, q, d);
                if (tracker) tracker->sub_col_multiple(j, d, q);
                if (!s.at(d, j).is_zero()) clean = false;
            }
            if (clean) break;
        }
        std::uint64_t linv = detail::inv_mod(s.at(d, d).lc(), s.modulus());
        if (linv != 1)
            for (std::size_t j = d; j < n; ++j) s.at(d, j).scale(linv);
    }

    // enforce the divisibility chain; each repair strictly lowers the
    // degree at its position, so the sweep terminates
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t d = 0; d + 1 < n; ++d) {
            if ((s.at(d + 1, d + 1) % s.at(d, d)).is_zero()) continue;
            fix_divisibility(d);
            std::uint64_t linv = detail::inv_mod(s.at(d, d).lc(), s.modulus());
            if (linv != 1) s.at(d, d).scale(linv);
            linv = detail::inv_mod(s.at(d + 1, d + 1).lc(), s.modulus());
            if (linv != 1) s.at(d + 1, d + 1).scale(linv);
            changed = true;
        }
    }

    std::vector<Poly> invariants;
    invariants.reserve(n);
    for (std::size_t d = 0; d < n; ++d) {
        for (std::size_t j = 0; j < n; ++j) PMF_CHECK((j == d) == !s.at(d, j).is_zero());
        PMF_CHECK(s.at(d, d).is_monic());
        if (d + 1 < n) PMF_CHECK((s.at(d + 1, d + 1) % s.at(d, d)).is_zero());
        invariants.push_back(s.at(d, d));
    }
    return invariants;
}

} // namespace

SmithDecomposition smith_with_right_transform(const PolMat& a) {
    if (a.rows() != a.cols()) throw UsageError("Smith form requires a square matrix");
    PrimeField field = a.field();

    // first pass: invariants only, giving the reduction modulus for the
    // tracked second pass
    PolMat s1 = a;
    std::vector<Poly> invariants = diagonalize(s1, nullptr);
    Poly det_monic = Poly::constant(field, 1);
    for (const Poly& f : invariants) det_monic = det_monic * f;

    PolMat s2 = a;
    TransformTracker tracker(field, a.rows(), det_monic);
    std::vector<Poly> again = diagonalize(s2, &tracker);
    PMF_CHECK(again == invariants); // canonical form, both passes agree

    SmithDecomposition out{std::move(invariants), col_mod(tracker.v, again)};
    return out;
}

ModularSystem system_from_matrix(const PolMat& a, const Shift& s) {
    if (a.rows() != a.cols()) throw UsageError("square matrix required");
    if (s.size() != a.cols()) throw UsageError("shift length does not match matrix size");
    SmithDecomposition sd = smith_with_right_transform(a);
    std::size_t n = a.rows();

    std::vector<std::size_t> active;
    for (std::size_t j = 0; j < n; ++j)
        if (sd.invariants[j].deg() >= 1) active.push_back(j);

    if (active.empty()) {
        // unimodular input: keep one vacuous constant equation
        ModularSystem sys{{sd.invariants[0]}, PolMat(a.field(), n, 1), s};
        return sys;
    }
    std::vector<Poly> moduli;
    moduli.reserve(active.size());
    for (std::size_t j : active) moduli.push_back(sd.invariants[j]);
    std::vector<std::size_t> rows(n);
    std::iota(rows.begin(), rows.end(), 0);
    return ModularSystem{std::move(moduli), sd.right_transform_mod.submatrix(rows, active), s};
}

PolMat col_partial_linearization(const PolMat& a, const std::vector<std::int64_t>& delta) {
    if (a.rows() != a.cols()) throw UsageError("square matrix required");
    std::size_t n = a.rows();
    if (delta.size() != n) throw UsageError("degree tuple length does not match matrix size");
    PrimeField field = a.field();

    std::int64_t total = 0;
    for (std::int64_t d : delta) {
        if (d < 0) throw UsageError("negative degree target");
        total += d;
    }
    std::int64_t chunk = 1 + total / static_cast<std::int64_t>(n);
    std::vector<std::size_t> alpha(n);
    std::size_t extra = 0;
    for (std::size_t i = 0; i < n; ++i) {
        alpha[i] = static_cast<std::size_t>(delta[i] / chunk) + 1;
        extra += alpha[i] - 1;
    }
    std::size_t en = n + extra;
    if (en == n) return a;

    // extra column block for original column i starts at ext_base[i]
    std::vector<std::size_t> ext_base(n);
    std::size_t pos = n;
    for (std::size_t i = 0; i < n; ++i) {
        ext_base[i] = pos;
        pos += alpha[i] - 1;
    }

    PolMat l(field, en, en);
    std::size_t csz = static_cast<std::size_t>(chunk);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i < n; ++i) {
            const Poly& src = a.at(r, i);
            if (src.is_zero()) continue;
            for (std::size_t t = 0; t < alpha[i]; ++t) {
                std::size_t lo = csz * t;
                if (src.deg() < static_cast<std::int64_t>(lo)) break;
                std::size_t hi = (t + 1 < alpha[i]) ? std::min(src.size(), lo + csz) : src.size();
                std::vector<std::uint64_t> cs(src.coeffs().begin() +
                                                  static_cast<std::ptrdiff_t>(lo),
                                              src.coeffs().begin() +
                                                  static_cast<std::ptrdiff_t>(hi));
                std::size_t col = t == 0 ? i : ext_base[i] + (t - 1);
                l.at(r, col) = Poly(field, std::move(cs));
            }
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 1; t < alpha[i]; ++t) {
            std::size_t row = ext_base[i] + (t - 1);
            std::size_t left = t == 1 ? i : ext_base[i] + (t - 2);
            l.at(row, left) = -Poly::x_power(field, csz);
            l.at(row, row) = Poly::constant(field, 1);
        }
    return l;
}

PolMat row_partial_linearization(const PolMat& a, const std::vector<std::int64_t>& delta) {
    return col_partial_linearization(a.transpose(), delta).transpose();
}

namespace {

// Column linearization with an explicit chunk size and ceiling-style block
// counts: a column splits only when its degree target exceeds the chunk, and
// every piece (including stitches) has degree at most the chunk. With chunk
// ceil(sigma/n) this is what keeps the final degree within ceil(sigma/n);
// the fixed 1 + floor(sum/n) chunk of the plain linearization can overshoot
// that bound by one and resplit its own stitch columns.
PolMat chunked_col_linearization(const PolMat& a, const std::vector<std::int64_t>& delta,
                                 std::int64_t chunk) {
    std::size_t n = a.rows();
    PrimeField field = a.field();
    std::vector<std::size_t> alpha(n);
    std::size_t extra = 0;
    for (std::size_t i = 0; i < n; ++i) {
        alpha[i] = delta[i] <= chunk
                       ? 1
                       : static_cast<std::size_t>((delta[i] + chunk - 1) / chunk);
        extra += alpha[i] - 1;
    }
    std::size_t en = n + extra;
    if (en == n) return a;

    std::vector<std::size_t> ext_base(n);
    std::size_t pos = n;
    for (std::size_t i = 0; i < n; ++i) {
        ext_base[i] = pos;
        pos += alpha[i] - 1;
    }

    PolMat l(field, en, en);
    std::size_t csz = static_cast<std::size_t>(chunk);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i < n; ++i) {
            const Poly& src = a.at(r, i);
            if (src.is_zero()) continue;
            for (std::size_t t = 0; t < alpha[i]; ++t) {
                std::size_t lo = csz * t;
                if (src.deg() < static_cast<std::int64_t>(lo)) break;
                std::size_t hi = (t + 1 < alpha[i]) ? std::min(src.size(), lo + csz) : src.size();
                std::vector<std::uint64_t> cs(src.coeffs().begin() +
                                                  static_cast<std::ptrdiff_t>(lo),
                                              src.coeffs().begin() +
                                                  static_cast<std::ptrdiff_t>(hi));
                std::size_t col = t == 0 ? i : ext_base[i] + (t - 1);
                l.at(r, col) = Poly(field, std::move(cs));
            }
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 1; t < alpha[i]; ++t) {
            std::size_t row = ext_base[i] + (t - 1);
            std::size_t left = t == 1 ? i : ext_base[i] + (t - 2);
            l.at(row, left) = -Poly::x_power(field, csz);
            l.at(row, row) = Poly::constant(field, 1);
        }
    return l;
}

} // namespace

UniformReduction reduce_to_uniform(const PolMat& a, const Shift& s) {
    if (a.rows() != a.cols()) throw UsageError("square matrix required");
    if (s.size() != a.cols()) throw UsageError("shift length does not match matrix size");
    std::size_t n = a.rows();
    std::int64_t sigma = generic_det_bound(a);

    // diagonal dominance permutations: position i receives a maximal-degree
    // entry of the trailing block
    PolMat b = a;
    std::vector<std::size_t> row_of(n); // position -> original row
    std::iota(row_of.begin(), row_of.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t br = i, bc = i;
        for (std::size_t r = i; r < n; ++r)
            for (std::size_t c = i; c < n; ++c)
                if (b.at(r, c).deg_bar() > b.at(br, bc).deg_bar()) {
                    br = r;
                    bc = c;
                }
        b.swap_rows(i, br);
        b.swap_cols(i, bc);
        std::swap(row_of[i], row_of[br]);
    }
    std::vector<std::int64_t> delta(n);
    for (std::size_t i = 0; i < n; ++i) delta[row_of[i]] = b.at(i, i).deg_bar();

    std::int64_t cap = (sigma + static_cast<std::int64_t>(n) - 1) / static_cast<std::int64_t>(n);
    std::int64_t chunk = std::max<std::int64_t>(cap, 1);
    PolMat rl = chunked_col_linearization(a.transpose(), delta, chunk).transpose();
    std::vector<std::int64_t> gamma(rl.cols(), 0);
    for (std::size_t j = 0; j < rl.cols(); ++j)
        for (std::size_t i = 0; i < rl.rows(); ++i)
            gamma[j] = std::max(gamma[j], rl.at(i, j).deg_bar());
    PolMat expanded = chunked_col_linearization(rl, gamma, chunk);

    std::size_t en = expanded.rows();
    PMF_CHECK(en <= 3 * n);
    PMF_CHECK(expanded.deg() <= std::max<std::int64_t>(cap, 0));

    UniformReduction out{std::move(expanded), s,
                         LinearizationPlan{std::move(delta), std::move(gamma), n, en}};
    if (en > n) {
        std::int64_t t = shift_max(s) + static_cast<std::int64_t>(n) * std::max<std::int64_t>(
                                                                            a.deg(), 0);
        out.shift.resize(en, t);
    }
    return out;
}

PolMat popov_form(const PolMat& a, const Shift& s) {
    if (a.rows() != a.cols()) throw UsageError("Popov form requires a square matrix");
    if (s.size() != a.cols()) throw UsageError("shift length does not match matrix size");
    std::size_t n = a.rows();

    UniformReduction ur = reduce_to_uniform(a, s);
    ModularSystem sys = system_from_matrix(ur.matrix, ur.shift);
    SolutionBasisResult sol = solution_basis(sys);

    // expanded Popov form is [[P, 0], [*, I]]
    std::size_t en = ur.matrix.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = n; j < en; ++j) PMF_CHECK(sol.basis.at(i, j).is_zero());
    for (std::size_t i = n; i < en; ++i)
        for (std::size_t j = n; j < en; ++j)
            PMF_CHECK(i == j ? sol.basis.at(i, j).is_one() : sol.basis.at(i, j).is_zero());

    PolMat p = sol.basis.principal_submatrix(n, n);
    PMF_CHECK(is_popov(p, s));
    return p;
}

Shift hermite_shift(const PolMat& a) {
    std::size_t n = a.rows();
    std::int64_t d = static_cast<std::int64_t>(n) * std::max<std::int64_t>(a.deg(), 0);
    Shift h(n);
    for (std::size_t i = 0; i < n; ++i) h[i] = static_cast<std::int64_t>(i) * d;
    return h;
}

PolMat hermite_form(const PolMat& a) {
    if (a.rows() != a.cols()) throw UsageError("Hermite form requires a square matrix");
    return popov_form(a, hermite_shift(a));
}

} // namespace pmforms
