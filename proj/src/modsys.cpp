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

#include "modsys.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace pmforms {

namespace {

std::vector<std::size_t> stable_sort_perm(const Shift& s) {
    std::vector<std::size_t> perm(s.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](std::size_t a, std::size_t b) { return s[a] < s[b]; });
    return perm;
}

Shift subshift(const Shift& s, const std::vector<std::size_t>& idx) {
    Shift out(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) out[i] = s[idx[i]];
    return out;
}

// Clamp the consecutive sorted gaps of s to cap. The shifted Popov solution
// basis is invariant under this normalization: entries sitting across a gap
// larger than the moduli degree sum are forced to zero in the basis, so the
// pivot comparisons the basis can see are identical before and after.
Shift clamp_sorted_gaps(const Shift& s, std::int64_t cap) {
    if (s.size() <= 1) return s;
    std::vector<std::size_t> perm = stable_sort_perm(s);
    Shift out(s.size());
    out[perm[0]] = s[perm[0]];
    for (std::size_t t = 1; t < perm.size(); ++t) {
        std::int64_t gap = s[perm[t]] - s[perm[t - 1]];
        if (gap > cap) {
            gap = cap;
            ++solve_stats().clamped_gaps;
        }
        out[perm[t]] = out[perm[t - 1]] + gap;
    }
    return out;
}

struct DepthGuard {
    explicit DepthGuard(std::uint64_t& depth) : depth_(depth) {
        ++depth_;
        solve_stats().max_depth = std::max(solve_stats().max_depth, depth_);
    }
    ~DepthGuard() { --depth_; }
    std::uint64_t& depth_;
};

thread_local std::uint64_t g_solve_depth = 0;

PolMat stack_equations_modulus(const PolMat& f, const Poly& modulus) {
    PolMat n(f.field(), f.rows() + 1, 1);
    for (std::size_t i = 0; i < f.rows(); ++i) n.at(i, 0) = f.at(i, 0);
    n.at(f.rows(), 0) = modulus;
    return n;
}

SolutionBasisResult solution_basis_one_clamped(const Poly& modulus, const PolMat& f,
                                               const Shift& s, std::int64_t alpha);

} // namespace

SolveStats& solve_stats() {
    thread_local SolveStats stats;
    return stats;
}

void validate_modular_system(const ModularSystem& sys) {
    std::size_t n = sys.equations.rows();
    std::size_t k = sys.equations.cols();
    if (sys.moduli.size() != k) throw UsageError("modulus count does not match equation columns");
    if (sys.shift.size() != n) throw UsageError("shift length does not match unknown count");
    for (std::size_t j = 0; j < k; ++j) {
        const Poly& mj = sys.moduli[j];
        if (mj.is_zero()) throw UsageError("zero modulus in modular system");
        if (mj.modulus() != sys.equations.modulus())
            throw UsageError("modular system mixes different fields");
        for (std::size_t i = 0; i < n; ++i)
            if (sys.equations.at(i, j).deg() >= mj.deg())
                throw UsageError("equation column degree must be smaller than its modulus degree");
    }
}

MinDegreeExpansion expand_min_degree(const PrimeField& field,
                                     const std::vector<std::int64_t>& delta, std::int64_t sigma) {
    std::size_t n = delta.size();
    if (n == 0) throw UsageError("empty degree tuple");
    if (sigma < 1) throw UsageError("expansion requires sigma >= 1");
    std::int64_t sum = 0;
    for (std::int64_t d : delta) {
        if (d < 0) throw UsageError("negative pivot degree");
        sum += d;
    }
    if (sum > sigma) throw UsageError("pivot degree sum exceeds sigma");

    std::int64_t chunk = (sigma + static_cast<std::int64_t>(n) - 1) / static_cast<std::int64_t>(n);
    MinDegreeExpansion out{chunk, {}, {}, PolMat(field, 1, 1)};
    out.block_counts.resize(n);
    std::size_t expanded = 0;
    for (std::size_t i = 0; i < n; ++i) {
        out.block_counts[i] = static_cast<std::size_t>(delta[i] / chunk) + 1;
        expanded += out.block_counts[i];
    }
    PMF_CHECK(expanded <= 2 * n);
    out.expanded_degree.reserve(expanded);
    PolMat e(field, expanded, n);
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t beta = delta[i] % chunk;
        for (std::size_t t = 0; t + 1 < out.block_counts[i]; ++t)
            out.expanded_degree.push_back(chunk);
        out.expanded_degree.push_back(beta);
        for (std::size_t t = 0; t < out.block_counts[i]; ++t, ++row)
            e.at(row, i) = Poly::x_power(field, static_cast<std::size_t>(chunk) * t);
    }
    out.expansion = std::move(e);
    return out;
}

PolMat known_degree_solution_basis(const ModularSystem& sys,
                                   const std::vector<std::int64_t>& delta) {
    validate_modular_system(sys);
    std::size_t n = sys.equations.rows();
    std::size_t k = sys.equations.cols();
    if (delta.size() != n) throw UsageError("degree tuple length does not match unknown count");
    PrimeField field = sys.equations.field();

    std::int64_t sigma = 0;
    for (const Poly& mj : sys.moduli) sigma += mj.deg();
    if (sigma == 0) {
        // constant moduli constrain nothing
        for (std::int64_t d : delta)
            if (d != 0) throw InternalError("inconsistent minimal degree");
        return PolMat::identity(field, n);
    }

    MinDegreeExpansion exp = expand_min_degree(field, delta, sigma);
    std::size_t en = exp.expanded_degree.size();

    PolMat ef = col_mod(exp.expansion * sys.equations, sys.moduli);

    // stacked [E*F mod M over diag(M)] with shift (-delta~, -chunk-1, ...)
    PolMat stacked(field, en + k, k);
    for (std::size_t i = 0; i < en; ++i)
        for (std::size_t j = 0; j < k; ++j) stacked.at(i, j) = ef.at(i, j);
    for (std::size_t j = 0; j < k; ++j) stacked.at(en + j, j) = sys.moduli[j];

    Shift u(en + k);
    for (std::size_t i = 0; i < en; ++i) u[i] = -exp.expanded_degree[i];
    for (std::size_t j = 0; j < k; ++j) u[en + j] = -exp.chunk - 1;
    Orders tau(k);
    for (std::size_t j = 0; j < k; ++j) tau[j] = sys.moduli[j].deg() + exp.chunk + 1;

    OrderBasisResult ob = popov_order_basis(stacked, tau, u);
    PolMat pe = ob.basis.principal_submatrix(en, en) * exp.expansion;

    PolMat basis(field, n, n);
    std::size_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += exp.block_counts[i];
        for (std::size_t j = 0; j < n; ++j) basis.at(i, j) = pe.at(acc - 1, j);
    }

    // wrong delta cannot produce a valid basis; detect it rather than
    // return garbage
    bool ok = is_popov(basis, sys.shift);
    if (ok)
        for (std::size_t i = 0; i < n && ok; ++i)
            ok = basis.at(i, i).deg() == delta[i];
    if (ok) {
        PolMat res = col_mod(basis * sys.equations, sys.moduli);
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < k && ok; ++j) ok = res.at(i, j).is_zero();
    }
    if (!ok) throw InternalError("inconsistent minimal degree");
    return basis;
}

ShiftPartition partition_shift(const Shift& s, std::int64_t alpha) {
    if (alpha < 1) throw UsageError("partition width must be positive");
    if (s.empty()) throw UsageError("empty shift");
    std::int64_t lo = shift_min(s);
    std::size_t nbuckets = static_cast<std::size_t>(shift_amplitude(s) / alpha) + 1;
    ShiftPartition part{alpha, std::vector<std::vector<std::size_t>>(nbuckets)};
    for (std::size_t i : stable_sort_perm(s))
        part.buckets[static_cast<std::size_t>((s[i] - lo) / alpha)].push_back(i);
    return part;
}

std::optional<std::size_t> largest_splitting_index(const std::vector<std::int64_t>& delta,
                                                   const Shift& t) {
    if (delta.size() != t.size()) throw UsageError("degree and shift lengths differ");
    std::size_t n = t.size();
    if (n < 2) return std::nullopt;
    std::vector<std::size_t> mu = stable_sort_perm(t);
    std::vector<std::int64_t> prefix_max(n);
    std::int64_t run = kZeroRowDegree;
    for (std::size_t i = 0; i < n; ++i) {
        run = std::max(run, delta[mu[i]] + t[mu[i]]);
        prefix_max[i] = run;
    }
    for (std::size_t i = n - 1; i >= 1; --i)
        if (prefix_max[i - 1] < t[mu[i]]) return i;
    return std::nullopt;
}

PolMat residual_product(const PolMat& p, const PolMat& f, const std::vector<Poly>& moduli) {
    if (p.cols() != f.rows()) throw UsageError("residual product dimension mismatch");
    if (moduli.size() != f.cols()) throw UsageError("modulus count does not match columns");
    for (std::size_t j = 0; j < moduli.size(); ++j) {
        if (moduli[j].is_zero()) throw UsageError("zero modulus");
        for (std::size_t i = 0; i < f.rows(); ++i)
            if (f.at(i, j).deg() >= moduli[j].deg())
                throw UsageError("equation column degree must be smaller than its modulus degree");
    }
    PrimeField field = p.field();
    std::size_t n = p.cols();

    std::vector<std::int64_t> cdeg(n, 0);
    std::int64_t total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < p.rows(); ++i) cdeg[j] = std::max(cdeg[j], p.at(i, j).deg());
        total += cdeg[j];
    }
    MinDegreeExpansion exp = expand_min_degree(field, cdeg, std::max<std::int64_t>(total, 1));
    std::size_t en = exp.expanded_degree.size();
    std::size_t chunk = static_cast<std::size_t>(exp.chunk);

    // p = ptilde * E with ptilde columns of degree < chunk
    PolMat ptilde(field, p.rows(), en);
    std::size_t col = 0;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t t = 0; t < exp.block_counts[j]; ++t, ++col) {
            for (std::size_t i = 0; i < p.rows(); ++i) {
                const Poly& src = p.at(i, j);
                std::size_t lodeg = chunk * t;
                if (src.deg() < static_cast<std::int64_t>(lodeg)) continue;
                std::size_t hi = t + 1 < exp.block_counts[j]
                                     ? std::min(src.size(), lodeg + chunk)
                                     : src.size();
                std::vector<std::uint64_t> cs(src.coeffs().begin() +
                                                  static_cast<std::ptrdiff_t>(lodeg),
                                              src.coeffs().begin() +
                                                  static_cast<std::ptrdiff_t>(hi));
                ptilde.at(i, col) = Poly(field, std::move(cs));
            }
        }
    }
    PolMat ef = col_mod(exp.expansion * f, moduli);
    return col_mod(ptilde * ef, moduli);
}

namespace {

SolutionBasisResult solution_basis_one_base(const Poly& modulus, const PolMat& f, const Shift& s,
                                            std::int64_t alpha) {
    ++solve_stats().base_cases;
    std::size_t n = f.rows();
    std::int64_t sigma = modulus.deg();
    PolMat stacked = stack_equations_modulus(f, modulus);
    Shift u(s);
    u.push_back(shift_min(s));
    Orders tau(1, 2 * alpha + 2 * sigma);
    OrderBasisResult ob = popov_order_basis(stacked, tau, u);
    SolutionBasisResult out{ob.basis.principal_submatrix(n, n), {}};
    PMF_CHECK(is_popov(out.basis, s));
    out.min_degree.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.min_degree[i] = out.basis.at(i, i).deg();
    PolMat res = col_mod(out.basis * f, {modulus});
    for (std::size_t i = 0; i < n; ++i) PMF_CHECK(res.at(i, 0).is_zero());
    return out;
}

SolutionBasisResult solution_basis_one_split(const Poly& modulus, const PolMat& f, const Shift& s,
                                             std::int64_t alpha) {
    ++solve_stats().recursive_steps;
    std::size_t n = f.rows();
    std::int64_t sigma = modulus.deg();
    PrimeField field = f.field();

    // recurse on the rows in the lower half of the shift partition
    ShiftPartition part = partition_shift(s, alpha);
    std::size_t nbuckets = part.buckets.size();
    PMF_CHECK(nbuckets >= 3);
    std::size_t take = (nbuckets + 1) / 2;
    std::vector<std::size_t> sel;
    for (std::size_t b = 0; b < take; ++b)
        sel.insert(sel.end(), part.buckets[b].begin(), part.buckets[b].end());
    std::sort(sel.begin(), sel.end());
    PMF_CHECK(!sel.empty() && sel.size() < n);

    std::vector<std::size_t> all_cols(1, 0);
    PolMat f0 = f.submatrix(sel, all_cols);
    Shift s0 = subshift(s, sel);
    SolutionBasisResult low = solution_basis_one_clamped(modulus, f0, s0, alpha);

    std::optional<std::size_t> split = largest_splitting_index(low.min_degree, s0);
    PMF_CHECK(split.has_value()); // guaranteed by the clamped gaps
    ++solve_stats().splitting_indices;
    std::size_t i = *split;

    // the i sorted-lowest entries of s0 are also the i sorted-lowest of s
    std::vector<std::size_t> mu0 = stable_sort_perm(s0);
    std::vector<bool> in_s1(n, false);
    std::vector<std::int64_t> delta1(n, 0);
    for (std::size_t t = 0; t < i; ++t) {
        std::size_t g = sel[mu0[t]];
        in_s1[g] = true;
        delta1[g] = low.min_degree[mu0[t]];
    }
    std::vector<std::size_t> s1_idx, s2_idx;
    for (std::size_t g = 0; g < n; ++g) (in_s1[g] ? s1_idx : s2_idx).push_back(g);
    Shift s2 = subshift(s, s2_idx);
    std::int64_t min_s2 = shift_min(s2);

    // order basis at 2*sigma with the dropped shift on the solved block
    Shift v(n);
    std::int64_t min_d = 0;
    bool first = true;
    for (std::size_t g = 0; g < n; ++g) {
        if (in_s1[g]) {
            v[g] = -delta1[g] + min_s2 - 2 * sigma;
            min_d = first ? v[g] : std::min(min_d, v[g]);
            first = false;
        } else {
            v[g] = s[g];
        }
    }
    Shift u(v);
    u.push_back(min_d);
    PolMat stacked = stack_equations_modulus(f, modulus);
    OrderBasisResult ob = popov_order_basis(stacked, Orders(1, 2 * sigma), u);
    const PolMat& a = ob.basis;

    // expected block shape: solved block zero against the tail, and the
    // bottom row supported on the solved block only
    for (std::size_t g : s1_idx)
        for (std::size_t h : s2_idx) PMF_CHECK(a.at(g, h).is_zero());
    for (std::size_t h : s2_idx) PMF_CHECK(a.at(n, h).is_zero());

    PolMat trailing = a.submatrix(s2_idx, s2_idx);
    PMF_CHECK(is_popov(trailing, s2));
    std::vector<std::int64_t> delta2(s2_idx.size());
    for (std::size_t t = 0; t < s2_idx.size(); ++t) delta2[t] = trailing.at(t, t).deg();

    // residual: new modulus from the bottom row, new equations from the
    // trailing rows, both exactly divisible by X^{2 sigma}
    std::vector<std::size_t> res_rows(s2_idx);
    res_rows.push_back(n);
    std::vector<std::size_t> full_cols(n + 1);
    std::iota(full_cols.begin(), full_cols.end(), 0);
    PolMat res = order_basis_residual(a.submatrix(res_rows, full_cols), stacked,
                                      Orders(1, 2 * sigma));
    solve_stats().exact_shift_downs += res.rows();

    Poly next_modulus = res.at(res.rows() - 1, 0);
    PMF_CHECK(!next_modulus.is_zero());
    PolMat g(field, s2_idx.size(), 1);
    for (std::size_t t = 0; t < s2_idx.size(); ++t) {
        g.at(t, 0) = res.at(t, 0);
        PMF_CHECK(g.at(t, 0).deg() < next_modulus.deg());
    }

    std::vector<std::int64_t> delta3(s2_idx.size(), 0);
    if (next_modulus.deg() >= 1) {
        Shift t2(s2);
        for (std::size_t t = 0; t < t2.size(); ++t) t2[t] += delta2[t];
        SolutionBasisResult tail = solution_basis_one_clamped(next_modulus, g, t2, alpha);
        delta3 = tail.min_degree;
    } else {
        for (std::size_t t = 0; t < s2_idx.size(); ++t) PMF_CHECK(g.at(t, 0).is_zero());
    }

    std::vector<std::int64_t> delta(n, 0);
    for (std::size_t g2 : s1_idx) delta[g2] = delta1[g2];
    for (std::size_t t = 0; t < s2_idx.size(); ++t) delta[s2_idx[t]] = delta2[t] + delta3[t];

    ModularSystem sys{{modulus}, f, s};
    PolMat basis = known_degree_solution_basis(sys, delta);
    return {std::move(basis), std::move(delta)};
}

SolutionBasisResult solution_basis_one_clamped(const Poly& modulus, const PolMat& f,
                                               const Shift& s, std::int64_t alpha) {
    DepthGuard guard(g_solve_depth);
    std::int64_t sigma = modulus.deg();
    Shift sc = clamp_sorted_gaps(s, sigma);
    if (shift_amplitude(sc) <= 2 * alpha) return solution_basis_one_base(modulus, f, sc, alpha);
    return solution_basis_one_split(modulus, f, sc, alpha);
}

} // namespace

SolutionBasisResult solution_basis_one(const Poly& modulus, const PolMat& f, const Shift& s,
                                       std::int64_t alpha) {
    if (f.cols() != 1) throw UsageError("single-modulus solver expects one equation column");
    if (s.size() != f.rows()) throw UsageError("shift length does not match unknown count");
    if (modulus.is_zero() || modulus.deg() < 1)
        throw UsageError("modulus degree must be at least 1");
    if (modulus.modulus() != f.modulus()) throw UsageError("modulus over a different field");
    for (std::size_t i = 0; i < f.rows(); ++i)
        if (f.at(i, 0).deg() >= modulus.deg())
            throw UsageError("equation degrees must be smaller than the modulus degree");
    if (alpha < 2 * modulus.deg()) throw UsageError("alpha must be at least 2 deg(modulus)");
    SolutionBasisResult out = solution_basis_one_clamped(modulus, f, s, alpha);
    PMF_CHECK(is_popov(out.basis, s));
    return out;
}

namespace {

SolutionBasisResult solution_basis_rec(const std::vector<Poly>& moduli, const PolMat& f,
                                       const Shift& s) {
    std::size_t k = moduli.size();
    if (k == 1) return solution_basis_one(moduli[0], f, s, 2 * moduli[0].deg());

    std::size_t k1 = k / 2;
    std::vector<std::size_t> rows(f.rows());
    std::iota(rows.begin(), rows.end(), 0);
    std::vector<std::size_t> cols1(k1), cols2(k - k1);
    std::iota(cols1.begin(), cols1.end(), 0);
    std::iota(cols2.begin(), cols2.end(), k1);

    std::vector<Poly> m1(moduli.begin(), moduli.begin() + static_cast<std::ptrdiff_t>(k1));
    std::vector<Poly> m2(moduli.begin() + static_cast<std::ptrdiff_t>(k1), moduli.end());

    SolutionBasisResult first = solution_basis_rec(m1, f.submatrix(rows, cols1), s);

    PolMat r = residual_product(first.basis, f.submatrix(rows, cols2), m2);
    Shift t(s);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] += first.min_degree[i];
    SolutionBasisResult second = solution_basis_rec(m2, r, t);

    std::vector<std::int64_t> delta(f.rows());
    for (std::size_t i = 0; i < f.rows(); ++i)
        delta[i] = first.min_degree[i] + second.min_degree[i];
    ModularSystem sys{moduli, f, s};
    PolMat basis = known_degree_solution_basis(sys, delta);
    return {std::move(basis), std::move(delta)};
}

} // namespace

SolutionBasisResult solution_basis(const ModularSystem& sys) {
    validate_modular_system(sys);
    std::size_t n = sys.equations.rows();
    PrimeField field = sys.equations.field();

    // constant moduli impose no constraint (their equation columns are
    // forced to zero by the degree invariant)
    std::vector<std::size_t> active;
    for (std::size_t j = 0; j < sys.moduli.size(); ++j)
        if (sys.moduli[j].deg() >= 1) active.push_back(j);
    if (active.empty())
        return {PolMat::identity(field, n), std::vector<std::int64_t>(n, 0)};

    std::vector<Poly> moduli;
    moduli.reserve(active.size());
    for (std::size_t j : active) moduli.push_back(sys.moduli[j]);
    std::vector<std::size_t> rows(n);
    std::iota(rows.begin(), rows.end(), 0);
    PolMat f = sys.equations.submatrix(rows, active);

    SolutionBasisResult out = solution_basis_rec(moduli, f, sys.shift);

    std::int64_t sigma = 0;
    for (const Poly& mj : moduli) sigma += mj.deg();
    std::int64_t dsum = std::accumulate(out.min_degree.begin(), out.min_degree.end(),
                                        std::int64_t(0));
    PMF_CHECK(dsum <= sigma);
    return out;
}

} // namespace pmforms
