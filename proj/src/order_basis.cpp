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

#include "order_basis.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace pmforms {

namespace {

using detail::add_mod;
using detail::inv_mod;
using detail::mul_mod;
using detail::neg_mod;

PolMat truncate_columns(const PolMat& f, const Orders& tau) {
    PolMat r = f;
    for (std::size_t j = 0; j < f.cols(); ++j) {
        std::size_t cap = tau[j] <= 0 ? 0 : static_cast<std::size_t>(tau[j]);
        for (std::size_t i = 0; i < f.rows(); ++i) r.at(i, j) = truncate(r.at(i, j), cap);
    }
    return r;
}

// Iterative M-Pade elimination. Processes the order conditions (column j,
// coefficient t) by increasing t, then increasing j. At each condition,
// among the rows with nonzero residual the one minimizing
// (s-row degree, pivot index, row index) cancels the others and is then
// multiplied by X. The basis stays in ordered weak Popov form with the
// pivot of row i at column i throughout, so the maintained row degrees are
// exact. Expects F column-truncated to tau.
//
// The residual basis*F is kept in flat per-column buffers; coefficients
// below the current condition level are already zero and are skipped.
PolMat iterate_owp(const PolMat& f, const Orders& tau, const Shift& s) {
    std::size_t m = f.rows();
    std::size_t k = f.cols();
    std::uint64_t p = f.modulus();
    PrimeField field = f.field();

    PolMat basis = PolMat::identity(field, m);
    std::vector<std::int64_t> rdeg(s);

    std::vector<std::vector<std::uint64_t>> res(m * k);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<std::uint64_t>& buf = res[i * k + j];
            buf.assign(static_cast<std::size_t>(std::max<std::int64_t>(tau[j], 0)), 0);
            const Poly& src = f.at(i, j);
            for (std::size_t d = 0; d < std::min(buf.size(), src.size()); ++d)
                buf[d] = src.coeff(d);
        }

    std::int64_t tmax = *std::max_element(tau.begin(), tau.end());
    std::vector<std::size_t> hot;
    hot.reserve(m);
    for (std::int64_t t = 0; t < tmax; ++t) {
        std::size_t tt = static_cast<std::size_t>(t);
        for (std::size_t j = 0; j < k; ++j) {
            if (tau[j] <= t) continue;
            hot.clear();
            std::size_t piv = m;
            for (std::size_t i = 0; i < m; ++i) {
                if (res[i * k + j][tt] == 0) continue;
                hot.push_back(i);
                if (piv == m || rdeg[i] < rdeg[piv]) piv = i;
            }
            if (hot.empty()) continue;
            std::uint64_t cpiv_inv = inv_mod(res[piv * k + j][tt], p);
            for (std::size_t i : hot) {
                if (i == piv) continue;
                std::uint64_t c = neg_mod(mul_mod(res[i * k + j][tt], cpiv_inv, p), p);
                for (std::size_t c2 = 0; c2 < m; ++c2)
                    add_scaled_shifted(basis.at(i, c2), basis.at(piv, c2), c, 0);
                for (std::size_t c2 = 0; c2 < k; ++c2) {
                    const std::vector<std::uint64_t>& src = res[piv * k + c2];
                    std::vector<std::uint64_t>& dst = res[i * k + c2];
                    for (std::size_t d = tt; d < src.size(); ++d)
                        if (src[d] != 0) dst[d] = add_mod(dst[d], mul_mod(c, src[d], p), p);
                }
            }
            for (std::size_t c2 = 0; c2 < m; ++c2)
                basis.at(piv, c2) = shift_up(basis.at(piv, c2), 1);
            for (std::size_t c2 = 0; c2 < k; ++c2) {
                std::vector<std::uint64_t>& buf = res[piv * k + c2];
                if (buf.size() <= tt) continue; // column order already exhausted
                for (std::size_t d = buf.size() - 1; d > tt; --d) buf[d] = buf[d - 1];
                buf[tt] = 0;
            }
            rdeg[piv] += 1;
        }
    }
    PMF_CHECK(rdeg == shifted_row_degree(basis, s));
    return basis;
}

// Residual for the divide-and-conquer split: X^{-done_j} (P*F)_j truncated
// at remaining_j.
PolMat dc_residual(const PolMat& basis, const PolMat& f, const Orders& done,
                   const Orders& remaining) {
    PolMat prod = basis * f;
    PolMat g(f.field(), prod.rows(), prod.cols());
    for (std::size_t j = 0; j < prod.cols(); ++j) {
        std::size_t lo = done[j] <= 0 ? 0 : static_cast<std::size_t>(done[j]);
        std::size_t cap = remaining[j] <= 0 ? 0 : static_cast<std::size_t>(remaining[j]);
        for (std::size_t i = 0; i < prod.rows(); ++i)
            g.at(i, j) = truncate(shift_down_exact(prod.at(i, j), lo), cap);
    }
    return g;
}

PolMat dc_owp(const PolMat& f, const Orders& tau, const Shift& s, std::int64_t threshold) {
    std::int64_t total = std::accumulate(tau.begin(), tau.end(), std::int64_t(0));
    if (total <= threshold) return iterate_owp(f, tau, s);

    Orders tau1(tau.size()), tau2(tau.size());
    for (std::size_t j = 0; j < tau.size(); ++j) {
        tau1[j] = (tau[j] + 1) / 2;
        tau2[j] = tau[j] - tau1[j];
    }
    PolMat p1 = dc_owp(truncate_columns(f, tau1), tau1, s, threshold);

    // shifted row degrees of p1 are read off the diagonal pivots
    Shift t(s);
    for (std::size_t i = 0; i < p1.rows(); ++i) t[i] += p1.at(i, i).deg();

    PolMat g = dc_residual(p1, f, tau1, tau2);
    PolMat p2 = dc_owp(g, tau2, t, threshold);
    return p2 * p1;
}

} // namespace

// Normalization strategy: a first pass reveals the pivot degrees delta of
// the Popov basis; a second pass with shift -delta returns a minimal basis
// whose -delta-row degrees are all zero, so its -delta-leading matrix C is
// lower triangular and invertible and C^{-1} times that basis is the
// canonical form. This stays within two order-basis passes and one constant
// triangular solve whatever the pivot imbalance.
OrderBasisResult popov_order_basis(const PolMat& f, const Orders& orders, const Shift& s,
                                   OrderBasisPath path, std::int64_t dc_threshold) {
    if (orders.size() != f.cols()) throw UsageError("order count does not match column count");
    if (s.size() != f.rows()) throw UsageError("shift length does not match row count");
    for (std::int64_t t : orders)
        if (t < 1) throw UsageError("orders must be at least 1");
    if (dc_threshold < 1) throw UsageError("divide-and-conquer threshold must be positive");

    PolMat ft = truncate_columns(f, orders);
    std::int64_t total = std::accumulate(orders.begin(), orders.end(), std::int64_t(0));
    bool use_dc = path == OrderBasisPath::DivideConquer ||
                  (path == OrderBasisPath::Auto && total > dc_threshold);
    std::size_t m = f.rows();
    auto run = [&](const Shift& shift) {
        PolMat b = use_dc ? dc_owp(ft, orders, shift, dc_threshold)
                          : iterate_owp(ft, orders, shift);
        PivotProfile prof = pivot_profile(b, shift);
        for (std::size_t i = 0; i < m; ++i) PMF_CHECK(prof.index[i] == i);
        return b;
    };

    PolMat basis = run(s);
    OrderBasisResult out{std::move(basis), std::vector<std::int64_t>(m)};
    for (std::size_t i = 0; i < m; ++i) out.pivot_degree[i] = out.basis.at(i, i).deg();

    if (!is_popov(out.basis, s)) {
        Shift negdelta(m);
        for (std::size_t i = 0; i < m; ++i) negdelta[i] = -out.pivot_degree[i];
        PolMat second = run(negdelta);
        for (std::size_t i = 0; i < m; ++i)
            PMF_CHECK(second.at(i, i).deg() == out.pivot_degree[i]);
        FieldMatrix lm = shifted_leading_matrix(second, negdelta);
        out.basis = mul_field_polmat(field_inverse(lm, f.field()), second);
        PMF_CHECK(is_popov(out.basis, s));
    }
    return out;
}

PolMat order_basis_residual(const PolMat& p, const PolMat& f, const Orders& done) {
    if (done.size() != f.cols()) throw UsageError("order count does not match column count");
    for (std::int64_t t : done)
        if (t < 0) throw UsageError("completed orders must be nonnegative");
    PolMat prod = p * f;
    PolMat g(f.field(), prod.rows(), prod.cols());
    for (std::size_t j = 0; j < prod.cols(); ++j)
        for (std::size_t i = 0; i < prod.rows(); ++i)
            g.at(i, j) = shift_down_exact(prod.at(i, j), static_cast<std::size_t>(done[j]));
    return g;
}

} // namespace pmforms
