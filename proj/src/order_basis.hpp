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

namespace pmforms {

/// Per-column truncation orders tau_1, ..., tau_k; all >= 1 at the public
/// entry point.
using Orders = std::vector<std::int64_t>;

enum class OrderBasisPath {
    Auto,          // divide and conquer above the total-order threshold
    Iterative,     // coefficient-by-coefficient elimination
    DivideConquer, // halve the order, recurse, multiply bases
};

struct OrderBasisResult {
    PolMat basis;                           // m x m in s-Popov form
    std::vector<std::int64_t> pivot_degree; // its diagonal degrees (s-minimal degree)
};

/// The unique basis in s-Popov form of
///   { p in K[X]^{1 x m} : p * F = 0 mod (X^{tau_1}, ..., X^{tau_k}) }
/// for F of size m x k, together with its pivot degrees. The iterative path
/// processes order conditions one coefficient at a time, keeping the basis
/// in ordered weak Popov form with pivots on the diagonal; the divide and
/// conquer path halves the orders and multiplies the recursive bases, which
/// preserves that form, so both paths normalize to the same matrix.
OrderBasisResult popov_order_basis(const PolMat& f, const Orders& orders, const Shift& s,
                                   OrderBasisPath path = OrderBasisPath::Auto,
                                   std::int64_t dc_threshold = 64);

/// Column j of the result is X^{-done_j} * (P*F)_{.,j}; the discarded
/// low-order part must vanish exactly (InternalError otherwise).
PolMat order_basis_residual(const PolMat& p, const PolMat& f, const Orders& done);

} // namespace pmforms
