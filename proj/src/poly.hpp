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
#include <initializer_list>
#include <utility>
#include <vector>

#include "prime_field.hpp"

namespace pmforms {

/// Dense univariate polynomial over Z/pZ, coefficients stored low degree
/// first. The representation is normalized: either the coefficient vector is
/// empty (the zero polynomial) or its last entry is nonzero.
///
/// deg() reports -1 for the zero polynomial; deg_bar() is the variant that
/// reports 0 for zero, which is the convention used by the generic
/// determinant bound.
class Poly {
  public:
    explicit Poly(const PrimeField& field) : p_(field.modulus()) {}
    Poly(const PrimeField& field, std::vector<std::uint64_t> coeffs);

    static Poly zero(const PrimeField& field) { return Poly(field); }
    static Poly constant(const PrimeField& field, std::uint64_t c);
    static Poly x_power(const PrimeField& field, std::size_t k); // X^k
    /// Convenience constructor from signed coefficients (low degree first).
    static Poly from_ints(const PrimeField& field, std::initializer_list<std::int64_t> coeffs);
    static Poly from_ints(const PrimeField& field, const std::vector<std::int64_t>& coeffs);

    std::uint64_t modulus() const { return p_; }
    PrimeField field() const { return PrimeField(p_); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    std::int64_t deg() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    std::int64_t deg_bar() const { return c_.empty() ? 0 : deg(); }
    std::size_t size() const { return c_.size(); }

    /// Coefficient of X^i; 0 beyond the stored length.
    std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    /// Leading coefficient; 0 for the zero polynomial.
    std::uint64_t lc() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }

    bool is_monic() const { return lc() == 1; }

    Poly& negate();
    Poly& scale(std::uint64_t c);

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);

  private:
    void normalize();
    static void require_same_field(const Poly& a, const Poly& b);

    std::uint64_t p_;
    std::vector<std::uint64_t> c_;

    friend Poly scalar_mul(std::uint64_t c, const Poly& a);
    friend Poly shift_up(const Poly& a, std::size_t k);
    friend Poly shift_down_exact(const Poly& a, std::size_t k);
    friend Poly truncate(const Poly& a, std::size_t order);
    friend std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
    friend void add_scaled_shifted(Poly& acc, const Poly& a, std::uint64_t c, std::size_t k);
};

/// c * a for a field scalar c.
Poly scalar_mul(std::uint64_t c, const Poly& a);

/// a * X^k.
Poly shift_up(const Poly& a, std::size_t k);

/// a / X^k, requiring the k low-order coefficients to be exactly zero;
/// throws InternalError otherwise.
Poly shift_down_exact(const Poly& a, std::size_t k);

/// a mod X^order.
Poly truncate(const Poly& a, std::size_t order);

/// acc += c * X^k * a, in place.
void add_scaled_shifted(Poly& acc, const Poly& a, std::uint64_t c, std::size_t k);

/// Euclidean division: returns (q, r) with a = q*b + r and deg r < deg b.
/// Throws UsageError when b = 0.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);

Poly operator%(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);

/// Monic scalar normalization of a nonzero polynomial.
Poly monic(const Poly& a);

/// Monic gcd. gcd(0, 0) is an error.
Poly gcd(const Poly& a, const Poly& b);

struct XgcdResult {
    Poly g; // monic gcd
    Poly u;
    Poly v; // g = u*a + v*b
};

XgcdResult xgcd(const Poly& a, const Poly& b);

} // namespace pmforms
