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

#include "poly.hpp"

#include <algorithm>

#include "errors.hpp"

namespace pmforms {

using detail::add_mod;
using detail::mul_mod;
using detail::neg_mod;
using detail::sub_mod;

namespace {

// Products with both operands above this size go through Karatsuba.
constexpr std::size_t kKaratsubaThreshold = 32;

using U64Vec = std::vector<std::uint64_t>;

void school_mul(const std::uint64_t* a, std::size_t na, const std::uint64_t* b, std::size_t nb,
                std::uint64_t* out, std::uint64_t p) {
    // out has na + nb - 1 slots; products are accumulated into it
    if (p < (std::uint64_t(1) << 31)) {
        // products fit in 62 bits: accumulate into 128 bits and reduce once
        // per output coefficient
        for (std::size_t k = 0; k < na + nb - 1; ++k) {
            unsigned __int128 acc = out[k];
            std::size_t i0 = k >= nb - 1 ? k - (nb - 1) : 0;
            std::size_t i1 = std::min(na - 1, k);
            for (std::size_t i = i0; i <= i1; ++i)
                acc += static_cast<unsigned __int128>(a[i]) * b[k - i];
            out[k] = static_cast<std::uint64_t>(acc % p);
        }
        return;
    }
    for (std::size_t i = 0; i < na; ++i) {
        std::uint64_t ai = a[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < nb; ++j) {
            if (b[j] == 0) continue;
            out[i + j] = add_mod(out[i + j], mul_mod(ai, b[j], p), p);
        }
    }
}

// out += karatsuba(a, b); out has na + nb - 1 usable slots.
void kara_mul(const std::uint64_t* a, std::size_t na, const std::uint64_t* b, std::size_t nb,
              std::uint64_t* out, std::uint64_t p) {
    if (na == 0 || nb == 0) return;
    if (na < nb) {
        std::swap(a, b);
        std::swap(na, nb);
    }
    if (nb <= kKaratsubaThreshold) {
        school_mul(a, na, b, nb, out, p);
        return;
    }
    if (na >= 2 * nb) {
        // unbalanced: slice the long operand into nb-sized chunks
        for (std::size_t off = 0; off < na; off += nb) {
            std::size_t len = std::min(nb, na - off);
            kara_mul(a + off, len, b, nb, out + off, p);
        }
        return;
    }
    std::size_t h = (na + 1) / 2;
    const std::uint64_t* a0 = a;
    std::size_t na0 = h;
    const std::uint64_t* a1 = a + h;
    std::size_t na1 = na - h;
    const std::uint64_t* b0 = b;
    std::size_t nb0 = std::min(h, nb);
    const std::uint64_t* b1 = b + nb0;
    std::size_t nb1 = nb - nb0;

    // z0 = a0*b0, z2 = a1*b1, z1 = (a0+a1)(b0+b1) - z0 - z2
    U64Vec z0(na0 + nb0 - 1, 0);
    kara_mul(a0, na0, b0, nb0, z0.data(), p);
    U64Vec z2;
    if (na1 > 0 && nb1 > 0) {
        z2.assign(na1 + nb1 - 1, 0);
        kara_mul(a1, na1, b1, nb1, z2.data(), p);
    }
    U64Vec sa(std::max(na0, na1), 0);
    for (std::size_t i = 0; i < na0; ++i) sa[i] = a0[i];
    for (std::size_t i = 0; i < na1; ++i) sa[i] = add_mod(sa[i], a1[i], p);
    U64Vec sb(std::max(nb0, nb1), 0);
    for (std::size_t i = 0; i < nb0; ++i) sb[i] = b0[i];
    for (std::size_t i = 0; i < nb1; ++i) sb[i] = add_mod(sb[i], b1[i], p);
    U64Vec z1(sa.size() + sb.size() - 1, 0);
    kara_mul(sa.data(), sa.size(), sb.data(), sb.size(), z1.data(), p);
    for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = sub_mod(z1[i], z0[i], p);
    for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = sub_mod(z1[i], z2[i], p);

    // z1 can be one slot longer than the output when na is odd and the
    // split swallows b whole; the surplus top coefficient cancels exactly
    std::size_t out_len = na + nb - 1;
    std::size_t z1_len = std::min(z1.size(), out_len - h);
    for (std::size_t i = z1_len; i < z1.size(); ++i) PMF_CHECK(z1[i] == 0);

    for (std::size_t i = 0; i < z0.size(); ++i) out[i] = add_mod(out[i], z0[i], p);
    for (std::size_t i = 0; i < z1_len; ++i) out[h + i] = add_mod(out[h + i], z1[i], p);
    for (std::size_t i = 0; i < z2.size(); ++i) out[2 * h + i] = add_mod(out[2 * h + i], z2[i], p);
}

} // namespace

Poly::Poly(const PrimeField& field, std::vector<std::uint64_t> coeffs)
    : p_(field.modulus()), c_(std::move(coeffs)) {
    for (auto& c : c_) c %= p_;
    normalize();
}

Poly Poly::constant(const PrimeField& field, std::uint64_t c) {
    Poly r(field);
    c %= field.modulus();
    if (c != 0) r.c_.push_back(c);
    return r;
}

Poly Poly::x_power(const PrimeField& field, std::size_t k) {
    Poly r(field);
    r.c_.assign(k + 1, 0);
    r.c_[k] = 1;
    return r;
}

Poly Poly::from_ints(const PrimeField& field, std::initializer_list<std::int64_t> coeffs) {
    return from_ints(field, std::vector<std::int64_t>(coeffs));
}

Poly Poly::from_ints(const PrimeField& field, const std::vector<std::int64_t>& coeffs) {
    Poly r(field);
    r.c_.reserve(coeffs.size());
    for (std::int64_t v : coeffs) r.c_.push_back(field.from_int(v));
    r.normalize();
    return r;
}

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::require_same_field(const Poly& a, const Poly& b) {
    if (a.p_ != b.p_) throw UsageError("polynomials over different fields");
}

Poly& Poly::negate() {
    for (auto& c : c_) c = neg_mod(c, p_);
    return *this;
}

Poly& Poly::scale(std::uint64_t c) {
    c %= p_;
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x = mul_mod(x, c, p_);
    return *this;
}

Poly& Poly::operator+=(const Poly& rhs) {
    require_same_field(*this, rhs);
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), 0);
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] = add_mod(c_[i], rhs.c_[i], p_);
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    require_same_field(*this, rhs);
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), 0);
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] = sub_mod(c_[i], rhs.c_[i], p_);
    normalize();
    return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    r += b;
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    r -= b;
    return r;
}

Poly operator-(const Poly& a) {
    Poly r = a;
    r.negate();
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly::require_same_field(a, b);
    Poly r(PrimeField(a.modulus()));
    if (a.is_zero() || b.is_zero()) return r;
    std::vector<std::uint64_t> out(a.size() + b.size() - 1, 0);
    kara_mul(a.coeffs().data(), a.size(), b.coeffs().data(), b.size(), out.data(), a.modulus());
    return Poly(PrimeField(a.modulus()), std::move(out));
}

Poly scalar_mul(std::uint64_t c, const Poly& a) {
    Poly r = a;
    r.scale(c);
    return r;
}

Poly shift_up(const Poly& a, std::size_t k) {
    if (a.is_zero() || k == 0) return a;
    Poly r(PrimeField(a.p_));
    r.c_.assign(a.c_.size() + k, 0);
    std::copy(a.c_.begin(), a.c_.end(), r.c_.begin() + static_cast<std::ptrdiff_t>(k));
    return r;
}

Poly shift_down_exact(const Poly& a, std::size_t k) {
    if (k == 0) return a;
    for (std::size_t i = 0; i < std::min(k, a.c_.size()); ++i)
        PMF_CHECK(a.c_[i] == 0); // low-order part must vanish exactly
    Poly r(PrimeField(a.p_));
    if (a.c_.size() > k)
        r.c_.assign(a.c_.begin() + static_cast<std::ptrdiff_t>(k), a.c_.end());
    return r;
}

Poly truncate(const Poly& a, std::size_t order) {
    if (a.c_.size() <= order) return a;
    Poly r(PrimeField(a.p_));
    r.c_.assign(a.c_.begin(), a.c_.begin() + static_cast<std::ptrdiff_t>(order));
    r.normalize();
    return r;
}

void add_scaled_shifted(Poly& acc, const Poly& a, std::uint64_t c, std::size_t k) {
    if (a.is_zero() || c == 0) return;
    if (acc.p_ != a.p_) throw UsageError("polynomials over different fields");
    std::uint64_t p = acc.p_;
    if (acc.c_.size() < a.c_.size() + k) acc.c_.resize(a.c_.size() + k, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        acc.c_[i + k] = add_mod(acc.c_[i + k], mul_mod(c, a.c_[i], p), p);
    acc.normalize();
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    Poly::require_same_field(a, b);
    if (b.is_zero()) throw UsageError("polynomial division by zero");
    PrimeField f(a.modulus());
    if (a.is_zero() || a.deg() < b.deg()) return {Poly(f), a};
    std::uint64_t p = a.modulus();
    std::uint64_t lb_inv = detail::inv_mod(b.lc(), p);
    std::vector<std::uint64_t> rem = a.c_;
    std::size_t nb = b.c_.size();
    std::vector<std::uint64_t> q(rem.size() - nb + 1, 0);
    for (std::size_t i = rem.size(); i-- >= nb;) {
        std::uint64_t c = mul_mod(rem[i], lb_inv, p);
        if (c != 0) {
            q[i - nb + 1] = c;
            for (std::size_t j = 0; j < nb; ++j)
                rem[i - nb + 1 + j] = sub_mod(rem[i - nb + 1 + j], mul_mod(c, b.c_[j], p), p);
        }
        if (i == nb - 1) break;
    }
    rem.resize(nb - 1);
    return {Poly(f, std::move(q)), Poly(f, std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }

Poly monic(const Poly& a) {
    if (a.is_zero()) throw UsageError("monic normalization of zero polynomial");
    if (a.lc() == 1) return a;
    return scalar_mul(detail::inv_mod(a.lc(), a.modulus()), a);
}

Poly gcd(const Poly& a, const Poly& b) { return xgcd(a, b).g; }

XgcdResult xgcd(const Poly& a, const Poly& b) {
    if (a.modulus() != b.modulus()) throw UsageError("polynomials over different fields");
    if (a.is_zero() && b.is_zero()) throw UsageError("gcd(0, 0) is undefined");
    PrimeField f(a.modulus());
    Poly r0 = a, r1 = b;
    Poly u0 = Poly::constant(f, 1), u1 = Poly(f);
    Poly v0 = Poly(f), v1 = Poly::constant(f, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly nu = u0 - q * u1;
        u0 = std::move(u1);
        u1 = std::move(nu);
        Poly nv = v0 - q * v1;
        v0 = std::move(v1);
        v1 = std::move(nv);
    }
    std::uint64_t l = r0.lc();
    if (l != 1) {
        std::uint64_t li = detail::inv_mod(l, f.modulus());
        r0.scale(li);
        u0.scale(li);
        v0.scale(li);
    }
    return {std::move(r0), std::move(u0), std::move(v0)};
}

} // namespace pmforms
