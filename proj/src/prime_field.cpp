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

#include "prime_field.hpp"

#include "errors.hpp"

namespace pmforms {
namespace detail {

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on (a, p); p prime and a in (0, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

namespace {

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
    std::uint64_t x = pow_mod(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                            31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic witness set for the 64-bit range
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                            31ull, 37ull}) {
        if (!miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

} // namespace detail

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p < 2 || p >= (std::uint64_t(1) << 62))
        throw UsageError("field modulus must satisfy 2 <= p < 2^62");
    // memoize the last validated modulus: fields are constructed freely on
    // hot paths and almost always repeat the same p
    thread_local std::uint64_t last_valid = 0;
    if (p == last_valid) return;
    if (!detail::is_prime_u64(p))
        throw UsageError("field modulus " + std::to_string(p) + " is not prime");
    last_valid = p;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    if (a == 0) throw UsageError("inverse of zero in Z/pZ");
    return detail::inv_mod(a, p_);
}

std::uint64_t PrimeField::from_int(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    if (m < 0) m += static_cast<std::int64_t>(p_);
    return static_cast<std::uint64_t>(m);
}

} // namespace pmforms
