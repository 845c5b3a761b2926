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

namespace pmforms {

namespace detail {

// Raw Z/pZ arithmetic on canonical representatives in [0, p).
// No validation: p must already be a checked prime.

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b; // p < 2^62, no overflow
    return s >= p ? s - p : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

inline std::uint64_t neg_mod(std::uint64_t a, std::uint64_t p) { return a == 0 ? 0 : p - a; }

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p); // a != 0

bool is_prime_u64(std::uint64_t n);

} // namespace detail

// The base field Z/pZ for a word-sized prime p, 2 <= p < 2^62.
// Primality is checked once at construction (deterministic Miller-Rabin);
// every element operation assumes canonical representatives in [0, p).
class PrimeField {
  public:
    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return detail::add_mod(a, b, p_); }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return detail::sub_mod(a, b, p_); }
    std::uint64_t neg(std::uint64_t a) const { return detail::neg_mod(a, p_); }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return detail::mul_mod(a, b, p_); }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const { return detail::pow_mod(a, e, p_); }
    // Multiplicative inverse; throws UsageError on 0.
    std::uint64_t inv(std::uint64_t a) const;

    // Canonical representative of an arbitrary signed integer.
    std::uint64_t from_int(std::int64_t v) const;

    bool operator==(const PrimeField& other) const { return p_ == other.p_; }
    bool operator!=(const PrimeField& other) const { return p_ != other.p_; }

  private:
    std::uint64_t p_;
};

} // namespace pmforms
