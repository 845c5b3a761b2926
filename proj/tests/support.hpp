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
#include <vector>

#include "oracle.hpp"
#include "polmat.hpp"

namespace pmftest {

using namespace pmforms;

// splitmix64: deterministic, seed-stable across platforms
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    std::int64_t range(std::int64_t lo, std::int64_t hi) { // inclusive
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

  private:
    std::uint64_t state_;
};

inline Poly random_poly(Rng& rng, const PrimeField& f, std::int64_t max_deg) {
    if (max_deg < 0) return Poly(f);
    std::vector<std::uint64_t> c(static_cast<std::size_t>(rng.range(0, max_deg)) + 1);
    for (auto& x : c) x = rng.below(f.modulus());
    return Poly(f, std::move(c));
}

inline Poly random_nonzero_poly(Rng& rng, const PrimeField& f, std::int64_t max_deg) {
    while (true) {
        Poly p = random_poly(rng, f, max_deg);
        if (!p.is_zero()) return p;
    }
}

inline Poly random_monic_poly(Rng& rng, const PrimeField& f, std::int64_t deg) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = rng.below(f.modulus());
    c.back() = 1;
    return Poly(f, std::move(c));
}

inline PolMat random_polmat(Rng& rng, const PrimeField& f, std::size_t rows, std::size_t cols,
                            std::int64_t max_deg) {
    PolMat m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_poly(rng, f, max_deg);
    return m;
}

inline PolMat random_nonsingular(Rng& rng, const PrimeField& f, std::size_t n,
                                 std::int64_t max_deg) {
    while (true) {
        PolMat m = random_polmat(rng, f, n, n, max_deg);
        if (!oracle::det_fraction_free(m).is_zero()) return m;
    }
}

inline Shift random_shift(Rng& rng, std::size_t n, std::int64_t amplitude) {
    Shift s(n);
    for (auto& v : s) v = rng.range(-amplitude / 2, amplitude - amplitude / 2);
    return s;
}

// random unimodular matrix as a product of elementary operations
inline PolMat random_unimodular(Rng& rng, const PrimeField& f, std::size_t n, std::size_t ops,
                                std::int64_t op_deg) {
    PolMat u = PolMat::identity(f, n);
    for (std::size_t t = 0; t < ops; ++t) {
        switch (rng.below(3)) {
            case 0: {
                std::size_t i = rng.below(n), j = rng.below(n);
                u.swap_rows(i, j);
                break;
            }
            case 1: {
                std::size_t i = rng.below(n);
                std::uint64_t c = 1 + rng.below(f.modulus() - 1);
                for (std::size_t j = 0; j < n; ++j) u.at(i, j).scale(c);
                break;
            }
            default: {
                std::size_t i = rng.below(n), j = rng.below(n);
                if (i == j) break;
                Poly q = random_poly(rng, f, op_deg);
                for (std::size_t c = 0; c < n; ++c)
                    if (!u.at(j, c).is_zero()) u.at(i, c) += q * u.at(j, c);
                break;
            }
        }
    }
    return u;
}

} // namespace pmftest
