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

#include <doctest.h>

#include "errors.hpp"
#include "poly.hpp"
#include "support.hpp"

using namespace pmforms;
using pmftest::Rng;

TEST_CASE("prime field validation") {
    CHECK(PrimeField(2).modulus() == 2);
    CHECK(PrimeField(65521).modulus() == 65521);
    CHECK(PrimeField((1ull << 61) - 1).modulus() == (1ull << 61) - 1); // Mersenne prime
    CHECK_THROWS_AS(PrimeField(1), UsageError);
    CHECK_THROWS_AS(PrimeField(4), UsageError);
    CHECK_THROWS_AS(PrimeField(65520), UsageError);
    CHECK_THROWS_AS(PrimeField(1ull << 62), UsageError);
}

TEST_CASE("field element arithmetic") {
    PrimeField f(65521);
    CHECK(f.add(65520, 1) == 0);
    CHECK(f.sub(0, 1) == 65520);
    CHECK(f.mul(65520, 65520) == 1); // (-1)^2
    for (std::uint64_t a = 1; a < 200; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.from_int(-1) == 65520);
    CHECK(f.pow(3, 65520) == 1); // Fermat
    CHECK_THROWS_AS(f.inv(0), UsageError);
}

TEST_CASE("poly normalization and degree conventions") {
    PrimeField f(7);
    Poly z(f);
    CHECK(z.is_zero());
    CHECK(z.deg() == -1);
    CHECK(z.deg_bar() == 0);
    Poly a(f, {3, 0, 0}); // trailing zeros trimmed
    CHECK(a.deg() == 0);
    Poly b(f, {0, 7}); // 7 = 0 mod 7
    CHECK(b.is_zero());
}

TEST_CASE("ring operations on fixed examples") {
    PrimeField f7(7);
    Poly xp1 = Poly::from_ints(f7, {1, 1});
    Poly minus_one = Poly::from_ints(f7, {-1});
    CHECK(xp1 + minus_one == Poly::from_ints(f7, {0, 1})); // (X+1) + (-1) = X
    CHECK(Poly(f7) + xp1 == xp1);
    CHECK(shift_up(Poly::from_ints(f7, {1, 1}), 2) == Poly::from_ints(f7, {0, 0, 1, 1}));

    PrimeField f5(5);
    Poly prod = Poly::from_ints(f5, {1, 1}) * Poly::from_ints(f5, {-1, 1});
    CHECK(prod == Poly::from_ints(f5, {4, 0, 1})); // X^2 + 4 = X^2 - 1
    CHECK((Poly::from_ints(f5, {1, 2, 3}) * Poly(f5)).is_zero());

    PrimeField f2(2);
    Poly sq = Poly::from_ints(f2, {1, 0, 1}) * Poly::from_ints(f2, {1, 0, 1});
    CHECK(sq == Poly::from_ints(f2, {1, 0, 0, 0, 1})); // (X^2+1)^2 over F_2
}

TEST_CASE("poly mismatched moduli rejected") {
    Poly a = Poly::from_ints(PrimeField(5), {1});
    Poly b = Poly::from_ints(PrimeField(7), {1});
    CHECK_THROWS_AS(a + b, UsageError);
    CHECK_THROWS_AS(a * b, UsageError);
}

TEST_CASE("division on fixed examples") {
    PrimeField f7(7);
    auto [q1, r1] = divrem(Poly::x_power(f7, 3), Poly::x_power(f7, 2));
    CHECK(q1 == Poly::x_power(f7, 1));
    CHECK(r1.is_zero());

    Poly s = Poly::from_ints(f7, {1, 0, 1});
    auto [q2, r2] = divrem(s, s);
    CHECK(q2 == Poly::from_ints(f7, {1}));
    CHECK(r2.is_zero());

    auto [q3, r3] = divrem(Poly::from_ints(f7, {1, 1, 0, 1}), Poly::from_ints(f7, {1, 0, 1}));
    CHECK(q3 == Poly::from_ints(f7, {0, 1})); // X^3+X+1 = X (X^2+1) + 1
    CHECK(r3 == Poly::from_ints(f7, {1}));

    CHECK_THROWS_AS(divrem(s, Poly(f7)), UsageError);
}

TEST_CASE("xgcd fixed examples") {
    PrimeField f5(5);
    CHECK(xgcd(Poly::x_power(f5, 2), Poly::x_power(f5, 1)).g == Poly::x_power(f5, 1));

    // (f, 0) -> (monic f, lc^-1, 0)
    Poly fpoly = Poly::from_ints(f5, {2, 4});
    XgcdResult r = xgcd(fpoly, Poly(f5));
    CHECK(r.g == monic(fpoly));
    CHECK(r.v.is_zero());
    CHECK(r.u * fpoly == r.g);

    PrimeField f3(3);
    XgcdResult e = xgcd(Poly::from_ints(f3, {1, 0, 1}), Poly::from_ints(f3, {1, 1}));
    CHECK(e.g == Poly::from_ints(f3, {1}));
    CHECK(e.u * Poly::from_ints(f3, {1, 0, 1}) + e.v * Poly::from_ints(f3, {1, 1}) == e.g);

    CHECK_THROWS_AS(xgcd(Poly(f3), Poly(f3)), UsageError);
}

TEST_CASE("ring axioms on random triples") {
    for (std::uint64_t p : {2ull, 3ull, 97ull, 65521ull, (1ull << 61) - 1}) {
        PrimeField f(p);
        Rng rng(p * 1000003);
        for (int it = 0; it < 60; ++it) {
            Poly a = pmftest::random_poly(rng, f, 12);
            Poly b = pmftest::random_poly(rng, f, 12);
            Poly c = pmftest::random_poly(rng, f, 12);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK(a - a == Poly(f));
        }
    }
}

TEST_CASE("karatsuba agrees with schoolbook across the threshold") {
    // both coefficient regimes: delayed-reduction (p < 2^31) and wide
    for (std::uint64_t p : {65521ull, (1ull << 61) - 1}) {
        PrimeField f(p);
        Rng rng(42 + p);
        for (int it = 0; it < 12; ++it) {
            Poly a = pmftest::random_poly(rng, f, 20 + 60 * it); // spans the threshold
            Poly b = pmftest::random_poly(rng, f, 7 + 133 * it); // unbalanced sizes too
            Poly ab = a * b;
            // quadratic reference
            Poly ref(f);
            for (std::size_t i = 0; i < a.size(); ++i)
                add_scaled_shifted(ref, b, a.coeff(i), i);
            CHECK(ab == ref);
        }
    }
}

TEST_CASE("divrem round trip on random pairs") {
    PrimeField f(97);
    Rng rng(7);
    for (int it = 0; it < 200; ++it) {
        Poly a = pmftest::random_poly(rng, f, 24);
        Poly b = pmftest::random_nonzero_poly(rng, f, 9);
        auto [q, r] = divrem(a, b);
        CHECK(q * b + r == a);
        CHECK(r.deg() < b.deg());
    }
}

TEST_CASE("xgcd certificate on random pairs") {
    PrimeField f(65521);
    Rng rng(11);
    for (int it = 0; it < 150; ++it) {
        Poly a = pmftest::random_poly(rng, f, 15);
        Poly b = pmftest::random_poly(rng, f, 15);
        if (a.is_zero() && b.is_zero()) continue;
        XgcdResult r = xgcd(a, b);
        CHECK(r.g.is_monic());
        CHECK(r.u * a + r.v * b == r.g);
        CHECK((a % r.g).is_zero());
        CHECK((b % r.g).is_zero());
    }
}

TEST_CASE("shift_down_exact rejects nonzero low part") {
    PrimeField f(5);
    CHECK(shift_down_exact(Poly::from_ints(f, {0, 0, 1, 2}), 2) == Poly::from_ints(f, {1, 2}));
    CHECK_THROWS_AS(shift_down_exact(Poly::from_ints(f, {1, 2}), 1), InternalError);
}
