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

// Acceptance suite: one self-contained check per criterion, one PASS/FAIL
// line each, nonzero exit when anything fails.

#include <chrono>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include "modsys.hpp"
#include "oracle.hpp"
#include "order_basis.hpp"
#include "popov_form.hpp"
#include "support.hpp"

using namespace pmforms;
using pmftest::Rng;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string describe(std::size_t n, std::uint64_t p) {
    return "n=" + std::to_string(n) + " p=" + std::to_string(p);
}

// ---- helpers for criterion 2 moduli families ------------------------------

Poly frobenius_power(const Poly& x_to_p, const Poly& mod, const Poly& g) {
    // g(x_to_p) mod mod, Horner on the coefficients of g
    PrimeField f(mod.modulus());
    Poly acc(f);
    for (std::size_t i = g.size(); i-- > 0;) {
        acc = (acc * x_to_p) % mod;
        acc += Poly::constant(f, g.coeff(i));
        if (i == 0) break;
    }
    return acc;
}

bool is_irreducible(const Poly& g) {
    // Rabin: g irreducible of degree d iff x^{p^d} = x mod g and
    // gcd(x^{p^{d/q}} - x, g) = 1 for every prime q | d
    PrimeField f(g.modulus());
    std::int64_t d = g.deg();
    if (d < 1) return false;
    if (d == 1) return true;
    Poly x = Poly::x_power(f, 1);
    Poly xp = x;
    { // x^p mod g
        Poly base = x;
        std::uint64_t e = f.modulus();
        Poly acc = Poly::constant(f, 1);
        while (e > 0) {
            if (e & 1) acc = (acc * base) % g;
            base = (base * base) % g;
            e >>= 1;
        }
        xp = acc;
    }
    std::vector<Poly> powers{x}; // powers[i] = x^{p^i} mod g
    for (std::int64_t i = 1; i <= d; ++i) powers.push_back(frobenius_power(xp, g, powers.back()));
    if (powers[static_cast<std::size_t>(d)] != x % g) return false;
    for (std::int64_t q = 2; q <= d; ++q) {
        if (d % q != 0) continue;
        bool prime = true;
        for (std::int64_t r = 2; r * r <= q; ++r) prime &= (q % r != 0);
        if (!prime) continue;
        Poly diff = powers[static_cast<std::size_t>(d / q)] - x;
        if (diff.is_zero() || !gcd(diff, g).is_one()) return false;
    }
    return true;
}

Poly random_irreducible(Rng& rng, const PrimeField& f, std::int64_t deg) {
    while (true) {
        Poly g = pmftest::random_monic_poly(rng, f, deg);
        if (is_irreducible(g)) return g;
    }
}

Poly random_modulus(Rng& rng, const PrimeField& f, int family) {
    switch (family) {
        case 0: // X^e
            return Poly::x_power(f, 1 + rng.below(5));
        case 1: // irreducible of degree <= 6
            return random_irreducible(rng, f, 1 + rng.range(0, 5));
        case 2: { // (X - a)^e
            Poly lin = Poly::from_ints(f, {0, 1});
            lin -= Poly::constant(f, rng.below(f.modulus()));
            Poly out = Poly::constant(f, 1);
            std::size_t e = 1 + rng.below(4);
            for (std::size_t i = 0; i < e; ++i) out = out * lin;
            return out;
        }
        case 3: { // product of distinct linear factors
            std::size_t count = 1 + rng.below(std::min<std::uint64_t>(4, f.modulus()));
            std::vector<std::uint64_t> roots;
            Poly out = Poly::constant(f, 1);
            while (roots.size() < count) {
                std::uint64_t a = rng.below(f.modulus());
                bool seen = false;
                for (std::uint64_t r : roots) seen |= (r == a);
                if (seen) continue;
                roots.push_back(a);
                Poly lin = Poly::from_ints(f, {0, 1});
                lin -= Poly::constant(f, a);
                out = out * lin;
            }
            return out;
        }
        default: { // mixed: product of two draws from the families above
            Poly a = random_modulus(rng, f, static_cast<int>(rng.below(4)));
            Poly b = random_modulus(rng, f, static_cast<int>(rng.below(4)));
            Poly out = a * b;
            return out.deg() <= 8 ? out : a;
        }
    }
}

// ---- criteria --------------------------------------------------------------

bool criterion1(std::string& detail) {
    auto start = std::chrono::steady_clock::now();
    const std::uint64_t primes[] = {2, 3, 97, 65521};
    Rng rng(20260101);
    for (int it = 0; it < 200; ++it) {
        PrimeField f(primes[it % 4]);
        std::size_t m = 1 + static_cast<std::size_t>(it / 4) % 5;
        PolMat a = pmftest::random_nonsingular(rng, f, m, 4);
        Shift s(m, 0);
        switch (it % 3) {
            case 0:
                break; // uniform
            case 1:
                s = pmftest::random_shift(rng, m, 40);
                break;
            default:
                s = hermite_shift(a);
                break;
        }
        PolMat fast = popov_form(a, s);
        PolMat slow = oracle::naive_popov_form(a, s);
        if (fast != slow) {
            detail = "mismatch at instance " + std::to_string(it) + ", " +
                     describe(m, f.modulus());
            return false;
        }
    }
    double t = seconds_since(start);
    detail = "200 instances in " + std::to_string(t) + " s";
    return t < 300.0;
}

bool criterion2(std::string& detail) {
    const std::uint64_t primes[] = {2, 97, 65521};
    Rng rng(20260202);
    for (int it = 0; it < 200; ++it) {
        PrimeField f(primes[it % 3]);
        std::size_t n = 1 + static_cast<std::size_t>(rng.below(5));
        std::size_t k = 1 + static_cast<std::size_t>(rng.below(4));
        std::vector<Poly> moduli;
        std::int64_t sigma = 0;
        for (std::size_t j = 0; j < k; ++j) {
            moduli.push_back(random_modulus(rng, f, static_cast<int>(rng.below(5))));
            sigma += moduli.back().deg();
        }
        PolMat fm(f, n, k);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < k; ++j)
                fm.at(i, j) = pmftest::random_poly(rng, f, moduli[j].deg() - 1);
        Shift s = pmftest::random_shift(rng, n, 20);
        ModularSystem sys{moduli, fm, s};

        SolutionBasisResult fast = solution_basis(sys);
        PolMat slow = oracle::naive_solution_basis(moduli, fm, s);
        if (fast.basis != slow) {
            detail = "basis mismatch at instance " + std::to_string(it);
            return false;
        }
        std::int64_t dsum = std::accumulate(fast.min_degree.begin(), fast.min_degree.end(),
                                            std::int64_t(0));
        if (dsum > sigma) {
            detail = "pivot degree sum " + std::to_string(dsum) + " exceeds sigma " +
                     std::to_string(sigma);
            return false;
        }
    }
    detail = "200 systems";
    return true;
}

bool criterion3(std::string& detail) {
    Rng rng(20260303);
    for (int it = 0; it < 100; ++it) {
        PrimeField f(it % 2 ? 97 : 65521);
        std::size_t n = 1 + rng.below(5);
        std::int64_t sigma = 1 + rng.range(0, 5);
        Poly mod = pmftest::random_monic_poly(rng, f, sigma);
        PolMat fm(f, n, 1);
        for (std::size_t i = 0; i < n; ++i) fm.at(i, 0) = pmftest::random_poly(rng, f, sigma - 1);
        Shift s = pmftest::random_shift(rng, n, 2 * sigma); // amplitude at most 2 sigma
        std::int64_t amp = shift_amplitude(s);

        PolMat stacked(f, n + 1, 1);
        for (std::size_t i = 0; i < n; ++i) stacked.at(i, 0) = fm.at(i, 0);
        stacked.at(n, 0) = mod;
        Shift u(s);
        u.push_back(shift_min(s));
        OrderBasisResult ob = popov_order_basis(stacked, {amp + 2 * sigma}, u);
        PolMat principal = ob.basis.principal_submatrix(n, n);

        SolutionBasisResult direct = solution_basis_one(mod, fm, s, 2 * sigma);
        if (principal != direct.basis) {
            detail = "principal block mismatch at instance " + std::to_string(it);
            return false;
        }
    }
    detail = "100 instances";
    return true;
}

bool criterion4(std::string& detail) {
    Rng rng(20260404);
    std::uint64_t splits_total = 0;
    for (int it = 0; it < 60; ++it) {
        PrimeField f(97);
        std::size_t n = 6 + rng.below(5);
        std::int64_t sigma = 1 + rng.range(0, 2);
        Poly mod = pmftest::random_monic_poly(rng, f, sigma);
        PolMat fm(f, n, 1);
        for (std::size_t i = 0; i < n; ++i) fm.at(i, 0) = pmftest::random_poly(rng, f, sigma - 1);
        // staircase with gaps at most sigma and amplitude above 4 sigma,
        // which forces the amplitude-splitting branch
        Shift s(n);
        std::int64_t acc = rng.range(-3, 3);
        for (std::size_t i = 0; i < n; ++i) {
            s[i] = acc;
            acc += (i + 1 < n && shift_amplitude(Shift(s.begin(), s.begin() + i + 1)) <= 4 * sigma)
                       ? sigma
                       : rng.range(0, sigma);
        }
        if (shift_amplitude(s) <= 4 * sigma) continue;

        solve_stats().reset();
        SolutionBasisResult fast = solution_basis_one(mod, fm, s, 2 * sigma);
        if (solve_stats().recursive_steps == 0) {
            detail = "splitting branch not taken at instance " + std::to_string(it);
            return false;
        }
        if (solve_stats().splitting_indices != solve_stats().recursive_steps) {
            detail = "missing splitting index at instance " + std::to_string(it);
            return false;
        }
        if (solve_stats().exact_shift_downs == 0) {
            detail = "no exact residual divisions recorded";
            return false;
        }
        splits_total += solve_stats().splitting_indices;
        PolMat slow = oracle::naive_solution_basis({mod}, fm, s);
        if (fast.basis != slow) {
            detail = "oracle mismatch at instance " + std::to_string(it);
            return false;
        }
    }
    if (splits_total == 0) {
        detail = "no recursive instances generated";
        return false;
    }
    detail = std::to_string(splits_total) + " splitting branches exercised";
    return true;
}

bool criterion5(std::string& detail) {
    PrimeField f(7);
    PolMat a(f, 2, 2);
    a.at(0, 0) = Poly::from_ints(f, {0, 1});
    a.at(0, 1) = Poly::from_ints(f, {1});
    a.at(1, 1) = Poly::from_ints(f, {0, 1});

    PolMat expect(f, 2, 2);
    expect.at(0, 0) = Poly::from_ints(f, {0, 0, 1});
    expect.at(1, 0) = Poly::from_ints(f, {0, 1});
    expect.at(1, 1) = Poly::from_ints(f, {1});

    Shift h = hermite_shift(a);
    if (h != Shift{0, 2}) {
        detail = "hermite shift is not (0,2)";
        return false;
    }
    PolMat got = popov_form(a, h);
    if (got != expect) {
        detail = "named instance mismatch";
        return false;
    }
    if (got != oracle::naive_popov_form(a, h)) {
        detail = "oracle disagrees on the named instance";
        return false;
    }
    detail = "popov_form([[X,1],[0,X]], (0,2)) = [[X^2,0],[X,1]] over F_7";
    return true;
}

bool criterion6(std::string& detail) {
    Rng rng(20260606);
    PrimeField f(97);
    int unimodular_checked = 0;
    for (int it = 0; it < 50; ++it) {
        std::size_t n = 1 + rng.below(4);
        PolMat a = pmftest::random_nonsingular(rng, f, n, 3);
        Shift s = pmftest::random_shift(rng, n, 10);
        PolMat p = popov_form(a, s);

        if (popov_form(p, s) != p) {
            detail = "idempotence failed";
            return false;
        }
        PolMat u = pmftest::random_unimodular(rng, f, n, 8, 2);
        if (popov_form(u * a, s) != p) {
            detail = "unimodular invariance failed";
            return false;
        }
        ++unimodular_checked;
        Shift sc = s;
        std::int64_t c = rng.range(-15, 15);
        for (auto& v : sc) v += c;
        if (popov_form(a, sc) != p) {
            detail = "shift translation invariance failed";
            return false;
        }
    }
    detail = std::to_string(unimodular_checked) + " unimodular transforms";
    return unimodular_checked == 50;
}

bool criterion7(std::string& detail) {
    Rng rng(20260707);
    PrimeField f(97);
    for (int it = 0; it < 50; ++it) {
        std::size_t n = 1 + rng.below(4);
        PolMat a = pmftest::random_nonsingular(rng, f, n, 3);
        Shift s = pmftest::random_shift(rng, n, 8);
        PolMat p = popov_form(a, s);
        std::int64_t dsum = 0;
        for (std::size_t i = 0; i < n; ++i) dsum += p.at(i, i).deg();
        if (dsum != oracle::det_fraction_free(a).deg()) {
            detail = "pivot degree sum does not match deg det";
            return false;
        }
    }
    int built = 0;
    while (built < 500) {
        std::size_t n = 1 + rng.below(5);
        PolMat a(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::int64_t d = rng.below(3) == 0 ? rng.range(5, 16) : rng.range(0, 2);
                a.at(i, j) = pmftest::random_poly(rng, f, d);
            }
        if (oracle::det_fraction_free(a).is_zero()) continue;
        ++built;
        UniformReduction ur = reduce_to_uniform(a, pmftest::random_shift(rng, n, 8));
        std::int64_t sigma = generic_det_bound(a);
        std::int64_t cap = (sigma + static_cast<std::int64_t>(n) - 1) /
                           static_cast<std::int64_t>(n);
        if (ur.matrix.rows() > 3 * n) {
            detail = "expanded dimension above 3n";
            return false;
        }
        if (ur.matrix.deg() > std::max<std::int64_t>(cap, 0)) {
            detail = "expanded degree above ceil(sigma/n)";
            return false;
        }
    }
    detail = "500 unbalanced instances";
    return true;
}

bool criterion8(std::string& detail) {
    Rng rng(20260808);
    PrimeField f(65521);
    for (int it = 0; it < 200; ++it) {
        std::size_t m = 1 + rng.below(4);
        std::size_t k = 1 + rng.below(2);
        Orders tau(k);
        std::int64_t total = 0;
        for (auto& t : tau) {
            t = 1 + rng.range(0, 127);
            total += t;
        }
        if (total > 256) {
            tau.assign(k, 256 / static_cast<std::int64_t>(k));
        }
        PolMat fm = pmftest::random_polmat(rng, f, m, k, 40);
        Shift s = pmftest::random_shift(rng, m, 16);
        OrderBasisResult a = popov_order_basis(fm, tau, s, OrderBasisPath::Iterative);
        OrderBasisResult b = popov_order_basis(fm, tau, s, OrderBasisPath::DivideConquer, 8);
        if (a.basis != b.basis || a.pivot_degree != b.pivot_degree) {
            detail = "path disagreement at instance " + std::to_string(it);
            return false;
        }
    }
    detail = "200 instances";
    return true;
}

bool criterion9(std::string& detail) {
    Rng rng(20260909);
    PrimeField f(65521);

    // full pipeline at n = 16, degree 8
    PolMat a = pmftest::random_polmat(rng, f, 16, 16, 8);
    auto start = std::chrono::steady_clock::now();
    PolMat p = popov_form(a, Shift(16, 0));
    double pipeline = seconds_since(start);
    if (!is_popov(p, Shift(16, 0))) {
        detail = "pipeline output is not Popov";
        return false;
    }
    if (pipeline >= 60.0) {
        detail = "pipeline took " + std::to_string(pipeline) + " s (budget 60)";
        return false;
    }

    // order basis scaling: divide and conquer vs iterative at total order 4096
    PolMat fm = pmftest::random_polmat(rng, f, 8, 1, 4095);
    Shift s(8, 0);
    Orders tau{4096};

    start = std::chrono::steady_clock::now();
    OrderBasisResult dc = popov_order_basis(fm, tau, s, OrderBasisPath::DivideConquer);
    double t_dc = seconds_since(start);

    start = std::chrono::steady_clock::now();
    OrderBasisResult iter = popov_order_basis(fm, tau, s, OrderBasisPath::Iterative);
    double t_iter = seconds_since(start);

    if (dc.basis != iter.basis) {
        detail = "scaling run outputs differ";
        return false;
    }
    detail = "pipeline " + std::to_string(pipeline) + " s; order basis dc " +
             std::to_string(t_dc) + " s vs iterative " + std::to_string(t_iter) + " s";
    return t_iter >= 2.0 * t_dc;
}

struct Criterion {
    int id;
    const char* text;
    bool (*fn)(std::string&);
};

const Criterion kCriteria[] = {
    {1, "Popov oracle equivalence (200 random instances)", criterion1},
    {2, "modular-system oracle equivalence (200 random systems)", criterion2},
    {3, "single-equation order-basis cross-check (100 instances)", criterion3},
    {4, "amplitude-splitting branch exercised and exact", criterion4},
    {5, "named instance over F_7", criterion5},
    {6, "canonicity: idempotence, unimodular and shift-translation invariance", criterion6},
    {7, "degree bounds: pivot sums and uniform-degree reduction", criterion7},
    {8, "order-basis dual-path bit-for-bit agreement (200 instances)", criterion8},
    {9, "scaling smoke: pipeline under 60 s, divide-and-conquer at least 2x", criterion9},
};

} // namespace

int main() {
    int failures = 0;
    for (const Criterion& c : kCriteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", c.id, c.text,
                    detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures;
}
