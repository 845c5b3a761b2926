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

#include "pmforms/pmforms.h"

#include <cstring>
#include <new>
#include <string>

#include "errors.hpp"
#include "matrix_io.hpp"
#include "modsys.hpp"
#include "order_basis.hpp"
#include "polmat.hpp"
#include "popov_form.hpp"

using namespace pmforms;

struct pmf_matrix {
    PolMat m;
};

namespace {

thread_local std::string g_last_error = "no error";

void set_error(const char* what) { g_last_error = what; }

template <typename Fn> pmf_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        set_error(e.what());
        return PMF_ERR_PARSE;
    } catch (const SingularMatrixError& e) {
        set_error(e.what());
        return PMF_ERR_SINGULAR;
    } catch (const UsageError& e) {
        set_error(e.what());
        return PMF_ERR_USAGE;
    } catch (const InternalError& e) {
        set_error(e.what());
        return PMF_ERR_INTERNAL;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return PMF_ERR_INTERNAL;
    } catch (const std::exception& e) {
        set_error(e.what());
        return PMF_ERR_INTERNAL;
    }
}

Shift shift_or_uniform(const int64_t* shift, std::size_t len) {
    if (!shift) return Shift(len, 0);
    return Shift(shift, shift + len);
}

pmf_status require(const void* p, const char* what) {
    if (p) return PMF_OK;
    set_error(what);
    return PMF_ERR_USAGE;
}

} // namespace

extern "C" {

const char* pmf_last_error(void) { return g_last_error.c_str(); }

pmf_status pmf_matrix_read_file(const char* path, pmf_matrix** out) {
    if (require(path, "path is NULL") || require(out, "output handle is NULL"))
        return PMF_ERR_USAGE;
    return guarded([&] {
        *out = new pmf_matrix{read_polmat_file(path)};
        return PMF_OK;
    });
}

pmf_status pmf_matrix_read_string(const char* text, pmf_matrix** out) {
    if (require(text, "text is NULL") || require(out, "output handle is NULL"))
        return PMF_ERR_USAGE;
    return guarded([&] {
        *out = new pmf_matrix{read_polmat_string(text)};
        return PMF_OK;
    });
}

pmf_status pmf_matrix_write_string(const pmf_matrix* m, char** out) {
    if (require(m, "matrix is NULL") || require(out, "output pointer is NULL"))
        return PMF_ERR_USAGE;
    return guarded([&] {
        std::string text = write_polmat_string(m->m);
        char* buf = static_cast<char*>(::operator new(text.size() + 1));
        std::memcpy(buf, text.c_str(), text.size() + 1);
        *out = buf;
        return PMF_OK;
    });
}

void pmf_string_free(char* s) { ::operator delete(s); }

void pmf_matrix_free(pmf_matrix* m) { delete m; }

uint64_t pmf_matrix_modulus(const pmf_matrix* m) { return m ? m->m.modulus() : 0; }
size_t pmf_matrix_rows(const pmf_matrix* m) { return m ? m->m.rows() : 0; }
size_t pmf_matrix_cols(const pmf_matrix* m) { return m ? m->m.cols() : 0; }
int64_t pmf_matrix_degree(const pmf_matrix* m) { return m ? m->m.deg() : -1; }

pmf_status pmf_popov_form(const pmf_matrix* a, const int64_t* shift, pmf_matrix** out) {
    if (require(a, "matrix is NULL") || require(out, "output handle is NULL"))
        return PMF_ERR_USAGE;
    return guarded([&] {
        *out = new pmf_matrix{popov_form(a->m, shift_or_uniform(shift, a->m.cols()))};
        return PMF_OK;
    });
}

pmf_status pmf_hermite_form(const pmf_matrix* a, pmf_matrix** out) {
    if (require(a, "matrix is NULL") || require(out, "output handle is NULL"))
        return PMF_ERR_USAGE;
    return guarded([&] {
        *out = new pmf_matrix{hermite_form(a->m)};
        return PMF_OK;
    });
}

pmf_status pmf_hermite_shift(const pmf_matrix* a, int64_t* shift_out) {
    if (require(a, "matrix is NULL") || require(shift_out, "shift output is NULL"))
        return PMF_ERR_USAGE;
    return guarded([&] {
        Shift h = hermite_shift(a->m);
        for (std::size_t i = 0; i < h.size(); ++i) shift_out[i] = h[i];
        return PMF_OK;
    });
}

pmf_status pmf_smith_form(const pmf_matrix* a, pmf_matrix** invariants_out) {
    if (require(a, "matrix is NULL") || require(invariants_out, "output handle is NULL"))
        return PMF_ERR_USAGE;
    return guarded([&] {
        SmithDecomposition sd = smith_with_right_transform(a->m);
        PolMat col(a->m.field(), sd.invariants.size(), 1);
        for (std::size_t i = 0; i < sd.invariants.size(); ++i) col.at(i, 0) = sd.invariants[i];
        *invariants_out = new pmf_matrix{std::move(col)};
        return PMF_OK;
    });
}

pmf_status pmf_solution_basis(const pmf_matrix* moduli, const pmf_matrix* equations,
                              const int64_t* shift, pmf_matrix** basis_out, int64_t* delta_out) {
    if (require(moduli, "moduli matrix is NULL") || require(equations, "equations are NULL") ||
        require(basis_out, "output handle is NULL"))
        return PMF_ERR_USAGE;
    return guarded([&] {
        if (moduli->m.cols() != 1) throw UsageError("moduli must form a k x 1 matrix");
        std::vector<Poly> m;
        m.reserve(moduli->m.rows());
        for (std::size_t i = 0; i < moduli->m.rows(); ++i) m.push_back(moduli->m.at(i, 0));
        ModularSystem sys{std::move(m), equations->m,
                          shift_or_uniform(shift, equations->m.rows())};
        SolutionBasisResult r = solution_basis(sys);
        if (delta_out)
            for (std::size_t i = 0; i < r.min_degree.size(); ++i) delta_out[i] = r.min_degree[i];
        *basis_out = new pmf_matrix{std::move(r.basis)};
        return PMF_OK;
    });
}

pmf_status pmf_order_basis(const pmf_matrix* f, const int64_t* orders, const int64_t* shift,
                           pmf_matrix** basis_out, int64_t* delta_out) {
    if (require(f, "matrix is NULL") || require(orders, "orders are NULL") ||
        require(basis_out, "output handle is NULL"))
        return PMF_ERR_USAGE;
    return guarded([&] {
        Orders tau(orders, orders + f->m.cols());
        OrderBasisResult r =
            popov_order_basis(f->m, tau, shift_or_uniform(shift, f->m.rows()));
        if (delta_out)
            for (std::size_t i = 0; i < r.pivot_degree.size(); ++i)
                delta_out[i] = r.pivot_degree[i];
        *basis_out = new pmf_matrix{std::move(r.basis)};
        return PMF_OK;
    });
}

pmf_status pmf_is_popov(const pmf_matrix* m, const int64_t* shift, int* holds_out) {
    if (require(m, "matrix is NULL") || require(holds_out, "output flag is NULL"))
        return PMF_ERR_USAGE;
    return guarded([&] {
        *holds_out = is_popov(m->m, shift_or_uniform(shift, m->m.cols())) ? 1 : 0;
        return PMF_OK;
    });
}

pmf_status pmf_is_reduced(const pmf_matrix* m, const int64_t* shift, int* holds_out) {
    if (require(m, "matrix is NULL") || require(holds_out, "output flag is NULL"))
        return PMF_ERR_USAGE;
    return guarded([&] {
        *holds_out = is_reduced(m->m, shift_or_uniform(shift, m->m.cols())) ? 1 : 0;
        return PMF_OK;
    });
}

pmf_status pmf_pivot_profile(const pmf_matrix* m, const int64_t* shift, size_t* index_out,
                             int64_t* degree_out) {
    if (require(m, "matrix is NULL")) return PMF_ERR_USAGE;
    return guarded([&] {
        PivotProfile prof = pivot_profile(m->m, shift_or_uniform(shift, m->m.cols()));
        for (std::size_t i = 0; i < prof.index.size(); ++i) {
            if (index_out) index_out[i] = prof.index[i] + 1; // 1-based externally
            if (degree_out) degree_out[i] = prof.degree[i];
        }
        return PMF_OK;
    });
}

} // extern "C"
