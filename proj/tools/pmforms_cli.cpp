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

// File-in/file-out front end over the pmforms C API. Exit codes: 0 success
// (and predicate holds for `check`), 1 parse/usage error or failed check,
// 2 singular matrix, 3 internal error.

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <pmforms/pmforms.h>

namespace {

int status_to_exit(pmf_status st) {
    switch (st) {
        case PMF_OK:
            return 0;
        case PMF_ERR_PARSE:
        case PMF_ERR_USAGE:
        case PMF_ERR_IO:
            return 1;
        case PMF_ERR_SINGULAR:
            return 2;
        default:
            return 3;
    }
}

int fail(pmf_status st) {
    std::fprintf(stderr, "error: %s\n", pmf_last_error());
    return status_to_exit(st);
}

struct MatrixHandle {
    pmf_matrix* m = nullptr;
    ~MatrixHandle() { pmf_matrix_free(m); }
};

int read_matrix(const std::string& path, MatrixHandle& h) {
    pmf_status st = pmf_matrix_read_file(path.c_str(), &h.m);
    return st == PMF_OK ? 0 : fail(st);
}

int print_matrix(const pmf_matrix* m) {
    char* text = nullptr;
    pmf_status st = pmf_matrix_write_string(m, &text);
    if (st != PMF_OK) return fail(st);
    std::fputs(text, stdout);
    pmf_string_free(text);
    return 0;
}

bool parse_shift_list(const std::string& text, std::vector<int64_t>& out) {
    out.clear();
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string tok = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                        : comma - start);
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(tok, &used));
            if (used != tok.size()) return false;
        } catch (...) {
            return false;
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return !out.empty();
}

// Resolves --shift into an entry-per-column array; empty vector means the
// uniform shift (NULL for the C API). "hermite" is only meaningful for
// square inputs and is resolved against the matrix.
int resolve_shift(const std::string& spec, const pmf_matrix* m, bool allow_hermite,
                  std::vector<int64_t>& out) {
    out.clear();
    if (spec.empty() || spec == "uniform") return 0;
    if (spec == "hermite") {
        if (!allow_hermite) {
            std::fprintf(stderr, "error: 'hermite' shift is not supported here\n");
            return 1;
        }
        out.resize(pmf_matrix_rows(m));
        pmf_status st = pmf_hermite_shift(m, out.data());
        return st == PMF_OK ? 0 : fail(st);
    }
    if (!parse_shift_list(spec, out)) {
        std::fprintf(stderr, "error: invalid shift '%s'\n", spec.c_str());
        return 1;
    }
    return 0;
}

std::string format_int_list(const std::vector<int64_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(v[i]);
    }
    return out;
}

int cmd_popov(const std::string& path, const std::string& shift_spec, bool hermite_cmd) {
    MatrixHandle a;
    if (int rc = read_matrix(path, a)) return rc;
    std::vector<int64_t> shift;
    pmf_matrix* out = nullptr;
    pmf_status st;
    if (hermite_cmd) {
        st = pmf_hermite_form(a.m, &out);
    } else {
        if (int rc = resolve_shift(shift_spec, a.m, true, shift)) return rc;
        st = pmf_popov_form(a.m, shift.empty() ? nullptr : shift.data(), &out);
    }
    if (st != PMF_OK) return fail(st);
    MatrixHandle guard{out};
    return print_matrix(out);
}

int cmd_smith(const std::string& path) {
    MatrixHandle a;
    if (int rc = read_matrix(path, a)) return rc;
    pmf_matrix* inv = nullptr;
    pmf_status st = pmf_smith_form(a.m, &inv);
    if (st != PMF_OK) return fail(st);
    MatrixHandle guard{inv};
    char* text = nullptr;
    st = pmf_matrix_write_string(inv, &text);
    if (st != PMF_OK) return fail(st);
    // drop the two header lines: the invariants print one per line
    std::string s(text);
    pmf_string_free(text);
    std::size_t pos = s.find('\n');
    pos = s.find('\n', pos + 1);
    std::fputs(s.c_str() + pos + 1, stdout);
    return 0;
}

int cmd_solve_modsys(const std::string& moduli_path, const std::string& equations_path,
                     const std::string& shift_spec) {
    MatrixHandle moduli, eqs;
    if (int rc = read_matrix(moduli_path, moduli)) return rc;
    if (int rc = read_matrix(equations_path, eqs)) return rc;
    std::vector<int64_t> shift;
    if (int rc = resolve_shift(shift_spec, eqs.m, false, shift)) return rc;
    std::vector<int64_t> delta(pmf_matrix_rows(eqs.m));
    pmf_matrix* basis = nullptr;
    pmf_status st = pmf_solution_basis(moduli.m, eqs.m, shift.empty() ? nullptr : shift.data(),
                                       &basis, delta.data());
    if (st != PMF_OK) return fail(st);
    MatrixHandle guard{basis};
    if (int rc = print_matrix(basis)) return rc;
    std::printf("# delta = %s\n", format_int_list(delta).c_str());
    return 0;
}

int cmd_orderbasis(const std::string& path, const std::string& order_spec,
                   const std::string& shift_spec) {
    MatrixHandle f;
    if (int rc = read_matrix(path, f)) return rc;
    std::vector<int64_t> orders;
    if (!parse_shift_list(order_spec, orders)) {
        std::fprintf(stderr, "error: invalid order list '%s'\n", order_spec.c_str());
        return 1;
    }
    std::size_t k = pmf_matrix_cols(f.m);
    if (orders.size() == 1 && k > 1) orders.assign(k, orders[0]);
    if (orders.size() != k) {
        std::fprintf(stderr, "error: expected %zu orders, got %zu\n", k, orders.size());
        return 1;
    }
    std::vector<int64_t> shift;
    if (int rc = resolve_shift(shift_spec, f.m, false, shift)) return rc;
    std::vector<int64_t> delta(pmf_matrix_rows(f.m));
    pmf_matrix* basis = nullptr;
    pmf_status st = pmf_order_basis(f.m, orders.data(), shift.empty() ? nullptr : shift.data(),
                                    &basis, delta.data());
    if (st != PMF_OK) return fail(st);
    MatrixHandle guard{basis};
    if (int rc = print_matrix(basis)) return rc;
    std::printf("# delta = %s\n", format_int_list(delta).c_str());
    return 0;
}

int cmd_check(const std::string& path, const std::string& shift_spec, bool reduced_mode) {
    MatrixHandle m;
    if (int rc = read_matrix(path, m)) return rc;
    std::vector<int64_t> shift;
    if (int rc = resolve_shift(shift_spec, m.m, true, shift)) return rc;
    const int64_t* sp = shift.empty() ? nullptr : shift.data();

    std::size_t rows = pmf_matrix_rows(m.m);
    std::vector<size_t> pidx(rows);
    std::vector<int64_t> pdeg(rows);
    if (pmf_pivot_profile(m.m, sp, pidx.data(), pdeg.data()) == PMF_OK) {
        std::string idx, deg;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i) {
                idx += ",";
                deg += ",";
            }
            idx += std::to_string(pidx[i]);
            deg += std::to_string(pdeg[i]);
        }
        std::printf("pivots: (%s) degrees: (%s)\n", idx.c_str(), deg.c_str());
    } else {
        std::printf("pivots: undefined (zero row)\n");
    }

    int holds = 0;
    pmf_status st = reduced_mode ? pmf_is_reduced(m.m, sp, &holds)
                                 : pmf_is_popov(m.m, sp, &holds);
    if (st != PMF_OK) return fail(st);
    std::printf("%s: %s\n", reduced_mode ? "reduced" : "popov", holds ? "yes" : "no");
    return holds ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"shifted Popov, Hermite and Smith forms of polynomial matrices"};
    app.require_subcommand(1);

    std::string matrix_path, moduli_path, equations_path;
    std::string shift_spec, order_spec;
    bool mode_popov = false, mode_reduced = false;

    CLI::App* popov = app.add_subcommand("popov", "shifted Popov form of a square matrix");
    popov->add_option("matrix", matrix_path, "matrix file")->required();
    popov->add_option("--shift", shift_spec, "comma list, 'uniform' or 'hermite'");

    CLI::App* hermite = app.add_subcommand("hermite", "Hermite form of a square matrix");
    hermite->add_option("matrix", matrix_path, "matrix file")->required();

    CLI::App* smith = app.add_subcommand("smith", "Smith invariant factors, one per line");
    smith->add_option("matrix", matrix_path, "matrix file")->required();

    CLI::App* solve = app.add_subcommand("solve-modsys",
                                         "shifted Popov basis of a modular equation system");
    solve->add_option("moduli", moduli_path, "moduli file (k x 1 matrix)")->required();
    solve->add_option("equations", equations_path, "equations file (n x k matrix)")->required();
    solve->add_option("--shift", shift_spec, "comma list or 'uniform'");

    CLI::App* orderb = app.add_subcommand("orderbasis", "shifted Popov order basis");
    orderb->add_option("matrix", matrix_path, "matrix file (m x k)")->required();
    orderb->add_option("--order", order_spec, "per-column orders, comma list (single value "
                                              "broadcasts)")
        ->required();
    orderb->add_option("--shift", shift_spec, "comma list or 'uniform'");

    CLI::App* check = app.add_subcommand("check", "test a matrix for shifted Popov/reduced form");
    check->add_option("matrix", matrix_path, "matrix file")->required();
    check->add_option("--shift", shift_spec, "comma list, 'uniform' or 'hermite'");
    check->add_flag("--popov", mode_popov, "test the shifted Popov predicate (default)");
    check->add_flag("--reduced", mode_reduced, "test the shifted reduced predicate");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    if (popov->parsed()) return cmd_popov(matrix_path, shift_spec, false);
    if (hermite->parsed()) return cmd_popov(matrix_path, shift_spec, true);
    if (smith->parsed()) return cmd_smith(matrix_path);
    if (solve->parsed()) return cmd_solve_modsys(moduli_path, equations_path, shift_spec);
    if (orderb->parsed()) return cmd_orderbasis(matrix_path, order_spec, shift_spec);
    if (check->parsed()) {
        if (mode_popov && mode_reduced) {
            std::fprintf(stderr, "error: choose one of --popov / --reduced\n");
            return 1;
        }
        return cmd_check(matrix_path, shift_spec, mode_reduced);
    }
    return 1;
}
