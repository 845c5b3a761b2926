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

#include "matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "errors.hpp"

namespace pmforms {

namespace {

bool is_blank(const std::string& line) {
    for (char c : line)
        if (c != ' ' && c != '\t' && c != '\r') return false;
    return true;
}

// Next content line: comments and blank lines skipped.
bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (is_blank(line)) continue;
        std::size_t i = line.find_first_not_of(" \t");
        if (line[i] == '#') continue;
        return true;
    }
    return false;
}

std::int64_t parse_int(std::string_view tok, const char* what) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(std::string("invalid ") + what + ": '" + std::string(tok) + "'");
    return v;
}

std::uint64_t parse_u64(std::string_view tok, const char* what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(std::string("invalid ") + what + ": '" + std::string(tok) + "'");
    return v;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

} // namespace

PolMat read_polmat(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw ParseError("missing field modulus line");
    auto ptoks = split_ws(line);
    if (ptoks.size() != 1) throw ParseError("field modulus line must hold a single integer");
    std::uint64_t p = parse_u64(ptoks[0], "field modulus");
    PrimeField field = [&] {
        try {
            return PrimeField(p);
        } catch (const UsageError& e) {
            throw ParseError(e.what());
        }
    }();

    if (!next_line(in, line)) throw ParseError("missing dimension line");
    auto dtoks = split_ws(line);
    if (dtoks.size() != 2) throw ParseError("dimension line must hold two integers");
    std::uint64_t m = parse_u64(dtoks[0], "row count");
    std::uint64_t n = parse_u64(dtoks[1], "column count");
    if (m == 0 || n == 0) throw ParseError("matrix dimensions must be at least 1 x 1");
    if (m > 4096 || n > 4096) throw ParseError("matrix dimensions out of supported range");

    PolMat mat(field, static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!next_line(in, line))
                throw ParseError("missing entry line for position (" + std::to_string(i + 1) +
                                 "," + std::to_string(j + 1) + ")");
            auto toks = split_ws(line);
            if (toks.empty()) throw ParseError("empty entry line");
            std::vector<std::int64_t> coeffs;
            coeffs.reserve(toks.size());
            for (auto t : toks) coeffs.push_back(parse_int(t, "coefficient"));
            mat.at(i, j) = Poly::from_ints(field, coeffs);
        }
    if (next_line(in, line)) throw ParseError("unexpected trailing content: '" + line + "'");
    return mat;
}

PolMat read_polmat_string(const std::string& text) {
    std::istringstream in(text);
    return read_polmat(in);
}

PolMat read_polmat_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return read_polmat(in);
}

std::string format_poly_line(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i > 0) out.push_back(' ');
        out += std::to_string(f.coeff(i));
    }
    return out;
}

void write_polmat(std::ostream& out, const PolMat& m) {
    out << m.modulus() << '\n' << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out << format_poly_line(m.at(i, j)) << '\n';
}

std::string write_polmat_string(const PolMat& m) {
    std::ostringstream out;
    write_polmat(out, m);
    return out.str();
}

Shift parse_shift(std::string_view text) {
    Shift s;
    std::size_t start = 0;
    if (text.empty()) throw ParseError("empty shift");
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view tok = text.substr(start, comma == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : comma - start);
        // tolerate surrounding spaces
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        s.push_back(parse_int(tok, "shift entry"));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return s;
}

std::string format_shift(const Shift& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0) out.push_back(',');
        out += std::to_string(s[i]);
    }
    return out;
}

} // namespace pmforms
