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

#include <iosfwd>
#include <string>
#include <string_view>

#include "polmat.hpp"

namespace pmforms {

// Matrix text format, shared by the library and the CLI:
//   line 1: p
//   line 2: m n
//   then m*n lines, row major, one entry per line holding its coefficients
//   c0 c1 ... cd separated by single spaces (low degree first), with the
//   literal token "0" for a zero entry. Lines starting with '#' are
//   comments; blank lines are ignored. Canonical files carry coefficients
//   in [0, p) with no trailing zeros; the parser additionally accepts
//   signed or unreduced coefficients and normalizes them.

PolMat read_polmat(std::istream& in);
PolMat read_polmat_string(const std::string& text);
PolMat read_polmat_file(const std::string& path);

void write_polmat(std::ostream& out, const PolMat& m);
std::string write_polmat_string(const PolMat& m);

/// One entry as a canonical coefficient line ("0" for the zero polynomial).
std::string format_poly_line(const Poly& f);

// Shifts serialize as comma-separated integers, e.g. "0,2,-1".
Shift parse_shift(std::string_view text);
std::string format_shift(const Shift& s);

} // namespace pmforms
