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

#include <stdexcept>
#include <string>

namespace pmforms {

// Caller passed arguments violating a documented precondition
// (dimension mismatch, modulus mismatch, division by zero, ...).
class UsageError : public std::invalid_argument {
  public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Text input does not conform to the matrix/shift file format.
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A nonsingular matrix was required but the input has rank < n.
class SingularMatrixError : public std::domain_error {
  public:
    explicit SingularMatrixError(const std::string& what) : std::domain_error(what) {}
};

// An internal invariant failed. Always a bug, never a user error.
class InternalError : public std::logic_error {
  public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

namespace detail {
[[noreturn]] inline void internal_check_failed(const char* expr, const char* file, int line) {
    throw InternalError(std::string("internal invariant violated: ") + expr + " at " + file + ":" +
                        std::to_string(line));
}
} // namespace detail

} // namespace pmforms

// Invariant checks stay enabled in release builds; the algorithms rely on
// them to refuse to return silently wrong results.
#define PMF_CHECK(cond)                                                                            \
    do {                                                                                           \
        if (!(cond)) ::pmforms::detail::internal_check_failed(#cond, __FILE__, __LINE__);          \
    } while (0)
