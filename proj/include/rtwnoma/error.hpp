// SPDX-License-Identifier: Apache-2.0
//
// rtwnoma - performance analysis of RIS-assisted two-way NOMA networks
// Copyright (C) 2026 The rtwnoma Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RTWNOMA_ERROR_HPP
#define RTWNOMA_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rtwnoma {

// Base of every exception the library throws. The C API maps each subclass
// onto one status code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A precondition on a function argument was violated.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// A configuration value violates a model invariant (a1 + a2 = 1, even M, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

// A configuration file could not be parsed. Line and column are 1-based;
// zero means unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Quadrature did not reach its tolerance, or a sample produced a non-finite value.
class NumericError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace rtwnoma

#endif
