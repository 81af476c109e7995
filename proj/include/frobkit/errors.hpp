/*
   Copyright 2026 The frobkit authors

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

#ifndef FROBKIT_ERRORS_HPP
#define FROBKIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frobkit {

/* Error taxonomy. kind() feeds the CLI's {error, detail} envelope and its
   exit-code mapping (1 = mathematical input, 2 = resource cap, 3 = parse). */

class Error : public std::runtime_error {
   public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
    virtual const char* kind() const noexcept { return "error"; }
};

// Bad ring parameters or mixing values from different rings.
class ConfigError : public Error {
   public:
    using Error::Error;
    const char* kind() const noexcept override { return "config"; }
};

// Partial arithmetic operations: non-divisor monomial division, exponent overflow.
class ArithmeticError : public Error {
   public:
    using Error::Error;
    const char* kind() const noexcept override { return "arithmetic"; }
};

// Rank or dimension mismatches between matrices, vectors and submodules.
class ShapeError : public Error {
   public:
    using Error::Error;
    const char* kind() const noexcept override { return "shape"; }
};

// Violated structural invariants, e.g. Image(BA) not inside Image(A^[p]).
class InvalidStructureError : public Error {
   public:
    using Error::Error;
    const char* kind() const noexcept override { return "invalid-structure"; }
};

// Inputs the operation rejects by contract, e.g. colon by the zero ideal.
class DegenerateInputError : public Error {
   public:
    using Error::Error;
    const char* kind() const noexcept override { return "degenerate-input"; }
};

// Requests outside the supported fragment, e.g. automatic degree bounds
// for nonzero ideals.
class UnsupportedError : public Error {
   public:
    using Error::Error;
    const char* kind() const noexcept override { return "unsupported"; }
};

// Explicit cap-exceeded results: chain caps, window dimension caps.
class ResourceCapError : public Error {
   public:
    using Error::Error;
    const char* kind() const noexcept override { return "resource-cap"; }
};

// Session text errors; carries position and the offending token.
class ParseError : public Error {
   public:
    ParseError(const std::string& what, std::size_t line, std::size_t col,
               std::string token = {})
        : Error(what + " (line " + std::to_string(line) + ", column " +
                std::to_string(col) +
                (token.empty() ? std::string{} : ", near '" + token + "'") + ")"),
          line_(line),
          col_(col),
          token_(std::move(token)) {}
    const char* kind() const noexcept override { return "parse"; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return col_; }
    const std::string& token() const noexcept { return token_; }

   private:
    std::size_t line_;
    std::size_t col_;
    std::string token_;
};

}  // namespace frobkit

#endif
