/*
   Copyright 2026 jscoh contributors

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

#ifndef JSCOH_ERRORS_HPP
#define JSCOH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jscoh {

class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DivisionByZero : public Error {
  public:
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

class BothZero : public Error {
  public:
    BothZero() : Error("gcd of two zero polynomials") {}
};

class DenominatorVanishes : public Error {
  public:
    explicit DenominatorVanishes(const std::string& at)
        : Error("denominator vanishes at t = " + at) {}
};

/// Parse failure; `position` is a 0-based offset into the input text.
class ParseError : public Error {
  public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"), position(position) {}
    std::size_t position;
};

class DimensionMismatch : public Error {
  public:
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

class GradingViolation : public Error {
  public:
    explicit GradingViolation(const std::string& msg) : Error(msg) {}
};

class InconsistentSymmetricPair : public Error {
  public:
    explicit InconsistentSymmetricPair(const std::string& msg) : Error(msg) {}
};

class NotASubspace : public Error {
  public:
    explicit NotASubspace(const std::string& msg) : Error(msg) {}
};

class LayoutMismatch : public Error {
  public:
    explicit LayoutMismatch(const std::string& msg) : Error(msg) {}
};

class InputError : public Error {
  public:
    explicit InputError(const std::string& msg) : Error(msg) {}
};

}  // namespace jscoh

#endif
