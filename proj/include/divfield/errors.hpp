/*
   Copyright 2026 The divfield Authors

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

#ifndef DIVFIELD_ERRORS_HPP
#define DIVFIELD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace divfield {

/// Thrown when caller-supplied data violates a documented precondition
/// (non-prime p, trace outside the Hasse interval, n not coprime to p, ...).
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when an identity that must hold exactly fails, or an intermediate
/// leaves the representable range. Always indicates a bug or an input far
/// outside the supported scale.
class ArithmeticError : public std::logic_error {
public:
    explicit ArithmeticError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace divfield

#endif  // DIVFIELD_ERRORS_HPP
