/*
   Copyright 2026 The exalg authors

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

namespace exalg {

/// Violation of an operation's precondition or domain contract
/// (mismatched fields, division by zero, invalid chain, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A computation that would require leaving the coefficient field
/// (e.g. a missing l-th root when normalizing a central element).
/// Carries the offending scalar in printable form.
class FieldExtensionError : public DomainError {
public:
    FieldExtensionError(const std::string& what, std::string scalar)
        : DomainError(what + " [scalar: " + scalar + "]"), scalar_(std::move(scalar)) {}

    const std::string& scalar() const noexcept { return scalar_; }

private:
    std::string scalar_;
};

/// Malformed external input (JSON shape, unparsable numbers).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace exalg
