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

#include <optional>
#include <string>

#include <gmpxx.h>

#include "exalg/errors.hpp"

namespace exalg {

/// Exact arbitrary-precision integers and rationals, backed by GMP.
/// mpq_class keeps exactly the invariants we need: always reduced,
/// denominator > 0, zero is 0/1.
using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

/// Parses "p/q" or a bare integer "p". Whitespace is not accepted.
inline Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(s));
        }
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal: '" + s + "'");
    }
}

/// Canonical "p/q" form (denominator always printed).
inline std::string rational_to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Exact square root, when it exists in Q.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    if (sgn(q) == 0) return Rational(0);
    if (!mpz_perfect_square_p(q.get_num().get_mpz_t()) ||
        !mpz_perfect_square_p(q.get_den().get_mpz_t()))
        return std::nullopt;
    BigInt n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den().get_mpz_t());
    return make_rational(n, d);
}

/// Field descriptor: supplies constants of the right field for generic
/// code (a Cyclotomic zero needs to know its order, a Rational does not).
template <class S>
struct FieldDesc;

template <>
struct FieldDesc<Rational> {
    Rational zero() const { return Rational(0); }
    Rational one() const { return Rational(1); }
    Rational from_int(long k) const { return Rational(k); }
    bool operator==(const FieldDesc&) const = default;
    std::string name() const { return "Q"; }
};

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline std::string scalar_to_display(const Rational& q) { return rational_to_string(q); }

inline std::optional<Rational> field_sqrt(const FieldDesc<Rational>&, const Rational& q) {
    return rational_sqrt(q);
}

} // namespace exalg
