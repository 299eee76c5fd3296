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

#include <cstddef>
#include <utility>
#include <vector>

#include "exalg/rational.hpp"

namespace exalg {

/// Dense univariate polynomial over Q. Coefficients ascending by degree,
/// no trailing zeros; the zero polynomial has an empty vector.
struct Poly {
    std::vector<Rational> c;

    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return constant(Rational(1)); }
    static Poly constant(const Rational& a) {
        Poly p;
        if (!exalg::is_zero(a)) p.c = {a};
        return p;
    }
    /// x^k
    static Poly monomial(std::size_t k, const Rational& a = Rational(1)) {
        Poly p;
        if (!exalg::is_zero(a)) {
            p.c.assign(k + 1, Rational(0));
            p.c[k] = a;
        }
        return p;
    }

    bool is_zero() const { return c.empty(); }
    // degree of the zero polynomial is reported as -1
    long degree() const { return static_cast<long>(c.size()) - 1; }
    const Rational& leading() const { return c.back(); }

    void trim() {
        while (!c.empty() && exalg::is_zero(c.back())) c.pop_back();
    }

    bool operator==(const Poly& o) const { return c == o.c; }

    Rational coeff(std::size_t k) const { return k < c.size() ? c[k] : Rational(0); }

    Rational eval(const Rational& x) const {
        Rational r(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
        return r;
    }
};

inline Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
}

inline Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
}

inline Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (exalg::is_zero(a.c[i])) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

inline Poly operator*(const Poly& a, const Rational& s) {
    Poly r = a;
    for (auto& x : r.c) x *= s;
    r.trim();
    return r;
}

/// Quotient and remainder; the divisor must be nonzero.
inline std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    Poly rem = a;
    Poly quot;
    const long db = b.degree();
    if (rem.degree() >= db) quot.c.assign(static_cast<std::size_t>(rem.degree() - db) + 1, Rational(0));
    while (rem.degree() >= db) {
        const std::size_t shift = static_cast<std::size_t>(rem.degree() - db);
        Rational q = rem.leading() / b.leading();
        quot.c[shift] = q;
        for (std::size_t i = 0; i < b.c.size(); ++i) rem.c[shift + i] -= q * b.c[i];
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

/// Exact division; throws if the remainder is nonzero.
inline Poly poly_divexact(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw DomainError("inexact polynomial division");
    return q;
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic (or zero).
inline std::tuple<Poly, Poly, Poly> poly_xgcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(), s1 = Poly::zero();
    Poly t0 = Poly::zero(), t1 = Poly::one();
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(r0, r1);
        Poly s = s0 - q * s1;
        Poly t = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s);
        t0 = std::move(t1); t1 = std::move(t);
    }
    if (!r0.is_zero()) {
        Rational inv = Rational(1) / r0.leading();
        r0 = r0 * inv;
        s0 = s0 * inv;
        t0 = t0 * inv;
    }
    return {r0, s0, t0};
}

} // namespace exalg
