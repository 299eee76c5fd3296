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

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "exalg/polynomial.hpp"

namespace exalg {

/// Phi_l, the l-th cyclotomic polynomial: exact division of x^l - 1 by the
/// product of Phi_d over proper divisors d of l. Results are memoized;
/// the cache is mutex-guarded and otherwise invisible.
inline const Poly& cyclotomic_poly(unsigned long l) {
    if (l < 1) throw DomainError("cyclotomic_poly: order must be >= 1");
    static std::map<unsigned long, Poly> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(l);
        if (it != cache.end()) return it->second;
    }
    Poly result;
    if (l == 1) {
        result = Poly({Rational(-1), Rational(1)}); // x - 1
    } else {
        Poly num = Poly::monomial(l) - Poly::one(); // x^l - 1
        Poly den = Poly::one();
        for (unsigned long d = 1; d < l; ++d)
            if (l % d == 0) den = den * cyclotomic_poly(d);
        result = poly_divexact(num, den);
    }
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(l, std::move(result)).first->second;
}

inline unsigned long cyclotomic_degree(unsigned long l) {
    return static_cast<unsigned long>(cyclotomic_poly(l).degree());
}

/// Element of Q(xi_l): a residue class of Q[x] mod Phi_l on the power basis
/// 1, xi, ..., xi^{phi(l)-1}. Immutable after construction; equality is
/// coefficient-vector equality.
class Cyclotomic {
public:
    explicit Cyclotomic(unsigned long order)
        : order_(check_order(order)), coeffs_(cyclotomic_degree(order), Rational(0)) {}

    Cyclotomic(unsigned long order, const Rational& value) : Cyclotomic(order) {
        coeffs_[0] = value;
    }

    Cyclotomic(unsigned long order, std::vector<Rational> coeffs)
        : order_(check_order(order)), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != cyclotomic_degree(order_))
            throw DomainError("cyclotomic coefficient vector has wrong length");
    }

    /// xi_l^k
    static Cyclotomic zeta_power(unsigned long order, long k) {
        const long l = static_cast<long>(check_order(order));
        long e = k % l;
        if (e < 0) e += l;
        return from_poly(order, Poly::monomial(static_cast<std::size_t>(e)));
    }

    static Cyclotomic zeta(unsigned long order) { return zeta_power(order, 1); }

    static Cyclotomic from_poly(unsigned long order, const Poly& p) {
        auto [q, r] = poly_divmod(p, cyclotomic_poly(order));
        (void)q;
        Cyclotomic out(order);
        for (std::size_t i = 0; i < r.c.size(); ++i) out.coeffs_[i] = r.c[i];
        return out;
    }

    unsigned long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!exalg::is_zero(c)) return false;
        return true;
    }

    /// The rational value, if this element lies in Q.
    std::optional<Rational> as_rational() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (!exalg::is_zero(coeffs_[i])) return std::nullopt;
        return coeffs_.empty() ? Rational(0) : coeffs_[0];
    }

    bool operator==(const Cyclotomic& o) const {
        return order_ == o.order_ && coeffs_ == o.coeffs_;
    }

    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        check_same(a, b);
        Cyclotomic r = a;
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
        return r;
    }

    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        check_same(a, b);
        Cyclotomic r = a;
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
        return r;
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        check_same(a, b);
        return from_poly(a.order_, a.to_poly() * b.to_poly());
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const Rational& s) {
        Cyclotomic r = a;
        for (auto& c : r.coeffs_) c *= s;
        return r;
    }

    /// Multiplicative inverse via extended Euclid against Phi_l.
    Cyclotomic inverse() const {
        if (is_zero()) throw DomainError("cyclotomic division by zero");
        auto [g, s, t] = poly_xgcd(to_poly(), cyclotomic_poly(order_));
        (void)t;
        if (g.degree() != 0)
            throw DomainError("cyclotomic inverse: gcd with Phi_l is not constant");
        return from_poly(order_, s);
    }

    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
        check_same(a, b);
        return a * b.inverse();
    }

    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }

    Cyclotomic pow(unsigned long e) const {
        Cyclotomic acc(order_, Rational(1));
        Cyclotomic base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    Poly to_poly() const {
        Poly p;
        p.c = coeffs_;
        p.trim();
        return p;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) s += ",";
            s += rational_to_string(coeffs_[i]);
        }
        return s + "]@" + std::to_string(order_);
    }

private:
    static unsigned long check_order(unsigned long l) {
        if (l < 1) throw DomainError("cyclotomic order must be >= 1");
        return l;
    }
    static void check_same(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.order_ != b.order_)
            throw DomainError("cyclotomic order mismatch: " + std::to_string(a.order_) +
                              " vs " + std::to_string(b.order_));
    }

    unsigned long order_;
    std::vector<Rational> coeffs_;
};

template <>
struct FieldDesc<Cyclotomic> {
    unsigned long order = 1;
    Cyclotomic zero() const { return Cyclotomic(order); }
    Cyclotomic one() const { return Cyclotomic(order, Rational(1)); }
    Cyclotomic from_int(long k) const { return Cyclotomic(order, Rational(k)); }
    Cyclotomic zeta() const { return Cyclotomic::zeta(order); }
    Cyclotomic zeta_power(long k) const { return Cyclotomic::zeta_power(order, k); }
    bool operator==(const FieldDesc&) const = default;
    std::string name() const { return "Q(zeta_" + std::to_string(order) + ")"; }
};

inline bool is_zero(const Cyclotomic& c) { return c.is_zero(); }

inline std::string scalar_to_display(const Cyclotomic& c) { return c.to_string(); }

/// Square root inside Q(xi_l), when one can be exhibited: rational squares,
/// negated rational squares when i = xi^{l/4} is available, and plain
/// root-of-unity cases. Returns nullopt otherwise.
inline std::optional<Cyclotomic> field_sqrt(const FieldDesc<Cyclotomic>& fd, const Cyclotomic& v) {
    if (auto r = v.as_rational()) {
        if (auto s = rational_sqrt(*r)) return Cyclotomic(fd.order, *s);
        if (fd.order % 4 == 0) {
            if (auto s = rational_sqrt(-*r)) return fd.zeta_power(static_cast<long>(fd.order / 4)) * *s;
        }
    }
    for (unsigned long t = 0; t < fd.order; ++t) {
        Cyclotomic c = fd.zeta_power(static_cast<long>(t));
        if (c * c == v) return c;
    }
    return std::nullopt;
}

} // namespace exalg
