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
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exalg/rational.hpp"

namespace exalg {

/// Prime factorization of n >= 1. Trial division with a Pollard-rho
/// fallback; plenty for the sizes that arise from embedding chains.
inline std::map<BigInt, std::uint64_t> factorize(const BigInt& n) {
    if (n < 1) throw DomainError("factorize: argument must be >= 1");
    std::map<BigInt, std::uint64_t> out;
    BigInt rest = n;
    auto strip = [&](const BigInt& p) {
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            ++out[p];
        }
    };
    strip(BigInt(2));
    for (BigInt p = 3; p * p <= rest && p < 1000000; p += 2) strip(p);
    // rho loop for whatever survives trial division
    std::vector<BigInt> pending;
    if (rest > 1) pending.push_back(rest);
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xec5f17ul);
    while (!pending.empty()) {
        BigInt v = pending.back();
        pending.pop_back();
        if (v == 1) continue;
        if (mpz_probab_prime_p(v.get_mpz_t(), 40) != 0) {
            strip(v); // v divides rest by construction
            continue;
        }
        // Pollard rho (Brent variant not needed at this scale)
        for (;;) {
            BigInt c = rng.get_z_range(v - 1) + 1;
            BigInt x = rng.get_z_range(v), y = x, d = 1;
            while (d == 1) {
                x = (x * x + c) % v;
                y = (y * y + c) % v;
                y = (y * y + c) % v;
                d = gcd(BigInt(x - y), v);
            }
            if (d != v) {
                pending.push_back(d);
                pending.push_back(v / d);
                break;
            }
        }
    }
    return out;
}

/// Supernatural number: a formal product of primes with exponents in
/// N union {infinity}, or the greatest element I (every exponent infinite).
/// Finite support only; I is a dedicated flag. Canonical form makes
/// equality structural.
class SteinitzNumber {
public:
    using Exp = std::uint64_t;
    static constexpr Exp kInf = std::numeric_limits<Exp>::max();

    SteinitzNumber() = default; // the number 1

    static SteinitzNumber one() { return SteinitzNumber(); }

    static SteinitzNumber top() {
        SteinitzNumber s;
        s.is_top_ = true;
        return s;
    }

    static SteinitzNumber from_integer(const BigInt& n) {
        SteinitzNumber s;
        for (auto& [p, e] : factorize(n)) s.exps_[p] = e;
        return s;
    }

    static SteinitzNumber from_factors(std::map<BigInt, Exp> factors) {
        SteinitzNumber s;
        for (auto& [p, e] : factors) {
            if (e == 0) continue;
            if (mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
                throw DomainError("steinitz factor base must be prime: " + p.get_str());
            s.exps_[p] = e;
        }
        return s;
    }

    bool is_top() const { return is_top_; }
    bool is_one() const { return !is_top_ && exps_.empty(); }
    const std::map<BigInt, Exp>& exponents() const { return exps_; }

    Exp exponent_of(const BigInt& p) const {
        if (is_top_) return kInf;
        auto it = exps_.find(p);
        return it == exps_.end() ? 0 : it->second;
    }

    bool is_finite() const {
        if (is_top_) return false;
        for (auto& [p, e] : exps_)
            if (e == kInf) return false;
        return true;
    }

    bool has_infinite_exponent() const {
        if (is_top_) return true;
        for (auto& [p, e] : exps_)
            if (e == kInf) return true;
        return false;
    }

    /// Value as a big integer; only for finite numbers.
    BigInt to_integer() const {
        if (!is_finite()) throw DomainError("infinite Steinitz number has no integer value");
        BigInt n = 1;
        for (auto& [p, e] : exps_) {
            BigInt pe;
            mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
            n *= pe;
        }
        return n;
    }

    bool operator==(const SteinitzNumber& o) const = default;

    std::string to_string() const {
        if (is_top_) return "I";
        if (exps_.empty()) return "1";
        std::string s;
        for (auto& [p, e] : exps_) {
            if (!s.empty()) s += "*";
            s += p.get_str();
            if (e == kInf)
                s += "^inf";
            else if (e != 1)
                s += "^" + std::to_string(e);
        }
        return s;
    }

private:
    friend SteinitzNumber st_mul(const SteinitzNumber&, const SteinitzNumber&);
    friend SteinitzNumber st_lcm(const SteinitzNumber&, const SteinitzNumber&);
    friend SteinitzNumber st_gcd(const SteinitzNumber&, const SteinitzNumber&);
    friend bool st_divides(const SteinitzNumber&, const SteinitzNumber&);

    std::map<BigInt, Exp> exps_;
    bool is_top_ = false;
};

/// Prime-wise exponent addition, infinity absorbing.
inline SteinitzNumber st_mul(const SteinitzNumber& a, const SteinitzNumber& b) {
    if (a.is_top() || b.is_top()) return SteinitzNumber::top();
    SteinitzNumber r = a;
    for (auto& [p, e] : b.exps_) {
        auto& cur = r.exps_[p];
        if (cur == SteinitzNumber::kInf || e == SteinitzNumber::kInf)
            cur = SteinitzNumber::kInf;
        else
            cur += e;
    }
    return r;
}

/// v | u iff every exponent of v is <= the matching exponent of u.
inline bool st_divides(const SteinitzNumber& v, const SteinitzNumber& u) {
    if (u.is_top()) return true;
    if (v.is_top()) return false;
    for (auto& [p, e] : v.exps_)
        if (e > u.exponent_of(p)) return false;
    return true;
}

inline SteinitzNumber st_lcm(const SteinitzNumber& a, const SteinitzNumber& b) {
    if (a.is_top() || b.is_top()) return SteinitzNumber::top();
    SteinitzNumber r = a;
    for (auto& [p, e] : b.exps_) {
        auto& cur = r.exps_[p];
        cur = std::max(cur, e);
    }
    return r;
}

inline SteinitzNumber st_gcd(const SteinitzNumber& a, const SteinitzNumber& b) {
    if (a.is_top()) return b;
    if (b.is_top()) return a;
    SteinitzNumber r;
    for (auto& [p, e] : a.exps_) {
        auto eb = b.exponent_of(p);
        auto m = std::min(e, eb);
        if (m > 0) r.exps_[p] = m;
    }
    return r;
}

/// lcm of a finite list, with an optional periodic multiplier t repeated
/// forever: every prime of t then gets exponent infinity (the limit of
/// lcm(values) * t^k).
inline SteinitzNumber st_lcm_of_set(const std::vector<BigInt>& values,
                                    const std::optional<BigInt>& tail = std::nullopt) {
    if (values.empty()) throw DomainError("st_lcm_of_set: empty value list");
    SteinitzNumber r;
    for (const auto& n : values) {
        if (n < 1) throw DomainError("st_lcm_of_set: values must be positive");
        r = st_lcm(r, SteinitzNumber::from_integer(n));
    }
    if (tail) {
        if (*tail < 2) throw DomainError("st_lcm_of_set: tail multiplier must be >= 2");
        std::map<BigInt, SteinitzNumber::Exp> inf;
        for (auto& [p, e] : factorize(*tail)) {
            (void)e;
            inf[p] = SteinitzNumber::kInf;
        }
        r = st_lcm(r, SteinitzNumber::from_factors(std::move(inf)));
    }
    return r;
}

} // namespace exalg
