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

#include <algorithm>
#include <cstddef>
#include <vector>

#include "exalg/rational.hpp"

namespace exalg {

/// Rectangular matrix with exact integer entries, row-major.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<BigInt> a;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, BigInt(0)) {}

    BigInt& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    bool operator==(const IntMatrix& o) const = default;
};

/// D = U*M*V with U, V unimodular, D diagonal with d1 | d2 | ... | dr.
/// Only D and V are materialized (V is what kernel extraction needs).
struct SmithResult {
    IntMatrix d;
    IntMatrix v;           // cols x cols, accumulated column operations
    std::size_t rank = 0;  // number of nonzero diagonal entries
};

inline SmithResult smith_normal_form(IntMatrix m) {
    const std::size_t rows = m.rows, cols = m.cols;
    IntMatrix v = IntMatrix::identity(cols);
    const std::size_t steps = std::min(rows, cols);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < cols; ++k) std::swap(m.at(i, k), m.at(j, k));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < rows; ++k) std::swap(m.at(k, i), m.at(k, j));
        for (std::size_t k = 0; k < cols; ++k) std::swap(v.at(k, i), v.at(k, j));
    };
    // row_i -= q * row_j
    auto row_sub = [&](std::size_t i, std::size_t j, const BigInt& q) {
        if (q == 0) return;
        for (std::size_t k = 0; k < cols; ++k) m.at(i, k) -= q * m.at(j, k);
    };
    auto col_sub = [&](std::size_t i, std::size_t j, const BigInt& q) {
        if (q == 0) return;
        for (std::size_t k = 0; k < rows; ++k) m.at(k, i) -= q * m.at(k, j);
        for (std::size_t k = 0; k < cols; ++k) v.at(k, i) -= q * v.at(k, j);
    };

    std::size_t s = 0;
    for (; s < steps; ++s) {
        // pivot: smallest nonzero absolute value in the trailing submatrix
        std::size_t pi = s, pj = s;
        bool found = false;
        BigInt best;
        for (std::size_t i = s; i < rows; ++i)
            for (std::size_t j = s; j < cols; ++j) {
                if (m.at(i, j) == 0) continue;
                BigInt av = abs(m.at(i, j));
                if (!found || av < best) {
                    found = true;
                    best = av;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        swap_rows(s, pi);
        swap_cols(s, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = s + 1; i < rows; ++i) {
                if (m.at(i, s) == 0) continue;
                BigInt q, r;
                mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.at(i, s).get_mpz_t(),
                            m.at(s, s).get_mpz_t());
                row_sub(i, s, q);
                if (r != 0) {
                    swap_rows(s, i); // strictly smaller pivot, restart
                    clean = false;
                    break;
                }
            }
            if (!clean) continue;
            for (std::size_t j = s + 1; j < cols; ++j) {
                if (m.at(s, j) == 0) continue;
                BigInt q, r;
                mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.at(s, j).get_mpz_t(),
                            m.at(s, s).get_mpz_t());
                col_sub(j, s, q);
                if (r != 0) {
                    swap_cols(s, j);
                    clean = false;
                    break;
                }
            }
            if (!clean) continue;

            // enforce pivot | every entry of the trailing submatrix
            bool divides_all = true;
            for (std::size_t i = s + 1; i < rows && divides_all; ++i)
                for (std::size_t j = s + 1; j < cols; ++j)
                    if (m.at(i, j) % m.at(s, s) != 0) {
                        col_sub(s, j, BigInt(-1)); // fold column j into the pivot column
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
        if (sgn(m.at(s, s)) < 0) {
            for (std::size_t k = 0; k < rows; ++k) m.at(k, s) = -m.at(k, s);
            for (std::size_t k = 0; k < cols; ++k) v.at(k, s) = -v.at(k, s);
        }
    }

    SmithResult out;
    out.rank = s;
    out.v = std::move(v);
    out.d = IntMatrix(rows, cols);
    for (std::size_t i = 0; i < s; ++i) out.d.at(i, i) = m.at(i, i);
    return out;
}

/// Solutions of M*k = 0 over Z/lZ: a generating set of the solution
/// subgroup of (Z/lZ)^cols plus the exact solution count. The generators
/// come from Smith form coordinates, so the subgroup is their direct
/// product: every solution is a unique combination sum t_i * gen_i with
/// 0 <= t_i < order_i.
struct KernelMod {
    struct Generator {
        std::vector<BigInt> vec; // entries reduced to [0, l)
        BigInt order;
    };

    unsigned long modulus = 2;
    std::size_t dim = 0;
    std::vector<Generator> generators;
    BigInt count = 1;

    /// Full enumeration of the solution subgroup, sorted (count must stay small).
    std::vector<std::vector<BigInt>> enumerate(const BigInt& max_count = BigInt(1000000)) const {
        if (count > max_count)
            throw DomainError("kernel_mod enumeration too large: " + count.get_str());
        const BigInt ell(modulus);
        std::vector<std::vector<BigInt>> acc;
        acc.push_back(std::vector<BigInt>(dim, BigInt(0)));
        for (const auto& gen : generators) {
            std::vector<std::vector<BigInt>> next;
            for (const auto& base : acc) {
                std::vector<BigInt> cur = base;
                for (BigInt t = 0; t < gen.order; ++t) {
                    next.push_back(cur);
                    for (std::size_t r = 0; r < dim; ++r) {
                        cur[r] += gen.vec[r];
                        mpz_fdiv_r(cur[r].get_mpz_t(), cur[r].get_mpz_t(), ell.get_mpz_t());
                    }
                }
            }
            acc = std::move(next);
        }
        std::sort(acc.begin(), acc.end());
        return acc;
    }
};

inline KernelMod kernel_mod(const IntMatrix& m, unsigned long l) {
    if (l < 2) throw DomainError("kernel_mod: modulus must be >= 2");
    const BigInt ell(static_cast<unsigned long>(l));
    SmithResult snf = smith_normal_form(m);

    KernelMod out;
    out.modulus = l;
    out.dim = m.cols;
    // With D = U M V, solutions are k = V y where d_i * y_i = 0 (mod l);
    // coordinate i contributes gcd(d_i, l) choices y_i = t * l/gcd.
    for (std::size_t i = 0; i < m.cols; ++i) {
        BigInt di = (i < snf.rank) ? snf.d.at(i, i) : BigInt(0);
        BigInt g = gcd(BigInt(di % ell), ell);
        if (g == 0) g = ell; // gcd(0, l)
        out.count *= g;
        if (g == 1) continue;
        BigInt step = ell / g;
        KernelMod::Generator gen;
        gen.order = g;
        gen.vec.resize(m.cols);
        for (std::size_t r = 0; r < m.cols; ++r) {
            BigInt val = snf.v.at(r, i) * step;
            mpz_fdiv_r(val.get_mpz_t(), val.get_mpz_t(), ell.get_mpz_t());
            gen.vec[r] = val;
        }
        out.generators.push_back(std::move(gen));
    }
    return out;
}

} // namespace exalg
