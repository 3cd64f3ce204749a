// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "salem/forms/gram.hpp"

namespace salem {

using RatMatrix = Matrix<Rat>;

/// x1^2 + x2^2 + 3 x2 x3 + x3^2: I_1 (+) the Gram matrix of x^2 - 3x + 1.
inline RatMatrix sharp_plane_form() {
    Rat h = make_rat(3, 2);
    return RatMatrix{{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), h}, {Rat(0), h, Rat(1)}};
}

/// Gram matrix of x^4 - x^3 - 3x^2 - x + 1.
inline RatMatrix quartic_form() {
    auto h = [](long v) { return make_rat(v, 2); };
    return RatMatrix{{h(4), h(1), h(7), h(13)}, {h(1), h(4), h(1), h(7)}, {h(7), h(1), h(4), h(1)}, {h(13), h(7), h(1), h(4)}};
}

inline Rat evaluate_form(const RatMatrix& a, const std::vector<Int>& x) {
    std::vector<Rat> xr(x.begin(), x.end());
    return evaluate_form<Rat>(a, xr);
}

struct ModZeros {
    long modulus = 0;
    std::size_t count = 0;                    // x mod p^k, not all x_i = 0 mod p, f(x) = 0 mod p^k
    std::optional<std::vector<long>> example;
};

/// Exhaustive count over (Z/p^k)^n. f must be integer valued (integral diagonal, half-integral
/// off-diagonal). count == 0 means every integral zero of f lies in p Z^n, so f is anisotropic over Q.
inline ModZeros primitive_zeros_mod(const RatMatrix& a, long p, unsigned k = 1) {
    const std::size_t n = a.rows();
    long M = 1;
    for (unsigned i = 0; i < k; ++i)
        M *= p;
    // f(x) = sum_i a_ii x_i^2 + sum_{i<j} 2 a_ij x_i x_j
    std::vector<std::vector<long>> coef(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Rat c = i == j ? a(i, i) : Rat(2) * a(i, j);
            if (!is_integer(c))
                throw DomainError("form is not integer valued");
            Int r = c.get_num() % M;
            coef[i][j] = ((r.get_si() % M) + M) % M;
        }
    ModZeros out;
    out.modulus = M;
    std::vector<long> x(n, 0);
    std::function<void(std::size_t, bool)> rec = [&](std::size_t i, bool unit) {
        if (i == n) {
            if (!unit)
                return;
            long s = 0;
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t w = u; w < n; ++w)
                    s = (s + coef[u][w] * x[u] % M * x[w]) % M;
            if (s == 0) {
                ++out.count;
                if (!out.example)
                    out.example = x;
            }
            return;
        }
        for (long v = 0; v < M; ++v) {
            x[i] = v;
            rec(i + 1, unit || v % p != 0);
        }
    };
    rec(0, false);
    return out;
}

/// A primitive integral x != 0 with max |x_i| <= bound and f(x) = 0, of least max norm, if any.
/// The first nonzero coordinate is positive.
inline std::optional<std::vector<Int>> find_isotropic_vector(const RatMatrix& a, long bound) {
    const std::size_t n = a.rows();
    std::vector<std::vector<long>> twice(n, std::vector<long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat c = Rat(2) * a(i, j);
            if (!is_integer(c) || !c.get_num().fits_slong_p())
                throw DomainError("form needs a small half-integral Gram matrix");
            twice[i][j] = c.get_num().get_si();
        }
    std::optional<std::vector<long>> best;
    long best_norm = bound + 1;
    std::vector<long> x(n, -bound);
    while (true) {
        std::size_t first = 0;
        while (first < n && x[first] == 0)
            ++first;
        if (first < n && x[first] > 0) {
            long mx = 0;
            for (long v : x)
                mx = std::max(mx, std::labs(v));
            if (mx < best_norm) {
                __int128 s = 0;
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        s += static_cast<__int128>(twice[i][j]) * x[i] * x[j];
                if (s == 0) {
                    Int g = 0;
                    for (long v : x)
                        g = gcd(g, Int(v));
                    if (g == 1) {
                        best = x;
                        best_norm = mx;
                    }
                }
            }
        }
        std::size_t k = 0;
        while (k < n && x[k] == bound) {
            x[k] = -bound;
            ++k;
        }
        if (k == n)
            break;
        ++x[k];
    }
    if (!best)
        return std::nullopt;
    return std::vector<Int>(best->begin(), best->end());
}

} // namespace salem
