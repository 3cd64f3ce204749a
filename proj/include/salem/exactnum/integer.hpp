// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "salem/error.hpp"

namespace salem {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0)
        throw DomainError("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int isqrt(const Int& n) {
    if (n < 0)
        throw DomainError("isqrt of negative integer");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

/// Exact rational square root, if one exists.
inline std::optional<Rat> rational_sqrt(const Rat& q) {
    if (q < 0)
        return std::nullopt;
    const Int& n = q.get_num();
    const Int& d = q.get_den();
    if (!is_perfect_square(n) || !is_perfect_square(d))
        return std::nullopt;
    return make_rat(isqrt(n), isqrt(d));
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Prime factorization by trial division. Inputs here are desk-sized;
/// `complete` is false when a cofactor above `limit`^2 could not be split.
struct Factorization {
    std::map<Int, unsigned> primes;
    Int cofactor = 1;
    bool complete = true;
};

inline Factorization factor_integer(Int n, unsigned long limit = 2000000) {
    Factorization f;
    if (n < 0)
        n = -n;
    if (n <= 1)
        return f;
    auto take = [&](const Int& p) {
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            n /= p;
            ++f.primes[p];
        }
    };
    take(2);
    take(3);
    for (unsigned long p = 5; p <= limit; p += 6) {
        Int pp = p * p;
        if (pp > n)
            break;
        take(Int(p));
        take(Int(p + 2));
    }
    if (n > 1) {
        Int lim = limit;
        if (n <= lim * lim || mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
            ++f.primes[n];
        } else if (is_perfect_square(n)) {
            f.primes[isqrt(n)] += 2;
        } else {
            f.cofactor = n;
            f.complete = false;
        }
    }
    return f;
}

/// Writes |n| = f^2 * s with s square-free.
struct SquareSplit {
    Int square_root; // f
    Int squarefree;  // s
    bool complete = true;
};

inline SquareSplit split_square(const Int& n) {
    Factorization fz = factor_integer(n);
    SquareSplit out{1, 1, fz.complete};
    for (const auto& [p, e] : fz.primes) {
        for (unsigned i = 0; i < e / 2; ++i)
            out.square_root *= p;
        if (e % 2)
            out.squarefree *= p;
    }
    out.squarefree *= fz.cofactor;
    return out;
}

inline bool is_squarefree(const Int& n) {
    if (n == 0)
        return false;
    return split_square(n).square_root == 1;
}

/// Square-free part of a positive rational: q = f^2 * s, s a square-free integer, f rational.
inline std::pair<Rat, Int> squarefree_part(const Rat& q) {
    if (q <= 0)
        throw DomainError("square-free part of a non-positive rational");
    Int prod = q.get_num() * q.get_den();
    SquareSplit sp = split_square(prod);
    return {make_rat(sp.square_root, q.get_den()), sp.squarefree};
}

inline unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            result -= result / p;
        }
    }
    if (n > 1)
        result -= result / n;
    return result;
}

inline std::string to_string(const Int& z) { return z.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

} // namespace salem
