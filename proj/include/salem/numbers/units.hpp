// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "salem/exactnum/quadext.hpp"

namespace salem {

/// Generator omega of o_K = Z[omega] for K = Q(sqrt d).
inline QuadExt integral_basis_omega(long d) {
    if (d % 4 == 1)
        return QuadExt(Rat(1, 2), Rat(1, 2), d);
    return QuadExt::sqrt_d(d);
}

/// Fundamental unit eps > 1 of o_K, from the continued fraction of omega.
/// Convergents h/k of omega are tested until h - k*omega has norm +-1.
inline QuadExt fundamental_unit(long d) {
    if (d < 2 || !is_squarefree(Int(d)))
        throw DomainError("fundamental_unit needs a square-free d >= 2");
    // omega = (P + sqrt(D)) / Q with Q | D - P^2
    Int D = d, P, Q;
    if (d % 4 == 1) {
        P = 1;
        Q = 2;
    } else {
        P = 0;
        Q = 1;
    }
    QuadExt omega = integral_basis_omega(d);
    Int sqrtD = isqrt(D);
    // h_n = a_n h_{n-1} + h_{n-2}
    Int hm2 = 0, hm1 = 1, km2 = 1, km1 = 0;
    for (int iter = 0; iter < 100000; ++iter) {
        Int a;
        {
            Int num = P + sqrtD;
            mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), Q.get_mpz_t());
        }
        Int hn = a * hm1 + hm2;
        Int kn = a * km1 + km2;
        QuadExt u = QuadExt(Rat(hn)).in_field(d) - QuadExt(Rat(kn)).in_field(d) * omega;
        Rat n = u.norm();
        if ((n == 1 || n == -1) && !(u == QuadExt(1).in_field(d)) && !(u == QuadExt(-1).in_field(d))) {
            if (u.sign() < 0)
                u = -u;
            if (u < QuadExt(1).in_field(d))
                u = u.inverse();
            return u;
        }
        hm2 = hm1;
        hm1 = hn;
        km2 = km1;
        km1 = kn;
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
    throw PrecisionExhausted("continued fraction period not found");
}

} // namespace salem
