// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

#include "salem/numbers/units.hpp"

namespace salem {

/// alpha = f^2 * reduced, with `reduced` the chosen square-class representative.
struct SquareClass {
    QuadExt reduced;
    QuadExt factor; // f
    /// False when the norm exceeded the search bound and no reduction was attempted.
    bool searched = true;
};

struct SquareClassOptions {
    /// Largest |N(alpha)| for which the divisor search runs.
    Int norm_bound = 1000000;
    /// |y| range scanned for elements x + y*omega of a given norm.
    long coordinate_bound = 2000;
};

namespace detail {

/// Elements t of o_K with N(t) = +-n, found by scanning the omega-coordinate.
inline std::vector<QuadExt> elements_of_norm(long d, const Int& n, long ybound) {
    std::vector<QuadExt> out;
    QuadExt omega = integral_basis_omega(d);
    bool half = d % 4 == 1;
    // t = x + y omega; N(t) = x^2 + xy*tr + y^2 N(omega) with tr = 1 (half) or 0
    for (long y = 0; y <= ybound; ++y) {
        for (int s : {1, -1}) {
            // solve x^2 + tr*y*x + y^2*N(omega) - s*n = 0
            Rat nw = omega.norm();
            Int tr = half ? 1 : 0;
            Int B = tr * y;
            Rat C = Rat(y) * Rat(y) * nw - Rat(s * n);
            Rat disc = Rat(B * B) - 4 * C;
            if (disc < 0 || !is_integer(disc))
                continue;
            Int dz = disc.get_num();
            if (!is_perfect_square(dz))
                continue;
            Int r = isqrt(dz);
            for (int sg : {1, -1}) {
                Int num = -B + sg * r;
                if (num % 2 != 0)
                    continue;
                Int x = num / 2;
                QuadExt t = QuadExt(Rat(x)).in_field(d) + QuadExt(Rat(y)).in_field(d) * omega;
                if (!t.is_zero())
                    out.push_back(t);
            }
        }
    }
    return out;
}

} // namespace detail

/// Square-class normalization of a totally positive alpha in Q (d = 0) or Q(sqrt d).
/// Over Q: the square-free integer. Over K: strip square divisors found by a bounded norm search,
/// then multiply by even powers of the fundamental unit to balance the two embeddings.
inline SquareClass reduce_square_class(const QuadExt& alpha, long d, const SquareClassOptions& opt = {}) {
    if (!alpha.is_totally_positive())
        throw DomainError("square class of a non totally positive element");
    if (d == 0 || (alpha.is_rational() && d == 0)) {
        auto [f, s] = squarefree_part(alpha.a());
        return {QuadExt(Rat(s)), QuadExt(f), true};
    }
    QuadExt a = alpha.in_field(d);
    QuadExt f = QuadExt(1).in_field(d);
    // clear denominators: alpha = (1/den^2) * (den^2 alpha)
    Int den = a.denominator_in_ok();
    if (den != 1) {
        a = a * QuadExt(Rat(den * den)).in_field(d);
        f = f / QuadExt(Rat(den)).in_field(d);
    }
    SquareClass out{a, f, true};
    Rat nr = a.norm();
    Int N = abs(nr.get_num());
    if (N > opt.norm_bound) {
        out.searched = false;
    } else {
        bool changed = true;
        while (changed) {
            changed = false;
            Int Ncur = abs(Rat(out.reduced.norm()).get_num());
            for (Int n = isqrt(Ncur); n >= 2 && !changed; --n) {
                if (Ncur % (n * n) != 0)
                    continue;
                for (const auto& t : detail::elements_of_norm(d, n, opt.coordinate_bound)) {
                    QuadExt q = out.reduced / (t * t);
                    if (q.is_integral()) {
                        out.reduced = q;
                        out.factor = out.factor * t;
                        changed = true;
                        break;
                    }
                }
            }
        }
    }
    // balance: minimise max(alpha, sigma alpha) over alpha * eps^(2k)
    QuadExt e2 = fundamental_unit(d);
    e2 = e2 * e2;
    auto size = [](const QuadExt& x) { return std::max(x.to_double(), x.conj().to_double()); };
    for (int guard = 0; guard < 200; ++guard) {
        QuadExt up = out.reduced * e2, down = out.reduced / e2;
        if (size(up) < size(out.reduced)) {
            out.reduced = up;
            out.factor = out.factor / fundamental_unit(d);
        } else if (size(down) < size(out.reduced)) {
            out.reduced = down;
            out.factor = out.factor * fundamental_unit(d);
        } else {
            break;
        }
    }
    return out;
}

} // namespace salem
