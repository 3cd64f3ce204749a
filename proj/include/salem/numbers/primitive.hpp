// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <functional>
#include <optional>

#include "salem/numbers/classify.hpp"
#include "salem/numbers/units.hpp"

namespace salem {

struct PrimitiveResult {
    SalemCertificate primitive;
    unsigned exponent = 1;
    /// False when the degree exceeds the range where 1.17 bounds every Salem number from below
    /// and the caller-supplied k_max was used instead.
    bool proven = true;
    unsigned k_max = 0;
};

/// ceil(log lambda / log 1.17); every Salem number of degree <= 44 exceeds 1.17.
inline unsigned default_k_max(const SalemCertificate& c) {
    double l = c.log_lambda.to_double() + c.log_lambda.rad.to_double();
    return static_cast<unsigned>(std::ceil(l / std::log(1.17)));
}

namespace detail {

/// Minimal polynomial of a degree-2 Salem number's primitive root via the fundamental unit.
inline PrimitiveResult primitive_quadratic(const SalemCertificate& c, const PrecisionPolicy& policy) {
    // lambda = (t + sqrt(t^2 - 4)) / 2 with p = x^2 - t x + 1
    Int t = -c.poly.coeff(1);
    Int disc = t * t - 4;
    SquareSplit sp = split_square(disc);
    long d = sp.squarefree.get_si();
    QuadExt eps = fundamental_unit(d);
    QuadExt l1 = eps.norm() == 1 ? eps : eps * eps;
    QuadExt lam(Rat(t, 2), Rat(sp.square_root, 2), d);
    unsigned k = 1;
    QuadExt pw = l1;
    while (pw < lam) {
        pw = pw * l1;
        ++k;
    }
    if (!(pw == lam))
        throw DomainError("quadratic Salem number is not a power of the norm-1 unit");
    Int tr = elem::to_int(Rat(l1.trace()));
    PrimitiveResult r;
    r.primitive = classify_salem(IntPoly{Int(1), Int(-tr), Int(1)}, policy);
    r.exponent = k;
    return r;
}

/// Searches a Salem mu of the same degree with mu^k = lambda: mu is the real k-th root of
/// lambda, 1/mu its inverse, and each unit-circle pair picks one of k roots (conjugates forced).
inline std::optional<IntPoly> kth_root_polynomial(const SalemCertificate& c, unsigned k) {
    const RootSet& rs = c.roots;
    const long prec = rs.prec;
    // real k-th roots of lambda and 1/lambda via log/exp-free bisection on balls
    auto real_root = [&](const RealBall& x) {
        // Newton on y^k = x at the center, then enclose with the mean value bound.
        double guess = std::pow(x.to_double(), 1.0 / k);
        Dyadic y = Dyadic::from_double(guess);
        for (int it = 0; it < 200; ++it) {
            RealBall yb = RealBall::exact(y, prec);
            RealBall yk = yb;
            for (unsigned i = 1; i < k; ++i)
                yk = yk * yb;
            RealBall ykm1 = RealBall::exact(Dyadic(1), prec);
            for (unsigned i = 1; i < k; ++i)
                ykm1 = ykm1 * yb;
            RealBall step = (yk - RealBall::exact(x.mid, prec)) / (ykm1 * RealBall::exact(Dyadic(static_cast<long>(k)), prec));
            Dyadic ny = (y - step.mid).rounded(prec, Dyadic::Round::Zero);
            if ((ny - y).abs() < Dyadic(Int(1), -(prec - 8))) {
                y = ny;
                break;
            }
            y = ny;
        }
        // |y - x^(1/k)| <= |y^k - x| / (k * min(y, root)^(k-1)); use y/2 as a safe lower bound
        RealBall yb = RealBall::exact(y, prec);
        RealBall yk = yb;
        for (unsigned i = 1; i < k; ++i)
            yk = yk * yb;
        RealBall resid = yk - x;
        Dyadic bound = resid.mid.abs() + resid.rad;
        RealBall low = RealBall::exact(y.mul_2exp(-1), prec);
        RealBall lowk = RealBall::exact(Dyadic(static_cast<long>(k)), prec);
        for (unsigned i = 1; i < k; ++i)
            lowk = lowk * low;
        RealBall e = RealBall::exact(bound, prec) / lowk;
        return RealBall(y, e.mid.abs() + e.rad, prec);
    };

    std::vector<std::size_t> pair_first;
    std::vector<std::size_t> pair_second;
    std::vector<bool> used(rs.size(), false);
    used[c.lambda_index] = used[c.inverse_index] = true;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (used[i])
            continue;
        long j = rs.unique_overlap(rs.roots[i].conj());
        if (j < 0 || static_cast<std::size_t>(j) == i)
            throw PrecisionExhausted("unit-circle roots did not pair up");
        used[i] = used[static_cast<std::size_t>(j)] = true;
        pair_first.push_back(i);
        pair_second.push_back(static_cast<std::size_t>(j));
    }

    ComplexBall mu(real_root(c.lambda));
    ComplexBall mu_inv(real_root(c.roots.real_ball(c.inverse_index)));

    // k-th roots of each unit-circle root: z^(1/k) * zeta_k^j, built from a double seed and
    // certified by one ball Newton step per candidate root.
    auto kth_roots = [&](const ComplexBall& z) {
        std::vector<ComplexBall> out;
        std::complex<double> zd(z.re.to_double(), z.im.to_double());
        for (unsigned j = 0; j < k; ++j) {
            std::complex<double> w = std::polar(std::pow(std::abs(zd), 1.0 / k), (std::arg(zd) + 2 * M_PI * j) / k);
            // refine w^k = z in multiprecision via Newton on centers
            detail::CD wc{Dyadic::from_double(w.real()), Dyadic::from_double(w.imag())};
            detail::CD zc{z.re, z.im};
            for (int it = 0; it < 60; ++it) {
                detail::CD wk = wc, wkm1{Dyadic(1), Dyadic()};
                for (unsigned i = 1; i < k; ++i) {
                    wk = detail::CD::mul(wk, wc, prec);
                    wkm1 = detail::CD::mul(wkm1, wc, prec);
                }
                detail::CD f = detail::CD::sub(wk, zc, prec);
                detail::CD df = detail::CD::mul(wkm1, detail::CD{Dyadic(static_cast<long>(k)), Dyadic()}, prec);
                detail::CD stp = detail::CD::div(f, df, prec);
                wc = detail::CD::sub(wc, stp, prec);
                if (stp.magnitude() < -(prec - 8))
                    break;
            }
            // enclosure: |w - root| <= |w^k - z_true| / (k * (|w|/2)^(k-1)) for roots near w on the unit circle
            ComplexBall wb = ComplexBall::exact(wc.re, wc.im, prec);
            ComplexBall wk = wb;
            for (unsigned i = 1; i < k; ++i)
                wk = wk * wb;
            ComplexBall resid = wk - z;
            Dyadic num = resid.abs_upper();
            Dyadic low = wb.abs_lower().mul_2exp(-1);
            Dyadic den(static_cast<long>(k));
            for (unsigned i = 1; i < k; ++i)
                den = (den * low).rounded(40, Dyadic::Round::Down);
            Dyadic err;
            Dyadic r = Dyadic::div(num, den, 40, err);
            out.emplace_back(wc.re, wc.im, r + err, prec);
        }
        return out;
    };

    std::vector<std::vector<ComplexBall>> choices;
    for (std::size_t i = 0; i < pair_first.size(); ++i)
        choices.push_back(kth_roots(rs.roots[pair_first[i]]));

    const std::size_t npairs = pair_first.size();
    std::vector<unsigned> pick(npairs, 0);
    std::optional<IntPoly> found;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (found)
            return;
        if (idx == npairs) {
            std::vector<ComplexBall> roots{mu, mu_inv};
            ComplexBall tr = mu + mu_inv;
            for (std::size_t i = 0; i < npairs; ++i) {
                const ComplexBall& w = choices[i][pick[i]];
                roots.push_back(w);
                roots.push_back(w.conj());
                tr = tr + w + w.conj();
            }
            bool amb = false;
            if (!round_to_integer(tr, amb) && !amb)
                return;
            auto coeffs = product_coefficients(roots, prec);
            std::vector<Int> ic;
            for (const auto& b : coeffs) {
                auto v = round_to_integer(b, amb);
                if (!v)
                    return;
                ic.push_back(*v);
            }
            IntPoly cand(ic);
            if (!cand.is_palindromic())
                return;
            found = cand;
            return;
        }
        for (unsigned j = 0; j < k && !found; ++j) {
            pick[idx] = j;
            rec(idx + 1);
        }
    };
    rec(0);
    return found;
}

} // namespace detail

/// Primitive Salem number lambda_1 with lambda = lambda_1^exponent. Searches k from k_max down
/// to 2 so that the first hit is already primitive. k_max = 0 picks the default bound.
inline PrimitiveResult primitive_salem(const SalemCertificate& c, unsigned k_max = 0, const PrecisionPolicy& policy = default_precision()) {
    if (!c.is_salem())
        throw DomainError("primitive_salem needs a Salem certificate");
    if (c.degree() == 2)
        return detail::primitive_quadratic(c, policy);
    PrimitiveResult r;
    r.proven = c.degree() <= 44 || k_max >= default_k_max(c);
    if (k_max == 0) {
        if (c.degree() > 44)
            throw DomainError("degree > 44: pass an explicit k_max");
        k_max = default_k_max(c);
    }
    r.k_max = k_max;
    for (unsigned k = k_max; k >= 2; --k) {
        auto cand = detail::kth_root_polynomial(c, k);
        if (!cand)
            continue;
        SalemCertificate mc = classify_salem(*cand, policy);
        if (!mc.is_salem())
            continue;
        if (power_polynomial(mc, k) != c.poly)
            continue;
        r.primitive = mc;
        r.exponent = k;
        return r;
    }
    r.primitive = c;
    r.exponent = 1;
    return r;
}

/// lambda ~ mu iff they share a primitive Salem number.
inline bool commensurable(const SalemCertificate& a, const SalemCertificate& b, unsigned k_max = 0) {
    if (a.degree() != b.degree())
        return false;
    return primitive_salem(a, k_max).primitive.poly == primitive_salem(b, k_max).primitive.poly;
}

} // namespace salem
