// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "salem/exactnum/ball.hpp"
#include "salem/poly/poly.hpp"

namespace salem {

/// Coefficient balls (ascending) of a polynomial at a requested working precision.
using CoeffBallFn = std::function<std::vector<ComplexBall>(long prec)>;

struct IsolationOptions {
    /// Every certified disk has radius <= 2^-target_bits.
    long target_bits = 60;
    PrecisionPolicy policy = default_precision();
};

/// Pairwise disjoint disks, each holding exactly one root of the polynomial.
struct RootSet {
    std::vector<ComplexBall> roots;
    long prec = 0;

    std::size_t size() const { return roots.size(); }

    /// Index of the unique disk meeting `image`, or -1 when that is not unique.
    long unique_overlap(const ComplexBall& image) const {
        long hit = -1;
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (roots[j].overlaps(image)) {
                if (hit >= 0)
                    return -1;
                hit = static_cast<long>(j);
            }
        }
        return hit;
    }
    /// Real-coefficient input only: the root is real when its conjugate can only be itself.
    bool certified_real(std::size_t i) const { return unique_overlap(roots[i].conj()) == static_cast<long>(i); }
    /// Reciprocal-closed real input only: |root| == 1 when 1/conj(root) can only be itself.
    bool certified_on_unit_circle(std::size_t i) const {
        const ComplexBall& z = roots[i];
        if (z.contains_zero())
            return false;
        try {
            return unique_overlap(z.inverse_conj()) == static_cast<long>(i);
        } catch (const DomainError&) {
            return false;
        }
    }
    /// Real part enclosure; for a certified real root this encloses the root itself.
    RealBall real_ball(std::size_t i) const { return roots[i].real(); }
};

namespace detail {

/// Unchecked complex dyadic used only to steer the iteration; certification redoes the math in balls.
struct CD {
    Dyadic re, im;

    static CD add(const CD& a, const CD& b, long p) {
        return {(a.re + b.re).rounded(p, Dyadic::Round::Zero), (a.im + b.im).rounded(p, Dyadic::Round::Zero)};
    }
    static CD sub(const CD& a, const CD& b, long p) {
        return {(a.re - b.re).rounded(p, Dyadic::Round::Zero), (a.im - b.im).rounded(p, Dyadic::Round::Zero)};
    }
    static CD mul(const CD& a, const CD& b, long p) {
        return {(a.re * b.re - a.im * b.im).rounded(p, Dyadic::Round::Zero),
                (a.re * b.im + a.im * b.re).rounded(p, Dyadic::Round::Zero)};
    }
    static CD div(const CD& a, const CD& b, long p) {
        Dyadic n2 = (b.re * b.re + b.im * b.im).rounded(p + 4, Dyadic::Round::Zero);
        if (n2.is_zero())
            throw DomainError("division by zero in iteration");
        Dyadic e;
        Dyadic r = Dyadic::div((a.re * b.re + a.im * b.im).rounded(p + 4, Dyadic::Round::Zero), n2, p, e);
        Dyadic i = Dyadic::div((a.im * b.re - a.re * b.im).rounded(p + 4, Dyadic::Round::Zero), n2, p, e);
        return {r, i};
    }
    long magnitude() const { return std::max(re.magnitude(), im.magnitude()); }
};

inline std::vector<std::complex<double>> aberth_double(const std::vector<std::complex<double>>& a) {
    const std::size_t n = a.size() - 1;
    std::vector<std::complex<double>> z(n);
    double r = 0;
    for (std::size_t i = 0; i < n; ++i)
        r = std::max(r, std::pow(std::abs(a[i] / a[n]), 1.0 / static_cast<double>(n - i)));
    r = std::max(r, 1e-3);
    for (std::size_t k = 0; k < n; ++k) {
        double th = 2 * M_PI * static_cast<double>(k) / static_cast<double>(n) + 0.4;
        z[k] = std::polar(r, th);
    }
    for (int it = 0; it < 600; ++it) {
        double worst = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::complex<double> p = a[n], dp = 0;
            for (std::size_t k = n; k-- > 0;) {
                dp = dp * z[i] + p;
                p = p * z[i] + a[k];
            }
            if (p == 0.0)
                continue;
            std::complex<double> ratio = p / dp, s = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i)
                    s += 1.0 / (z[i] - z[j]);
            std::complex<double> w = ratio / (1.0 - ratio * s);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
                continue;
            z[i] -= w;
            worst = std::max(worst, std::abs(w) / std::max(1.0, std::abs(z[i])));
        }
        if (worst < 1e-15)
            break;
    }
    return z;
}

/// One Aberth sweep in multiprecision; returns max relative correction magnitude (log2).
inline long aberth_sweep(const std::vector<CD>& a, std::vector<CD>& z, long prec) {
    const std::size_t n = a.size() - 1;
    long worst = -(1L << 40);
    for (std::size_t i = 0; i < n; ++i) {
        CD p = a[n], dp{Dyadic(), Dyadic()};
        for (std::size_t k = n; k-- > 0;) {
            dp = CD::add(CD::mul(dp, z[i], prec), p, prec);
            p = CD::add(CD::mul(p, z[i], prec), a[k], prec);
        }
        if (p.re.is_zero() && p.im.is_zero())
            continue;
        if (dp.re.is_zero() && dp.im.is_zero())
            dp = CD{Dyadic(Int(1), -prec), Dyadic()};
        CD ratio = CD::div(p, dp, prec);
        CD s{Dyadic(), Dyadic()};
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i)
                continue;
            CD diff = CD::sub(z[i], z[j], prec);
            if (diff.re.is_zero() && diff.im.is_zero())
                diff = CD{Dyadic(Int(1), -prec / 2), Dyadic(Int(1), -prec / 2)};
            s = CD::add(s, CD::div(CD{Dyadic(1), Dyadic()}, diff, prec), prec);
        }
        CD den = CD::sub(CD{Dyadic(1), Dyadic()}, CD::mul(ratio, s, prec), prec);
        if (den.re.is_zero() && den.im.is_zero())
            continue;
        CD w = CD::div(ratio, den, prec);
        z[i] = CD::sub(z[i], w, prec);
        long rel = w.magnitude() - std::max(0L, z[i].magnitude());
        worst = std::max(worst, rel);
    }
    return worst;
}

} // namespace detail

/// Certified isolation of all roots of a polynomial given by coefficient balls.
/// The polynomial must be square-free; the leading coefficient ball must exclude zero.
inline RootSet isolate_roots(const CoeffBallFn& coeffs, const IsolationOptions& opt = {}) {
    long prec = std::max(opt.policy.start_bits, opt.target_bits + 32);
    std::vector<ComplexBall> a = coeffs(prec);
    if (a.size() < 2)
        return RootSet{{}, prec};
    const std::size_t n = a.size() - 1;
    if (a[n].contains_zero())
        throw DomainError("leading coefficient ball contains zero");

    std::vector<std::complex<double>> ad(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        ad[i] = {a[i].re.to_double(), a[i].im.to_double()};
    std::vector<std::complex<double>> z0 = detail::aberth_double(ad);
    std::vector<detail::CD> z(n);
    for (std::size_t i = 0; i < n; ++i) {
        double re = std::isfinite(z0[i].real()) ? z0[i].real() : 0.5;
        double im = std::isfinite(z0[i].imag()) ? z0[i].imag() : 0.25 * static_cast<double>(i + 1);
        z[i] = {Dyadic::from_double(re), Dyadic::from_double(im)};
    }

    while (true) {
        if (prec > opt.policy.cap_bits)
            throw PrecisionExhausted("root isolation did not certify below " + std::to_string(opt.policy.cap_bits) + " bits");
        a = coeffs(prec);
        std::vector<detail::CD> ac(n + 1);
        for (std::size_t i = 0; i <= n; ++i)
            ac[i] = {a[i].re, a[i].im};
        for (int it = 0; it < 80; ++it) {
            long worst = detail::aberth_sweep(ac, z, prec);
            if (worst < -(prec - 8))
                break;
        }

        // Gerschgorin certificate on diag(z) - w 1^T.
        RootSet out{std::vector<ComplexBall>(n), prec};
        bool ok = true;
        Dyadic target(Int(1), -opt.target_bits);
        for (std::size_t i = 0; i < n && ok; ++i) {
            ComplexBall zi = ComplexBall::exact(z[i].re, z[i].im, prec);
            ComplexBall p = a[n];
            for (std::size_t k = n; k-- > 0;)
                p = p * zi + a[k];
            ComplexBall den = a[n];
            for (std::size_t j = 0; j < n; ++j)
                if (j != i)
                    den = den * (zi - ComplexBall::exact(z[j].re, z[j].im, prec));
            Dyadic lo = den.abs_lower();
            if (lo.sign() <= 0) {
                ok = false;
                break;
            }
            Dyadic err;
            Dyadic w = Dyadic::div(p.abs_upper(), lo, 40, err);
            Dyadic r = ((w + err) * Dyadic(static_cast<long>(n))).upper();
            if (r > target) {
                ok = false;
                break;
            }
            out.roots[i] = ComplexBall(z[i].re, z[i].im, r, prec);
        }
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = i + 1; j < n && ok; ++j)
                if (!out.roots[i].disjoint(out.roots[j]))
                    ok = false;
        if (ok)
            return out;
        prec *= 2;
    }
}

/// Coefficient balls of an exact polynomial under the identity (or conjugate) embedding.
template <class T>
CoeffBallFn coefficient_balls(const Poly<T>& p, bool conjugate = false) {
    return [p, conjugate](long prec) {
        std::vector<ComplexBall> out;
        for (const auto& c : p.coeffs())
            out.emplace_back(elem::to_ball(c, prec + 16, conjugate).with_prec(prec));
        return out;
    };
}

/// Roots of an exact square-free polynomial.
template <class T>
RootSet isolate_roots(const Poly<T>& p, const IsolationOptions& opt = {}, bool conjugate = false) {
    if (p.degree() < 1)
        return RootSet{};
    if (!is_squarefree(p))
        throw DomainError("root isolation needs a square-free polynomial");
    return isolate_roots(coefficient_balls(p, conjugate), opt);
}

/// Enclosures of the coefficients of prod (x - r) over the chosen roots.
inline std::vector<ComplexBall> product_coefficients(const std::vector<ComplexBall>& roots, long prec) {
    std::vector<ComplexBall> c{ComplexBall::exact(Dyadic(1), Dyadic(), prec)};
    for (const auto& r : roots) {
        std::vector<ComplexBall> next(c.size() + 1, ComplexBall::exact(Dyadic(), Dyadic(), prec));
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] = next[i + 1] + c[i];
            next[i] = next[i] - c[i] * r;
        }
        c = std::move(next);
    }
    return c;
}

/// Nearest integer when the ball certainly holds at most one integer and contains it.
/// nullopt + `ambiguous=false` means no integer is inside.
inline std::optional<Int> round_to_integer(const ComplexBall& b, bool& ambiguous) {
    ambiguous = false;
    if (!b.meets_real_axis())
        return std::nullopt;
    Dyadic half(Int(1), -1);
    if (b.rad >= Dyadic(Int(1), -2)) {
        ambiguous = true;
        return std::nullopt;
    }
    Rat m = b.re.to_rat();
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), m.get_num_mpz_t(), m.get_den_mpz_t());
    Int nearest = (m - Rat(f) >= Rat(1, 2)) ? Int(f + 1) : f;
    if (b.contains(Dyadic(nearest, 0), Dyadic()))
        return nearest;
    return std::nullopt;
}

inline std::optional<Int> round_to_integer(const RealBall& b, bool& ambiguous) {
    return round_to_integer(ComplexBall(b), ambiguous);
}

} // namespace salem
