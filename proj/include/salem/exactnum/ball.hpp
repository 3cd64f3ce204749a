// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>

#include "salem/exactnum/dyadic.hpp"

namespace salem {

/// Working precision schedule for every certified numeric routine.
struct PrecisionPolicy {
    long start_bits = 128;
    long cap_bits = 8192;

    /// Cap taken from SALEM_PRECISION_CAP_BITS when set.
    static PrecisionPolicy from_env() {
        PrecisionPolicy p;
        if (const char* s = std::getenv("SALEM_PRECISION_CAP_BITS")) {
            char* end = nullptr;
            long v = std::strtol(s, &end, 10);
            if (end != s && v >= 64)
                p.cap_bits = v;
        }
        return p;
    }
};

inline const PrecisionPolicy& default_precision() {
    static const PrecisionPolicy p = PrecisionPolicy::from_env();
    return p;
}

/// Closed interval [mid - rad, mid + rad]; rad >= 0 always.
struct RealBall {
    Dyadic mid;
    Dyadic rad;
    long prec = 128;

    RealBall() = default;
    RealBall(Dyadic m, Dyadic r, long p) : mid(std::move(m)), rad(r.upper()), prec(p) {}

    static RealBall exact(const Dyadic& v, long p) { return RealBall(v, Dyadic(), p); }
    static RealBall from_rat(const Rat& q, long p) {
        Dyadic err;
        Dyadic m = Dyadic::from_rat(q, p, err);
        return RealBall(m, err, p);
    }

    Dyadic lower() const { return mid - rad; }
    Dyadic upper() const { return mid + rad; }
    bool contains(const Dyadic& x) const { return (x - mid).abs() <= rad; }
    bool contains(const Rat& x) const {
        Rat d = x - mid.to_rat();
        if (d < 0)
            d = -d;
        return d <= rad.to_rat();
    }
    bool contains_zero() const { return mid.abs() <= rad; }
    bool positive() const { return lower().sign() > 0; }
    bool negative() const { return upper().sign() < 0; }
    bool overlaps(const RealBall& o) const { return (mid - o.mid).abs() <= rad + o.rad; }
    /// True when *this lies inside o.
    bool subset_of(const RealBall& o) const { return (mid - o.mid).abs() + rad <= o.rad; }
    double to_double() const { return mid.to_double(); }

    RealBall operator-() const { return RealBall(-mid, rad, prec); }
    friend RealBall operator+(const RealBall& a, const RealBall& b) {
        long p = std::max(a.prec, b.prec);
        Dyadic err;
        Dyadic m = (a.mid + b.mid).rounded(p, err);
        return RealBall(m, a.rad + b.rad + err, p);
    }
    friend RealBall operator-(const RealBall& a, const RealBall& b) { return a + (-b); }
    friend RealBall operator*(const RealBall& a, const RealBall& b) {
        long p = std::max(a.prec, b.prec);
        Dyadic err;
        Dyadic m = (a.mid * b.mid).rounded(p, err);
        Dyadic r = a.mid.abs() * b.rad + b.mid.abs() * a.rad + a.rad * b.rad + err;
        return RealBall(m, r, p);
    }
    friend RealBall operator/(const RealBall& a, const RealBall& b) { return a * b.inverse(); }

    RealBall inverse() const {
        Dyadic lo = mid.abs() - rad;
        if (lo.sign() <= 0)
            throw DomainError("ball inverse: ball contains zero");
        Dyadic err;
        Dyadic m = Dyadic::div(Dyadic(1), mid, prec, err);
        // |1/x - 1/mid| <= rad / (|mid| * lo)
        Dyadic e2;
        Dyadic bound = Dyadic::div(rad, (mid.abs() * lo).rounded(40, Dyadic::Round::Down), 40, e2);
        return RealBall(m, bound + e2 + err, prec);
    }

    RealBall sqrt() const {
        Dyadic lo = lower();
        if (lo.sign() < 0)
            throw DomainError("ball sqrt: ball meets negative reals");
        Dyadic err;
        Dyadic m = Dyadic::sqrt(mid, prec, err);
        // sqrt is 1/(2 sqrt(lo))-Lipschitz on [lo, hi]; fall back to sqrt(rad) near 0.
        Dyadic r;
        if (lo.sign() > 0) {
            Dyadic e2, e3;
            Dyadic sl = Dyadic::sqrt(lo.rounded(40, Dyadic::Round::Down), 40, e2);
            sl = sl - e2;
            if (sl.sign() > 0) {
                r = Dyadic::div(rad, sl.mul_2exp(1).rounded(40, Dyadic::Round::Down), 40, e3) + e3;
            } else {
                Dyadic e4;
                r = Dyadic::sqrt(rad.upper(), 40, e4) + e4;
            }
        } else {
            Dyadic e4;
            r = Dyadic::sqrt((rad + rad).upper(), 40, e4) + e4;
        }
        return RealBall(m, r + err, prec);
    }

    RealBall with_prec(long p) const { return RealBall(mid, rad, p); }
    std::string to_string() const { return "[" + std::to_string(mid.to_double()) + " +/- " + std::to_string(rad.to_double()) + "]"; }
};

namespace detail {

struct MpfrValue {
    mpfr_t v;
    explicit MpfrValue(long prec) { mpfr_init2(v, static_cast<mpfr_prec_t>(prec)); }
    ~MpfrValue() { mpfr_clear(v); }
    MpfrValue(const MpfrValue&) = delete;
    MpfrValue& operator=(const MpfrValue&) = delete;
};

inline void set_exact(MpfrValue& out, const Dyadic& d) {
    mpfr_set_z_2exp(out.v, d.man().get_mpz_t(), d.exp(), MPFR_RNDN);
}

inline Dyadic get_exact(const MpfrValue& in) {
    if (mpfr_zero_p(in.v))
        return Dyadic();
    Int m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), in.v);
    return Dyadic(m, static_cast<long>(e));
}

} // namespace detail

/// Enclosure of log(x) for a ball of positive reals, via directed rounding at both endpoints.
inline RealBall log(const RealBall& x) {
    Dyadic lo = x.lower(), hi = x.upper();
    if (lo.sign() <= 0)
        throw DomainError("log of a ball that is not strictly positive");
    long wp = std::max({x.prec, lo.bits(), hi.bits()}) + 8;
    detail::MpfrValue a(wp), b(wp), la(x.prec + 8), lb(x.prec + 8);
    detail::set_exact(a, lo);
    detail::set_exact(b, hi);
    mpfr_log(la.v, a.v, MPFR_RNDD);
    mpfr_log(lb.v, b.v, MPFR_RNDU);
    Dyadic L = detail::get_exact(la), H = detail::get_exact(lb);
    Dyadic mid = (L + H).mul_2exp(-1);
    Dyadic err;
    Dyadic m = mid.rounded(x.prec, err);
    return RealBall(m, (H - L).mul_2exp(-1) + err, x.prec);
}

/// Decimal string with `digits` significant digits, returned only when both ball endpoints
/// round to the same string.
inline std::optional<std::string> certified_decimal(const RealBall& x, int digits) {
    auto render = [&](const Dyadic& d) -> std::string {
        long wp = std::max<long>(d.bits(), 64) + 8;
        detail::MpfrValue v(wp);
        detail::set_exact(v, d);
        if (mpfr_zero_p(v.v))
            return "0";
        mpfr_exp_t e10 = 0;
        char* s = mpfr_get_str(nullptr, &e10, 10, static_cast<size_t>(digits), v.v, MPFR_RNDN);
        std::string raw(s);
        mpfr_free_str(s);
        bool neg = !raw.empty() && raw[0] == '-';
        if (neg)
            raw.erase(0, 1);
        std::string out;
        long e = static_cast<long>(e10);
        if (e <= 0) {
            out = "0." + std::string(static_cast<size_t>(-e), '0') + raw;
        } else if (e >= static_cast<long>(raw.size())) {
            out = raw + std::string(static_cast<size_t>(e - static_cast<long>(raw.size())), '0');
        } else {
            out = raw.substr(0, static_cast<size_t>(e)) + "." + raw.substr(static_cast<size_t>(e));
        }
        return neg ? "-" + out : out;
    };
    std::string a = render(x.lower()), b = render(x.upper());
    if (a != b)
        return std::nullopt;
    return a;
}

/// Closed disk {z : |z - (re + i im)| <= rad}.
struct ComplexBall {
    Dyadic re;
    Dyadic im;
    Dyadic rad;
    long prec = 128;

    ComplexBall() = default;
    ComplexBall(Dyadic r, Dyadic i, Dyadic radius, long p) : re(std::move(r)), im(std::move(i)), rad(radius.upper()), prec(p) {}
    explicit ComplexBall(const RealBall& x) : ComplexBall(x.mid, Dyadic(), x.rad, x.prec) {}

    static ComplexBall exact(const Dyadic& r, const Dyadic& i, long p) { return ComplexBall(r, i, Dyadic(), p); }

    RealBall real() const { return RealBall(re, rad, prec); }
    RealBall imag() const { return RealBall(im, rad, prec); }
    ComplexBall conj() const { return ComplexBall(re, -im, rad, prec); }
    ComplexBall operator-() const { return ComplexBall(-re, -im, rad, prec); }

    /// Upper bound of |re + i im| (center modulus only).
    Dyadic center_abs_upper() const {
        Dyadic n2 = re * re + im * im, err;
        Dyadic s = Dyadic::sqrt(n2.rounded(60, Dyadic::Round::Up), 50, err);
        return (s + err).upper();
    }
    Dyadic center_abs_lower() const {
        Dyadic n2 = re * re + im * im, err;
        Dyadic s = Dyadic::sqrt(n2.rounded(60, Dyadic::Round::Down), 50, err);
        return s.rounded(40, Dyadic::Round::Down);
    }
    Dyadic abs_upper() const { return (center_abs_upper() + rad).upper(); }
    Dyadic abs_lower() const {
        Dyadic l = center_abs_lower() - rad;
        return l.sign() > 0 ? l : Dyadic();
    }
    /// Enclosure of |z| as a real ball.
    RealBall abs() const {
        Dyadic n2 = re * re + im * im, err;
        Dyadic s = Dyadic::sqrt(n2, prec, err);
        return RealBall(s, rad + err, prec);
    }

    bool contains_zero() const {
        // |center|^2 <= rad^2
        return re * re + im * im <= rad * rad;
    }
    bool contains(const Dyadic& r, const Dyadic& i) const {
        Dyadic dr = re - r, di = im - i;
        return dr * dr + di * di <= rad * rad;
    }
    /// True when the two disks cannot share a point.
    bool disjoint(const ComplexBall& o) const {
        Dyadic dr = re - o.re, di = im - o.im, s = rad + o.rad;
        return dr * dr + di * di > s * s;
    }
    bool overlaps(const ComplexBall& o) const { return !disjoint(o); }
    bool meets_real_axis() const { return im.abs() <= rad; }

    friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
        long p = std::max(a.prec, b.prec);
        Dyadic e1, e2;
        Dyadic r = (a.re + b.re).rounded(p, e1);
        Dyadic i = (a.im + b.im).rounded(p, e2);
        return ComplexBall(r, i, a.rad + b.rad + e1 + e2, p);
    }
    friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) { return a + (-b); }
    friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
        long p = std::max(a.prec, b.prec);
        Dyadic e1, e2;
        Dyadic r = (a.re * b.re - a.im * b.im).rounded(p, e1);
        Dyadic i = (a.re * b.im + a.im * b.re).rounded(p, e2);
        Dyadic radius = a.center_abs_upper() * b.rad + b.center_abs_upper() * a.rad + a.rad * b.rad + e1 + e2;
        return ComplexBall(r, i, radius, p);
    }
    friend ComplexBall operator*(const ComplexBall& a, const RealBall& b) { return a * ComplexBall(b); }

    ComplexBall inverse() const {
        Dyadic n2 = re * re + im * im;
        if (n2.is_zero())
            throw DomainError("complex ball inverse: ball contains zero");
        Dyadic lo = center_abs_lower();
        if (lo <= rad)
            throw DomainError("complex ball inverse: ball contains zero");
        Dyadic e1, e2, e3;
        Dyadic r = Dyadic::div(re, n2, prec, e1);
        Dyadic i = Dyadic::div(-im, n2, prec, e2);
        // |1/z - 1/c| <= rad / (|c| (|c| - rad))
        Dyadic den = (lo * (lo - rad)).rounded(40, Dyadic::Round::Down);
        Dyadic bound = Dyadic::div(rad, den, 40, e3);
        return ComplexBall(r, i, bound + e3 + e1 + e2, prec);
    }
    friend ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) { return a * b.inverse(); }

    /// Image disk under z -> 1/conj(z).
    ComplexBall inverse_conj() const { return inverse().conj(); }
};

enum class UnitCircle { Inside, On, Outside, Undecided };

/// Position of an exact or ball point relative to the unit circle. `On` is only reported
/// when the caller has an external certificate; a ball alone yields Undecided there.
inline UnitCircle unit_circle_position(const ComplexBall& z) {
    Dyadic one(1);
    if (z.abs_upper() < one)
        return UnitCircle::Inside;
    if (z.abs_lower() > one)
        return UnitCircle::Outside;
    return UnitCircle::Undecided;
}

} // namespace salem
