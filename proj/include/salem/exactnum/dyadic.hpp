// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>

#include "salem/exactnum/integer.hpp"

namespace salem {

/// man * 2^exp, exactly. Zero is stored as (0, 0).
class Dyadic {
public:
    Dyadic() = default;
    Dyadic(long v) : man_(v) {} // NOLINT(google-explicit-constructor)
    Dyadic(Int man, long exp) : man_(std::move(man)), exp_(exp) { normalize(); }

    static Dyadic from_double(double v) {
        if (!std::isfinite(v))
            throw DomainError("non-finite double");
        int e = 0;
        double m = std::frexp(v, &e);
        Int man;
        mpz_set_d(man.get_mpz_t(), std::ldexp(m, 53));
        return Dyadic(man, e - 53);
    }

    const Int& man() const { return man_; }
    long exp() const { return exp_; }
    int sign() const { return sgn(man_); }
    bool is_zero() const { return man_ == 0; }
    long bits() const { return man_ == 0 ? 0 : static_cast<long>(mpz_sizeinbase(man_.get_mpz_t(), 2)); }
    /// floor(log2 |x|) + 1; 0 reads as very negative.
    long magnitude() const { return man_ == 0 ? -(1L << 40) : bits() + exp_; }

    Rat to_rat() const {
        Rat r(man_);
        if (exp_ >= 0) {
            mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(exp_));
        } else {
            mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-exp_));
        }
        return r;
    }

    double to_double() const {
        if (man_ == 0)
            return 0.0;
        long e = 0;
        double d = mpz_get_d_2exp(&e, man_.get_mpz_t());
        long total = e + exp_;
        if (total > 2000)
            return d > 0 ? HUGE_VAL : -HUGE_VAL;
        if (total < -2000)
            return 0.0;
        return std::ldexp(d, static_cast<int>(total));
    }

    Dyadic operator-() const { return Dyadic(-man_, exp_); }
    Dyadic abs() const { return Dyadic(man_ < 0 ? Int(-man_) : man_, exp_); }
    Dyadic mul_2exp(long k) const { return man_ == 0 ? Dyadic() : Dyadic(man_, exp_ + k); }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
        if (a.is_zero())
            return b;
        if (b.is_zero())
            return a;
        long e = std::min(a.exp_, b.exp_);
        Int x = a.man_, y = b.man_;
        if (a.exp_ > e)
            mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(a.exp_ - e));
        if (b.exp_ > e)
            mpz_mul_2exp(y.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(b.exp_ - e));
        return Dyadic(Int(x + y), e);
    }
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
        if (a.is_zero() || b.is_zero())
            return Dyadic();
        return Dyadic(Int(a.man_ * b.man_), a.exp_ + b.exp_);
    }

    friend int cmp(const Dyadic& a, const Dyadic& b) { return (a - b).sign(); }
    friend bool operator==(const Dyadic& a, const Dyadic& b) { return a.man_ == b.man_ && a.exp_ == b.exp_; }
    friend bool operator<(const Dyadic& a, const Dyadic& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) >= 0; }

    enum class Round { Down, Up, Zero };

    /// Rounds to at most `prec` mantissa bits in the given direction.
    Dyadic rounded(long prec, Round dir) const {
        long b = bits();
        if (b <= prec)
            return *this;
        unsigned long shift = static_cast<unsigned long>(b - prec);
        Int q;
        switch (dir) {
        case Round::Down:
            mpz_fdiv_q_2exp(q.get_mpz_t(), man_.get_mpz_t(), shift);
            break;
        case Round::Up:
            mpz_cdiv_q_2exp(q.get_mpz_t(), man_.get_mpz_t(), shift);
            break;
        case Round::Zero:
            mpz_tdiv_q_2exp(q.get_mpz_t(), man_.get_mpz_t(), shift);
            break;
        }
        return Dyadic(q, exp_ + static_cast<long>(shift));
    }

    /// Truncation to `prec` bits; `err` receives an upper bound on |x - result|.
    Dyadic rounded(long prec, Dyadic& err) const {
        long b = bits();
        if (b <= prec) {
            err = Dyadic();
            return *this;
        }
        long shift = b - prec;
        err = Dyadic(Int(1), exp_ + shift);
        return rounded(prec, Round::Zero);
    }

    /// Upper bound of |x| with a short mantissa; used for radii.
    Dyadic upper(long prec = 30) const { return abs().rounded(prec, Round::Up); }

    /// Truncated quotient a/b with about `prec` bits; `err` bounds the error.
    static Dyadic div(const Dyadic& a, const Dyadic& b, long prec, Dyadic& err) {
        if (b.is_zero())
            throw DomainError("dyadic division by zero");
        if (a.is_zero()) {
            err = Dyadic();
            return Dyadic();
        }
        long k = prec + b.bits() - a.bits() + 2;
        if (k < 0)
            k = 0;
        Int num = a.man_;
        mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k));
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), num.get_mpz_t(), b.man_.get_mpz_t());
        long e = a.exp_ - b.exp_ - k;
        err = Dyadic(Int(1), e);
        return Dyadic(q, e);
    }

    /// floor(sqrt(a)) to about `prec` bits; `err` bounds the error.
    static Dyadic sqrt(const Dyadic& a, long prec, Dyadic& err) {
        if (a.sign() < 0)
            throw DomainError("dyadic sqrt of negative value");
        if (a.is_zero()) {
            err = Dyadic();
            return Dyadic();
        }
        long k = 2 * prec - a.bits() + 2;
        if (k < 0)
            k = 0;
        if ((a.exp_ - k) % 2 != 0)
            ++k;
        Int m = a.man_;
        mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(k));
        Int s;
        mpz_sqrt(s.get_mpz_t(), m.get_mpz_t());
        long e = (a.exp_ - k) / 2;
        err = Dyadic(Int(1), e);
        return Dyadic(s, e);
    }

    /// Nearest-ish dyadic to a rational with `prec` bits; `err` bounds the error.
    static Dyadic from_rat(const Rat& q, long prec, Dyadic& err) {
        if (is_integer(q)) {
            Dyadic exact(q.get_num(), 0);
            return exact.rounded(prec, err);
        }
        return div(Dyadic(q.get_num(), 0), Dyadic(q.get_den(), 0), prec, err);
    }

    std::string to_string() const {
        return man_.get_str() + "*2^" + std::to_string(exp_);
    }

private:
    void normalize() {
        if (man_ == 0) {
            exp_ = 0;
            return;
        }
        unsigned long tz = mpz_scan1(man_.get_mpz_t(), 0);
        if (tz > 0) {
            mpz_tdiv_q_2exp(man_.get_mpz_t(), man_.get_mpz_t(), tz);
            exp_ += static_cast<long>(tz);
        }
    }

    Int man_ = 0;
    long exp_ = 0;
};

inline const Dyadic& max(const Dyadic& a, const Dyadic& b) { return a < b ? b : a; }
inline const Dyadic& min(const Dyadic& a, const Dyadic& b) { return a < b ? a : b; }

} // namespace salem
