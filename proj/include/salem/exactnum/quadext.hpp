// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <ostream>
#include <regex>
#include <string>

#include "salem/exactnum/ball.hpp"
#include "salem/exactnum/integer.hpp"

namespace salem {

/// a + b*sqrt(d) in Q(sqrt d), d > 1 square-free. Tag d == 0 marks a plain rational,
/// which combines with every field; two distinct nonzero tags never mix.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(long v) : a_(v) {}        // NOLINT(google-explicit-constructor)
    QuadExt(const Int& v) : a_(v) {}  // NOLINT(google-explicit-constructor)
    QuadExt(const Rat& v) : a_(v) { a_.canonicalize(); }  // NOLINT(google-explicit-constructor)
    QuadExt(Rat a, Rat b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        a_.canonicalize();
        b_.canonicalize();
        if (d_ < 0 || d_ == 1 || (d_ > 1 && !is_squarefree(Int(d_))))
            throw DomainError("quadratic field discriminant must be a square-free integer > 1");
        if (d_ == 0 && b_ != 0)
            throw DomainError("sqrt(d) coefficient given without a field");
    }
    /// sqrt(d) itself.
    static QuadExt sqrt_d(long d) { return QuadExt(Rat(0), Rat(1), d); }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    long d() const { return d_; }
    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    /// Same value, tagged with field d (rationals only may be retagged).
    QuadExt in_field(long d) const {
        if (d_ != 0 && d_ != d && d != 0)
            throw FieldMismatch("cannot move a value of Q(sqrt " + std::to_string(d_) + ") into Q(sqrt " + std::to_string(d) + ")");
        if (d == 0) {
            if (b_ != 0)
                throw FieldMismatch("irrational value cannot be tagged rational");
            return QuadExt(a_);
        }
        return QuadExt(a_, b_, d);
    }

    static long common_field(long d1, long d2) {
        if (d1 == 0)
            return d2;
        if (d2 == 0 || d1 == d2)
            return d1;
        throw FieldMismatch("Q(sqrt " + std::to_string(d1) + ") and Q(sqrt " + std::to_string(d2) + ") do not mix");
    }

    QuadExt conj() const { return d_ == 0 ? *this : QuadExt(a_, -b_, d_); }
    Rat norm() const { return a_ * a_ - b_ * b_ * d_; }
    Rat trace() const { return 2 * a_; }

    QuadExt operator-() const { return d_ == 0 ? QuadExt(Rat(-a_)) : QuadExt(-a_, -b_, d_); }
    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        long d = common_field(x.d_, y.d_);
        return make(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        long d = common_field(x.d_, y.d_);
        return make(x.a_ - y.a_, x.b_ - y.b_, d);
    }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        long d = common_field(x.d_, y.d_);
        return make(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    QuadExt inverse() const {
        if (is_zero())
            throw DomainError("division by zero in Q(sqrt d)");
        Rat n = norm();
        return make(a_ / n, -b_ / n, d_);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }
    QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
    QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
    QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
    QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

    /// Values compare equal regardless of tag when both are rational.
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        if (x.b_ == 0 && y.b_ == 0)
            return x.a_ == y.a_;
        common_field(x.d_, y.d_);
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    /// Exact sign of a + b sqrt(d) under the embedding sqrt(d) > 0.
    int sign() const {
        int sa = sgn(a_), sb = sgn(b_);
        if (sb == 0)
            return sa;
        if (sa == 0 || sa == sb)
            return sb;
        // opposite signs: compare a^2 with b^2 d
        int c = cmp(Rat(a_ * a_), Rat(b_ * b_ * d_));
        return c > 0 ? sa : (c < 0 ? sb : 0);
    }
    friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QuadExt& x, const QuadExt& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() >= 0; }

    bool is_totally_positive() const { return sign() > 0 && conj().sign() > 0; }

    /// Membership in the ring of integers o_K.
    bool is_integral() const {
        if (d_ == 0 || b_ == 0)
            return is_integer(a_);
        if (d_ % 4 == 1) {
            Rat A = 2 * a_, B = 2 * b_;
            if (!is_integer(A) || !is_integer(B))
                return false;
            Int s = A.get_num() - B.get_num();
            return mpz_even_p(s.get_mpz_t()) != 0;
        }
        return is_integer(a_) && is_integer(b_);
    }

    /// Smallest positive integer n with n*x integral.
    Int denominator_in_ok() const {
        Int n = lcm(a_.get_den(), b_.get_den());
        if (d_ % 4 == 1 && d_ != 0 && n % 2 == 0) {
            Int half = n / 2;
            if ((QuadExt(Rat(a_ * half), Rat(b_ * half), d_)).is_integral())
                return half;
        }
        return n;
    }

    /// Ball under the embedding sqrt(d) -> +sqrt(d) (or its negative when `conjugate`).
    RealBall to_ball(long prec, bool conjugate = false) const {
        RealBall ra = RealBall::from_rat(a_, prec + 8);
        if (b_ == 0 || d_ == 0)
            return ra.with_prec(prec);
        RealBall rb = RealBall::from_rat(conjugate ? Rat(-b_) : b_, prec + 8);
        RealBall sd = RealBall::exact(Dyadic(d_), prec + 8).sqrt();
        return (ra + rb * sd).with_prec(prec);
    }
    double to_double() const { return to_ball(64).to_double(); }

    /// Exact square root inside Q(sqrt d), choosing the root positive under the identity embedding.
    std::optional<QuadExt> sqrt() const {
        if (is_zero())
            return *this;
        if (b_ == 0) {
            if (auto r = rational_sqrt(a_))
                return QuadExt(*r).in_field(d_);
            if (d_ != 0) {
                // a = y^2 d
                if (auto r = rational_sqrt(Rat(a_ / d_)))
                    return QuadExt(Rat(0), *r, d_);
            }
            return std::nullopt;
        }
        auto n = rational_sqrt(norm());
        if (!n)
            return std::nullopt;
        for (int eps : {1, -1}) {
            Rat x2 = (a_ + eps * *n) / 2;
            Rat y2 = (a_ - eps * *n) / (2 * Rat(d_));
            auto x = rational_sqrt(x2);
            auto y = rational_sqrt(y2);
            if (!x || !y)
                continue;
            for (int sy : {1, -1}) {
                QuadExt cand(*x, Rat(sy * *y), d_);
                if (cand * cand == *this) {
                    if (cand.sign() < 0)
                        cand = -cand;
                    return cand;
                }
            }
        }
        return std::nullopt;
    }

    std::string to_string() const {
        if (b_ == 0)
            return a_.get_str();
        std::string s;
        if (a_ != 0)
            s = a_.get_str() + (b_ > 0 ? "+" : "-");
        else if (b_ < 0)
            s = "-";
        Rat bb = abs(b_);
        if (bb != 1)
            s += bb.get_str() + "*";
        s += "sqrt(" + std::to_string(d_) + ")";
        return s;
    }

    /// Accepts "a", "p/q", "a+b*sqrt(d)", "b*sqrt(d)", "sqrt(d)", "-sqrt(d)", "a-sqrt(d)".
    static QuadExt parse(const std::string& text) {
        std::string t;
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch)))
                t += ch;
        static const std::regex rat_re(R"(^[+-]?\d+(/\d+)?$)");
        static const std::regex quad_re(R"(^([+-]?\d+(?:/\d+)?)?(?:([+-])(?:(\d+(?:/\d+)?)\*)?sqrt\((\d+)\))$)");
        static const std::regex lead_re(R"(^([+-]?)(?:(\d+(?:/\d+)?)\*)?sqrt\((\d+)\)$)");
        std::smatch m;
        try {
            if (std::regex_match(t, rat_re))
                return QuadExt(parse_rat(t));
            if (std::regex_match(t, m, lead_re)) {
                Rat b = m[2].matched ? parse_rat(m[2].str()) : Rat(1);
                if (m[1].str() == "-")
                    b = -b;
                return QuadExt(Rat(0), b, std::stol(m[3].str()));
            }
            if (std::regex_match(t, m, quad_re) && m[1].matched) {
                Rat a = parse_rat(m[1].str());
                Rat b = m[3].matched ? parse_rat(m[3].str()) : Rat(1);
                if (m[2].str() == "-")
                    b = -b;
                return QuadExt(a, b, std::stol(m[4].str()));
            }
        } catch (const DomainError& e) {
            throw ParseError("bad field element '" + text + "': " + e.what());
        }
        throw ParseError("bad field element '" + text + "'");
    }

    static Rat parse_rat(const std::string& s) {
        Rat r;
        if (r.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0)
            throw ParseError("bad rational '" + s + "'");
        r.canonicalize();
        if (r.get_den() == 0)
            throw ParseError("zero denominator in '" + s + "'");
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.to_string(); }

private:
    static QuadExt make(Rat a, Rat b, long d) {
        QuadExt r;
        r.a_ = std::move(a);
        r.b_ = std::move(b);
        r.d_ = d;
        return r;
    }

    Rat a_ = 0;
    Rat b_ = 0;
    long d_ = 0;
};

} // namespace salem
