// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "salem/exactnum/field.hpp"

namespace salem {

/// Dense univariate polynomial, coefficients ascending; no trailing zeros.
template <class T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
    static Poly x() { return Poly(std::vector<T>{T(0), T(1)}); }
    /// v * x^k
    static Poly monomial(const T& v, std::size_t k) {
        std::vector<T> c(k + 1, elem::zero_like(v));
        c[k] = v;
        return Poly(std::move(c));
    }

    const std::vector<T>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    const T& lc() const {
        if (c_.empty())
            throw DomainError("leading coefficient of zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back() == T(1); }
    /// Field tag shared by the coefficients (0 for rational data).
    long field() const {
        long d = 0;
        for (const auto& a : c_)
            d = QuadExt::common_field(d, elem::field_tag(a));
        return d;
    }

    /// a_i == a_{n-i} for every i.
    bool is_palindromic() const {
        std::size_t n = c_.size();
        for (std::size_t i = 0; i < n / 2; ++i)
            if (!(c_[i] == c_[n - 1 - i]))
                return false;
        return true;
    }

    T eval(const T& x) const {
        T acc(0);
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * x + c_[i];
        return acc;
    }

    template <class U, class F>
    Poly<U> map(F f) const {
        std::vector<U> out;
        out.reserve(c_.size());
        for (const auto& a : c_)
            out.push_back(f(a));
        return Poly<U>(std::move(out));
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& a : r.c_)
            a = -a;
        return r;
    }
    friend Poly operator+(const Poly& p, const Poly& q) {
        std::vector<T> c(std::max(p.c_.size(), q.c_.size()), T(0));
        for (std::size_t i = 0; i < p.c_.size(); ++i)
            c[i] = c[i] + p.c_[i];
        for (std::size_t i = 0; i < q.c_.size(); ++i)
            c[i] = c[i] + q.c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }
    friend Poly operator*(const Poly& p, const Poly& q) {
        if (p.is_zero() || q.is_zero())
            return Poly();
        std::vector<T> c(p.c_.size() + q.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < p.c_.size(); ++i) {
            if (elem::is_zero(p.c_[i]))
                continue;
            for (std::size_t j = 0; j < q.c_.size(); ++j)
                c[i + j] = c[i + j] + p.c_[i] * q.c_[j];
        }
        return Poly(std::move(c));
    }
    friend Poly operator*(const T& s, const Poly& p) {
        Poly r = p;
        for (auto& a : r.c_)
            a = s * a;
        r.trim();
        return r;
    }
    Poly& operator+=(const Poly& q) { return *this = *this + q; }
    Poly& operator-=(const Poly& q) { return *this = *this - q; }
    Poly& operator*=(const Poly& q) { return *this = *this * q; }

    friend bool operator==(const Poly& p, const Poly& q) {
        if (p.c_.size() != q.c_.size())
            return false;
        for (std::size_t i = 0; i < p.c_.size(); ++i)
            if (!(p.c_[i] == q.c_[i]))
                return false;
        return true;
    }
    friend bool operator!=(const Poly& p, const Poly& q) { return !(p == q); }

    /// Quotient and remainder. Over Int the divisor must be monic (or exactly divide each step).
    static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
        if (b.is_zero())
            throw DomainError("polynomial division by zero");
        std::vector<T> r = a.c_;
        long db = b.degree();
        if (a.degree() < db)
            return {Poly(), a};
        std::vector<T> q(static_cast<std::size_t>(a.degree() - db + 1), T(0));
        const T& lb = b.lc();
        for (long i = a.degree(); i >= db; --i) {
            const T& top = r[static_cast<std::size_t>(i)];
            if (elem::is_zero(top))
                continue;
            T f;
            if constexpr (std::is_same_v<T, Int>) {
                if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
                    throw DomainError("integer polynomial division is not exact");
                f = top / lb;
            } else {
                f = top / lb;
            }
            q[static_cast<std::size_t>(i - db)] = f;
            for (long j = 0; j <= db; ++j)
                r[static_cast<std::size_t>(i - db + j)] = r[static_cast<std::size_t>(i - db + j)] - f * b.c_[static_cast<std::size_t>(j)];
        }
        return {Poly(std::move(q)), Poly(std::move(r))};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }
    /// True when b divides a exactly (in T[x]).
    static bool divides(const Poly& b, const Poly& a) {
        try {
            return divrem(a, b).second.is_zero();
        } catch (const DomainError&) {
            return false;
        }
    }

    Poly derivative() const {
        if (c_.size() <= 1)
            return Poly();
        std::vector<T> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            d[i - 1] = T(static_cast<long>(i)) * c_[i];
        return Poly(std::move(d));
    }

    /// p(x) -> p(x^2)
    Poly compose_x_squared() const {
        if (c_.empty())
            return Poly();
        std::vector<T> d(2 * c_.size() - 1, T(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            d[2 * i] = c_[i];
        return Poly(std::move(d));
    }
    /// p(x) -> p(-x)
    Poly negate_argument() const {
        Poly r = *this;
        for (std::size_t i = 1; i < r.c_.size(); i += 2)
            r.c_[i] = -r.c_[i];
        return r;
    }
    /// p(x) -> p(x + s)
    Poly shift(const T& s) const {
        Poly r;
        Poly lin({s, T(1)});
        for (std::size_t i = c_.size(); i-- > 0;)
            r = r * lin + Poly::constant(c_[i]);
        return r;
    }
    /// x^deg p(1/x)
    Poly reversed() const {
        std::vector<T> r(c_.rbegin(), c_.rend());
        return Poly(std::move(r));
    }
    Poly monic() const {
        if constexpr (elem::is_field_v<T>) {
            T inv = T(1) / lc();
            return inv * *this;
        } else {
            if (!is_monic())
                throw DomainError("integer polynomial is not monic");
            return *this;
        }
    }
    /// Coefficient-wise Galois conjugate.
    Poly conj() const {
        Poly r = *this;
        for (auto& a : r.c_)
            a = elem::conj(a);
        return r;
    }

    std::string to_string(const std::string& var = "x") const {
        if (c_.empty())
            return "0";
        std::string out;
        for (std::size_t k = c_.size(); k-- > 0;) {
            const T& a = c_[k];
            if (elem::is_zero(a))
                continue;
            std::string s = elem::str(a);
            bool compound = s.find_first_of("+-", 1) != std::string::npos;
            bool neg = !compound && s[0] == '-';
            if (neg)
                s.erase(0, 1);
            if (compound)
                s = "(" + s + ")";
            if (out.empty())
                out = neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            if (k == 0) {
                out += s;
            } else {
                if (s != "1")
                    out += s + "*";
                out += var;
                if (k > 1)
                    out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && elem::is_zero(c_.back()))
            c_.pop_back();
    }

    std::vector<T> c_;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;
using QPoly = Poly<QuadExt>;

inline RatPoly to_rat_poly(const IntPoly& p) { return p.map<Rat>([](const Int& a) { return Rat(a); }); }
inline QPoly to_quad_poly(const IntPoly& p, long d = 0) {
    return p.map<QuadExt>([d](const Int& a) { return QuadExt(a).in_field(d); });
}
inline QPoly to_quad_poly(const RatPoly& p, long d = 0) {
    return p.map<QuadExt>([d](const Rat& a) { return QuadExt(a).in_field(d); });
}
/// Throws unless every coefficient is an integer.
template <class T>
IntPoly to_int_poly(const Poly<T>& p) {
    return p.template map<Int>([](const T& a) { return elem::to_int(a); });
}
template <class T>
RatPoly to_rat_poly(const Poly<T>& p) {
    return p.template map<Rat>([](const T& a) { return elem::to_rat(a); });
}

/// Monic gcd over a field.
template <class T>
Poly<T> poly_gcd(Poly<T> a, Poly<T> b) {
    static_assert(elem::is_field_v<T>, "gcd needs field coefficients");
    while (!b.is_zero()) {
        Poly<T> r = Poly<T>::divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

template <class T>
bool is_squarefree(const Poly<T>& p) {
    if (p.degree() <= 0)
        return true;
    if constexpr (std::is_same_v<T, Int>) {
        return poly_gcd(to_rat_poly(p), to_rat_poly(p).derivative()).degree() == 0;
    } else {
        return poly_gcd(p, p.derivative()).degree() == 0;
    }
}

/// Yun's square-free decomposition over a field: p = lc * prod f_i^i (f_i monic, pairwise coprime).
template <class T>
std::vector<std::pair<Poly<T>, unsigned>> squarefree_decomposition(const Poly<T>& p) {
    std::vector<std::pair<Poly<T>, unsigned>> out;
    if (p.degree() <= 0)
        return out;
    Poly<T> f = p.monic();
    Poly<T> fp = f.derivative();
    Poly<T> a = poly_gcd(f, fp);
    Poly<T> b = f / a;
    Poly<T> c = fp / a;
    Poly<T> d = c - b.derivative();
    unsigned i = 1;
    while (b.degree() > 0) {
        Poly<T> g = poly_gcd(b, d);
        if (g.degree() > 0)
            out.emplace_back(g, i);
        b = b / g;
        c = d / g;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

/// Parses "1 -3 1" or "1,-3,1" (ascending coefficients by default).
template <class T, class F>
Poly<T> parse_coefficients(const std::vector<std::string>& tokens, F parse_one, bool descending) {
    std::vector<T> c;
    for (const auto& tok : tokens) {
        std::string t = tok;
        std::replace(t.begin(), t.end(), ',', ' ');
        std::istringstream is(t);
        std::string part;
        while (is >> part)
            c.push_back(parse_one(part));
    }
    if (c.empty())
        throw ParseError("no coefficients given");
    if (descending)
        std::reverse(c.begin(), c.end());
    return Poly<T>(std::move(c));
}

inline IntPoly parse_int_poly(const std::vector<std::string>& tokens, bool descending = false) {
    return parse_coefficients<Int>(tokens, [](const std::string& s) {
        Int z;
        if (z.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0)
            throw ParseError("bad integer coefficient '" + s + "'");
        return z;
    }, descending);
}

inline QPoly parse_quad_poly(const std::vector<std::string>& tokens, bool descending = false) {
    return parse_coefficients<QuadExt>(tokens, [](const std::string& s) { return QuadExt::parse(s); }, descending);
}

} // namespace salem
