// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "salem/poly/factor.hpp"

namespace salem {

enum class Verdict { Salem, Cyclotomic, Reducible, Other };

inline std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Salem:
        return "salem";
    case Verdict::Cyclotomic:
        return "cyclotomic";
    case Verdict::Reducible:
        return "reducible";
    case Verdict::Other:
        return "other";
    }
    return "other";
}

/// Outcome of classify_salem. For Salem inputs `lambda` encloses the root > 1, `roots` is
/// the certified isolation and `lambda_index` / `inverse_index` point into it.
struct SalemCertificate {
    IntPoly poly;
    Verdict verdict = Verdict::Other;
    std::string reason;
    std::vector<FactorPower<Int>> factors;
    RootSet roots;
    RealBall lambda;
    RealBall log_lambda;
    std::size_t lambda_index = 0;
    std::size_t inverse_index = 0;

    bool is_salem() const { return verdict == Verdict::Salem; }
    long degree() const { return poly.degree(); }
};

namespace detail {

/// Root set fine enough that lambda has ~`bits` correct bits.
inline RootSet certified_roots(const IntPoly& p, long bits, const PrecisionPolicy& policy) {
    IsolationOptions opt;
    opt.target_bits = bits;
    opt.policy = policy;
    return isolate_roots(p, opt);
}

} // namespace detail

/// Decides whether a monic integer polynomial is the minimal polynomial of a Salem number.
/// x^2 - t x + 1 with t >= 3 counts as Salem (degree-2 convention).
inline SalemCertificate classify_salem(const IntPoly& p, const PrecisionPolicy& policy = default_precision()) {
    SalemCertificate c;
    c.poly = p;
    if (p.degree() < 1)
        throw DomainError("classify_salem needs a polynomial of positive degree");
    if (!p.is_monic())
        throw DomainError("classify_salem needs a monic polynomial");

    c.factors = factor_over_z(p, policy);
    if (c.factors.size() > 1 || c.factors[0].multiplicity > 1) {
        c.verdict = Verdict::Reducible;
        c.reason = "polynomial factors over Z";
        return c;
    }
    if (is_cyclotomic(p)) {
        c.verdict = Verdict::Cyclotomic;
        c.reason = "cyclotomic polynomial";
        return c;
    }
    if (p.degree() % 2 != 0 || !p.is_palindromic()) {
        c.verdict = Verdict::Other;
        c.reason = p.degree() % 2 ? "odd degree" : "not palindromic";
        return c;
    }

    c.roots = detail::certified_roots(p, 110, policy);
    std::optional<std::size_t> big, small;
    for (std::size_t i = 0; i < c.roots.size(); ++i) {
        if (c.roots.certified_on_unit_circle(i))
            continue;
        if (!c.roots.certified_real(i)) {
            c.verdict = Verdict::Other;
            c.reason = "a root off the unit circle is not real";
            return c;
        }
        const RealBall r = c.roots.real_ball(i);
        if (r.lower() > Dyadic(1)) {
            if (big) {
                c.verdict = Verdict::Other;
                c.reason = "more than one real root > 1";
                return c;
            }
            big = i;
        } else if (r.upper() < Dyadic(1) && r.lower() > Dyadic(0)) {
            small = i;
        } else {
            c.verdict = Verdict::Other;
            c.reason = "real root off the unit circle outside (0, 1) u (1, oo)";
            return c;
        }
    }
    if (!big || !small) {
        c.verdict = Verdict::Other;
        c.reason = "no real root > 1";
        return c;
    }
    c.verdict = Verdict::Salem;
    c.reason = p.degree() == 2 ? "quadratic unit > 1 (degree-2 convention)" : "Salem number";
    c.lambda_index = *big;
    c.inverse_index = *small;
    c.lambda = c.roots.real_ball(*big);
    c.log_lambda = log(c.lambda);
    return c;
}

/// Salem polynomial of lambda^k: the minimal polynomial of the k-th powers of the roots.
inline IntPoly power_polynomial(const SalemCertificate& c, unsigned k) {
    if (k == 0)
        throw DomainError("power 0");
    const long prec = c.roots.prec;
    std::vector<ComplexBall> pw;
    for (const auto& r : c.roots.roots) {
        ComplexBall z = r;
        for (unsigned i = 1; i < k; ++i)
            z = z * r;
        pw.push_back(z);
    }
    std::vector<ComplexBall> coeffs = product_coefficients(pw, prec);
    std::vector<Int> ic;
    for (const auto& b : coeffs) {
        bool amb = false;
        auto v = round_to_integer(b, amb);
        if (!v)
            throw PrecisionExhausted("power polynomial coefficients did not round");
        ic.push_back(*v);
    }
    return IntPoly(ic);
}

/// R with R(x^2) = p(x) p(-x); for a Salem polynomial this is the Salem polynomial of lambda^2.
inline IntPoly squared_salem(const IntPoly& p) {
    IntPoly prod = p * p.negate_argument();
    std::vector<Int> c;
    for (std::size_t i = 0; i < prod.coeffs().size(); i += 2)
        c.push_back(prod.coeffs()[i]);
    if (p.degree() % 2 != 0)
        for (auto& v : c)
            v = -v;
    return IntPoly(c);
}

/// Certificate for lambda^2; the squared polynomial is re-classified from scratch.
inline SalemCertificate squared_salem(const SalemCertificate& c, const PrecisionPolicy& policy = default_precision()) {
    if (!c.is_salem())
        throw DomainError("squared_salem needs a Salem certificate");
    SalemCertificate s = classify_salem(squared_salem(c.poly), policy);
    if (!s.is_salem())
        throw DomainError("square of a Salem number failed to classify as Salem");
    return s;
}

} // namespace salem
