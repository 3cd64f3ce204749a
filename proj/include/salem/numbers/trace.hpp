// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "salem/numbers/classify.hpp"

namespace salem {

/// T_k with x^k + x^-k = T_k(x + 1/x): T_0 = 2, T_1 = z, T_k = z T_{k-1} - T_{k-2}.
template <class T>
std::vector<Poly<T>> trace_basis(std::size_t n) {
    std::vector<Poly<T>> t;
    t.push_back(Poly<T>::constant(T(2)));
    if (n >= 1)
        t.push_back(Poly<T>::x());
    for (std::size_t k = 2; k <= n; ++k)
        t.push_back(Poly<T>::x() * t[k - 1] - t[k - 2]);
    return t;
}

/// For palindromic p of degree 2l: the unique g of degree l with p(x) = x^l g(x + 1/x).
template <class T>
Poly<T> trace_polynomial(const Poly<T>& p) {
    if (p.degree() < 0 || p.degree() % 2 != 0)
        throw DomainError("trace polynomial needs even degree");
    if (!p.is_palindromic())
        throw DomainError("trace polynomial needs a palindromic polynomial");
    std::size_t l = static_cast<std::size_t>(p.degree() / 2);
    auto basis = trace_basis<T>(l);
    Poly<T> g = Poly<T>::constant(p.coeff(l));
    for (std::size_t k = 1; k <= l; ++k)
        g = g + Poly<T>::constant(p.coeff(l + k)) * basis[k];
    return g;
}

/// Inverse of trace_polynomial: x^l g(x + 1/x) = sum_j g_j x^(l-j) (x^2 + 1)^j.
template <class T>
Poly<T> untrace(const Poly<T>& g) {
    if (g.degree() < 0)
        return g;
    std::size_t l = static_cast<std::size_t>(g.degree());
    Poly<T> x2p1({T(1), T(0), T(1)});
    Poly<T> acc;
    Poly<T> pw = Poly<T>::constant(T(1));
    for (std::size_t j = 0; j <= l; ++j) {
        acc = acc + Poly<T>::monomial(g.coeff(j), l - j) * pw;
        pw = pw * x2p1;
    }
    return acc;
}

struct TotallyRealCheck {
    bool ok = false;
    std::string reason;
    SalemCertificate certificate;
};

/// Accepts g monic over Z, irreducible, with all roots real, exactly one > 2 and the rest
/// in (-2, 2); the untraced polynomial is then Salem.
inline TotallyRealCheck salem_from_totally_real(const IntPoly& g, const PrecisionPolicy& policy = default_precision()) {
    TotallyRealCheck out;
    if (!g.is_monic() || g.degree() < 1)
        throw DomainError("expected a monic integer polynomial of positive degree");
    if (!is_irreducible_over_z(g)) {
        out.reason = "not irreducible over Z";
        return out;
    }
    IsolationOptions opt;
    opt.policy = policy;
    RootSet rs = isolate_roots(g, opt);
    int above = 0;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (!rs.certified_real(i)) {
            out.reason = "a root is not real";
            return out;
        }
        RealBall r = rs.real_ball(i);
        if (r.lower() > Dyadic(2)) {
            ++above;
        } else if (!(r.upper() < Dyadic(2) && r.lower() > Dyadic(-2))) {
            out.reason = "a root is not in (-2, 2)";
            return out;
        }
    }
    if (above != 1) {
        out.reason = "need exactly one root > 2";
        return out;
    }
    out.certificate = classify_salem(untrace(g), policy);
    out.ok = out.certificate.is_salem();
    out.reason = out.ok ? "ok" : out.certificate.reason;
    return out;
}

} // namespace salem
