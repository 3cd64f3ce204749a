// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "salem/linalg/matrix.hpp"
#include "salem/poly/poly.hpp"

namespace salem {

using QMatrix = Matrix<QuadExt>;

/// Power sums P_0..P_{count-1} of the roots of a monic p, by Newton's identities.
inline std::vector<QuadExt> power_sums(const QPoly& p, std::size_t count) {
    if (!p.is_monic())
        throw DomainError("power sums need a monic polynomial");
    const std::size_t m = static_cast<std::size_t>(p.degree());
    // p = x^m + c_{m-1} x^{m-1} + ... + c_0; e-style coefficient a_i := c_{m-i}
    auto a = [&](std::size_t i) { return i <= m ? p.coeff(m - i) : QuadExt(); };
    std::vector<QuadExt> P(count);
    if (count > 0)
        P[0] = QuadExt(static_cast<long>(m));
    for (std::size_t k = 1; k < count; ++k) {
        QuadExt s;
        for (std::size_t i = 1; i < k && i <= m; ++i)
            s = s + a(i) * P[k - i];
        if (k <= m)
            s = s + QuadExt(static_cast<long>(k)) * a(k);
        P[k] = -s;
    }
    return P;
}

/// Symmetric form with signature data. `conj_signature` is present over Q(sqrt d).
struct GramForm {
    QMatrix gram;
    long field = 0;
    Signature signature;
    std::optional<Signature> conj_signature;
    bool admissible = false;
};

inline GramForm analyse_form(const QMatrix& a, long d) {
    GramForm g;
    g.gram = a;
    g.field = d;
    g.signature = signature(a);
    bool lorentz = g.signature.is_lorentzian();
    if (d != 0) {
        g.conj_signature = signature(a.conj());
        g.admissible = lorentz && g.conj_signature->is_positive_definite();
    } else {
        g.admissible = lorentz;
    }
    return g;
}

/// A_{jk} = P_{|j-k|} / 2 for the root power sums of p.
inline GramForm gram_from_minpoly(const QPoly& p, long d = 0) {
    if (!p.is_monic())
        throw DomainError("gram_from_minpoly needs a monic polynomial");
    const std::size_t m = static_cast<std::size_t>(p.degree());
    std::vector<QuadExt> P = power_sums(p, m);
    QMatrix a(m, m);
    QuadExt half(Rat(1, 2));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k)
            a(j, k) = (half * P[j > k ? j - k : k - j]).in_field(d);
    return analyse_form(a, d);
}

/// Subdiagonal ones, last column -a_0..-a_{m-1}.
inline QMatrix companion(const QPoly& p, long d = 0) {
    if (!p.is_monic())
        throw DomainError("companion needs a monic polynomial");
    for (const auto& c : p.coeffs())
        if (!c.is_integral())
            throw DomainError("companion needs coefficients in o_K");
    const std::size_t m = static_cast<std::size_t>(p.degree());
    QMatrix c(m, m, QuadExt(0).in_field(d));
    for (std::size_t i = 1; i < m; ++i)
        c(i, i - 1) = QuadExt(1).in_field(d);
    for (std::size_t i = 0; i < m; ++i)
        c(i, m - 1) = (-p.coeff(i)).in_field(d);
    return c;
}

inline bool verify_form_preservation(const QMatrix& c, const QMatrix& a) {
    if (c.rows() != a.rows() || c.cols() != a.cols())
        throw DomainError("dimension mismatch");
    return c.transpose() * a * c == a;
}

/// True when every diagonal of the matrix is constant.
inline bool is_toeplitz(const QMatrix& a) {
    for (std::size_t i = 1; i < a.rows(); ++i)
        for (std::size_t j = 1; j < a.cols(); ++j)
            if (a(i, j) != a(i - 1, j - 1))
                return false;
    return true;
}

/// x^T A x
template <class T>
T evaluate_form(const Matrix<T>& a, const std::vector<T>& x) {
    T s(0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            s = s + x[i] * a(i, j) * x[j];
    return s;
}

} // namespace salem
