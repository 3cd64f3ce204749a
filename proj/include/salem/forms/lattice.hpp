// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>

#include "salem/forms/gram.hpp"
#include "salem/numbers/isometry.hpp"
#include "salem/numbers/trace.hpp"
#include "salem/poly/factor.hpp"
#include "salem/sqrtable/sqrtable.hpp"

namespace salem {

/// sqrt(alpha) * D = B / m_prime, with B over o_K and B^2 = b C.
struct SqrtPart {
    SqrtWitness witness;
    QuadExt alpha;
    Int m_prime = 1;
    QuadExt b;
    QMatrix B;

    QMatrix sqrt_alpha_d() const { return QuadExt(Rat(1) / Rat(m_prime)) * B; }
};

struct LatticeData {
    GramForm form;
    QMatrix companion;
    std::optional<SqrtPart> sqrt;
    long dimension = 0;       // n; matrices are (n+1) x (n+1)
    long base_degree = 0;     // m = deg_K(lambda)
    std::map<std::string, bool> verification;

    long field() const { return form.field; }
    bool ok() const {
        for (const auto& [k, v] : verification)
            if (!v)
                return false;
        return true;
    }
};

namespace detail {

inline QuadExt determinant(const QMatrix& m) {
    QPoly chi = detail::as_quad(m.charpoly());
    QuadExt c0 = chi.coeff(0);
    return m.rows() % 2 == 0 ? c0 : -c0;
}

/// Exact checks shared by base and extended data.
inline void recompute_verification(LatticeData& L) {
    const QMatrix& A = L.form.gram;
    const QMatrix& C = L.companion;
    auto& v = L.verification;
    v.clear();
    v["C^T A C = A"] = verify_form_preservation(C, A);
    v["det C = 1"] = determinant(C) == QuadExt(1);
    v["A admissible"] = L.form.admissible;
    if (!L.sqrt)
        return;
    const SqrtPart& s = *L.sqrt;
    QMatrix B0 = s.sqrt_alpha_d();
    QuadExt alpha = s.alpha;
    v["D^2 = C"] = B0 * B0 == alpha * C;
    v["D^T A D = A"] = B0.transpose() * A * B0 == alpha * A;
    v["sqrt(b) D integral"] = s.B.is_integral();
    v["B^2 = b C"] = s.B * s.B == s.b * C;
    // det(sqrt(alpha) D) = alpha^((n+1)/2) det D
    QuadExt pw(1);
    for (std::size_t i = 0; i < C.rows() / 2; ++i)
        pw = pw * alpha;
    QuadExt dB = determinant(B0);
    v["det D = +-1"] = C.rows() % 2 == 0 && (dB == pw || dB == -pw);
}

using CMat = std::vector<std::vector<ComplexBall>>;

/// Solves a X = b by ball Gaussian elimination; nullopt when a pivot ball contains zero.
inline std::optional<CMat> ball_solve(CMat a, CMat b) {
    const std::size_t n = a.size(), k = b.front().size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t i = col + 1; i < n; ++i)
            if (a[i][col].center_abs_lower() > a[piv][col].center_abs_lower())
                piv = i;
        if (a[piv][col].contains_zero())
            return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        ComplexBall inv = a[col][col].inverse();
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col)
                continue;
            ComplexBall f = a[i][col] * inv;
            for (std::size_t j = col; j < n; ++j)
                a[i][j] = a[i][j] - f * a[col][j];
            for (std::size_t j = 0; j < k; ++j)
                b[i][j] = b[i][j] - f * b[col][j];
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        ComplexBall inv = a[i][i].inverse();
        for (std::size_t j = 0; j < k; ++j)
            b[i][j] = b[i][j] * inv;
    }
    return b;
}

/// Roots of q = E + sqrt(alpha) O under one real embedding of K.
inline RootSet witness_roots(const SqrtWitness& w, bool conjugate, long bits, const PrecisionPolicy& policy) {
    CoeffBallFn f = [w, conjugate](long prec) {
        RealBall ra = w.alpha.to_ball(prec + 16, conjugate).sqrt().with_prec(prec);
        std::vector<ComplexBall> out;
        for (std::size_t i = 0; i < w.q_even.size(); ++i) {
            RealBall c = w.q_even[i].to_ball(prec + 16, conjugate).with_prec(prec) +
                         ra * w.q_odd_scaled[i].to_ball(prec + 16, conjugate).with_prec(prec);
            out.emplace_back(c);
        }
        return out;
    };
    IsolationOptions opt;
    opt.target_bits = bits;
    opt.policy = policy;
    return isolate_roots(f, opt);
}

/// sqrt(alpha) V^-1 S V with V_kj = (s_k^2)^j; nullopt when the enclosure is too coarse.
inline std::optional<std::vector<std::vector<RealBall>>> numeric_sqrt_alpha_d(const SqrtWitness& w, bool conjugate, long bits,
                                                                               const PrecisionPolicy& policy) {
    RootSet rs = witness_roots(w, conjugate, bits, policy);
    const std::size_t m = rs.size();
    const long prec = rs.prec;
    CMat V(m, std::vector<ComplexBall>(m)), SV = V;
    for (std::size_t k = 0; k < m; ++k) {
        ComplexBall r = rs.roots[k] * rs.roots[k];
        ComplexBall pw = ComplexBall::exact(Dyadic(1), Dyadic(), prec);
        for (std::size_t j = 0; j < m; ++j) {
            V[k][j] = pw;
            SV[k][j] = rs.roots[k] * pw;
            pw = pw * r;
        }
    }
    auto X = ball_solve(V, SV);
    if (!X)
        return std::nullopt;
    RealBall ra = w.alpha.to_ball(prec, conjugate).sqrt();
    std::vector<std::vector<RealBall>> out(m, std::vector<RealBall>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            ComplexBall e = (*X)[i][j] * ra;
            if (!e.meets_real_axis())
                throw DomainError("sqrt(alpha) D is not real: witness roots are inconsistent");
            out[i][j] = RealBall(e.re, e.rad, prec);
        }
    return out;
}

/// Integer N with N * sqrt(alpha) D over o_K: sqrt(alpha) D = -e(C) o(C)^-1, so |N(det o(C))| works
/// once e and o are scaled into o_K.
inline Int denominator_bound(const SqrtWitness& w, const QMatrix& C) {
    Int den = 1;
    for (const auto& c : w.q_even)
        den = lcm(den, c.denominator_in_ok());
    for (const auto& c : w.q_odd_scaled)
        den = lcm(den, c.denominator_in_ok());
    std::vector<QuadExt> oc;
    for (std::size_t i = 1; i < w.q_odd_scaled.size(); i += 2)
        oc.push_back(w.q_odd_scaled[i] * QuadExt(Rat(den)));
    QMatrix oC = C.eval_poly(QPoly(oc));
    QuadExt delta = determinant(oC);
    if (delta.is_zero())
        throw DomainError("o(C) is singular: witness does not come from a square-free p");
    Rat nm = delta.norm();
    if (w.field == 0)
        nm = delta.a();
    if (!is_integer(nm))
        throw DomainError("det o(C) is not integral");
    return abs(nm.get_num());
}

} // namespace detail

/// A, C and verification bits without a square root.
inline LatticeData lattice_from_minpoly(const QPoly& p, long d = 0) {
    LatticeData L;
    L.form = gram_from_minpoly(p, d);
    L.companion = companion(p, d);
    L.base_degree = p.degree();
    L.dimension = p.degree() - 1;
    detail::recompute_verification(L);
    return L;
}

/// D from the witness: V^-1 S V at ball precision, N * sqrt(alpha) D rounded into o_K for a proven
/// denominator bound N, then every identity checked exactly. Throws if any check fails.
inline LatticeData sqrt_matrix(const QPoly& p_in, const SqrtWitness& w, const PrecisionPolicy& policy = default_precision()) {
    const long d = w.field;
    QPoly p = detail::in_field(p_in, d);
    if (!(p == detail::in_field(w.base_poly, d)))
        throw DomainError("witness belongs to a different polynomial");
    if (!w.check())
        throw DomainError("witness does not verify");
    LatticeData L = lattice_from_minpoly(p, d);
    const std::size_t m = static_cast<std::size_t>(p.degree());
    Int N = detail::denominator_bound(w, L.companion);

    QMatrix B0(m, m);
    for (long bits = 96;; bits *= 2) {
        if (bits + 64 > policy.cap_bits)
            throw PrecisionExhausted("sqrt(alpha) D did not round uniquely below the precision cap");
        auto id = detail::numeric_sqrt_alpha_d(w, false, bits, policy);
        std::optional<std::vector<std::vector<RealBall>>> cj;
        if (d != 0)
            cj = detail::numeric_sqrt_alpha_d(w, true, bits, policy);
        if (!id || (d != 0 && !cj))
            continue;
        bool ambiguous = false;
        const long prec = (*id)[0][0].prec;
        RealBall Nb = RealBall::from_rat(Rat(N), prec);
        for (std::size_t i = 0; i < m && !ambiguous; ++i)
            for (std::size_t j = 0; j < m && !ambiguous; ++j) {
                RealBall e = (*id)[i][j] * Nb;
                QuadExt val;
                if (d == 0) {
                    bool amb = false;
                    auto v = round_to_integer(e, amb);
                    if (!v) {
                        ambiguous = true;
                        break;
                    }
                    val = QuadExt(Rat(*v));
                } else {
                    auto r = detail::round_to_ok(e, (*cj)[i][j] * Nb, d, val);
                    if (r != detail::Rounded::Ok) {
                        ambiguous = true;
                        break;
                    }
                }
                B0(i, j) = (val * QuadExt(Rat(1) / Rat(N))).in_field(d);
            }
        if (!ambiguous)
            break;
    }

    SqrtPart s;
    s.witness = w;
    s.alpha = w.alpha.in_field(d);
    s.m_prime = B0.integral_denominator();
    s.B = QuadExt(Rat(s.m_prime)).in_field(d) * B0;
    s.b = (QuadExt(Rat(s.m_prime * s.m_prime)) * s.alpha).in_field(d);
    L.sqrt = s;
    detail::recompute_verification(L);

    // largest-modulus eigenvalue of D is sqrt(lambda)
    RootSet qr = detail::witness_roots(w, false, 60, policy);
    RootSet pr = isolate_roots(p, IsolationOptions{60, policy});
    std::size_t top_q = 0, top_p = 0;
    for (std::size_t i = 1; i < qr.size(); ++i)
        if (qr.roots[i].center_abs_upper() > qr.roots[top_q].center_abs_upper())
            top_q = i;
    for (std::size_t i = 1; i < pr.size(); ++i)
        if (pr.roots[i].center_abs_upper() > pr.roots[top_p].center_abs_upper())
            top_p = i;
    RealBall sl = RealBall(pr.roots[top_p].re, pr.roots[top_p].rad, pr.prec).sqrt();
    L.verification["top eigenvalue of D = sqrt(lambda)"] = qr.roots[top_q].overlaps(ComplexBall(sl));

    if (!L.ok())
        throw DomainError("sqrt_matrix: exact verification failed");
    return L;
}

/// Pads to (n+1) x (n+1). Without a square root: leading identity block. With one: (n+1-m)/2
/// leading blocks sqrt(alpha) D_1 = [[0,-alpha],[1,0]], C_1 = -I, A_1 = diag(1, alpha).
inline LatticeData extend_to_dimension(const LatticeData& base, long n) {
    const long m = base.base_degree;
    if (n < m - 1)
        throw DomainError("dimension n must satisfy n >= deg_K(lambda) - 1");
    if (n == base.dimension)
        return base;
    if (base.dimension != m - 1)
        throw DomainError("extend_to_dimension expects base data");
    const long d = base.field();
    const QuadExt one = QuadExt(1).in_field(d), zero = QuadExt(0).in_field(d);
    LatticeData L = base;
    L.dimension = n;
    const std::size_t pad = static_cast<std::size_t>(n + 1 - m);
    if (!base.sqrt) {
        QMatrix I = QMatrix::identity(pad, one);
        L.form = analyse_form(direct_sum(I, base.form.gram), d);
        L.companion = direct_sum(I, base.companion);
    } else {
        if (n % 2 == 0 || pad % 2 != 0)
            throw DomainError("half-length extension needs n odd and n+1-m even");
        const SqrtPart& s = *base.sqrt;
        QuadExt mp = QuadExt(Rat(s.m_prime)).in_field(d);
        QMatrix A1{{one, zero}, {zero, s.alpha}};
        QMatrix C1{{-one, zero}, {zero, -one}};
        QMatrix B1{{zero, -(mp * s.alpha)}, {mp, zero}};
        QMatrix A = base.form.gram, C = base.companion, B = s.B;
        for (std::size_t k = 0; k < pad / 2; ++k) {
            A = direct_sum(A1, A);
            C = direct_sum(C1, C);
            B = direct_sum(B1, B);
        }
        L.form = analyse_form(A, d);
        L.companion = C;
        L.sqrt->B = B;
    }
    detail::recompute_verification(L);
    if (base.verification.count("top eigenvalue of D = sqrt(lambda)"))
        L.verification["top eigenvalue of D = sqrt(lambda)"] = base.verification.at("top eigenvalue of D = sqrt(lambda)");
    return L;
}

enum class RealizeMode { Length, HalfLength };

struct Realization {
    SalemCertificate cert;
    long field = 0;
    QPoly minpoly;                       // minimal polynomial of lambda over K
    std::optional<SqrtVerdict> sqrt_verdict;
    LatticeData lattice;
    IsometryReport isometry;
};

/// Minimal polynomial of lambda over Q(sqrt d) (d = 0: over Q), via the K-factor of the trace
/// polynomial vanishing at lambda + 1/lambda.
inline QPoly minimal_polynomial_over(const SalemCertificate& cert, long d, const PrecisionPolicy& policy = default_precision()) {
    if (!cert.is_salem())
        throw DomainError("not a Salem certificate");
    QPoly p = to_quad_poly(cert.poly);
    if (d == 0)
        return p;
    QPoly g = to_quad_poly(trace_polynomial(cert.poly));
    auto fs = factor_over_quadratic(g, d, policy);
    const long prec = cert.lambda.prec;
    RealBall t1 = cert.lambda + cert.roots.real_ball(cert.inverse_index);
    std::optional<QPoly> hit;
    for (const auto& f : fs) {
        RealBall v = RealBall::exact(Dyadic(), prec);
        const auto& cs = f.factor.coeffs();
        for (std::size_t i = cs.size(); i-- > 0;)
            v = v * t1 + cs[i].to_ball(prec);
        if (v.contains_zero()) {
            if (hit)
                throw PrecisionExhausted("two K-factors vanish at lambda + 1/lambda");
            hit = f.factor;
        }
    }
    if (!hit)
        throw DomainError("no K-factor vanishes at lambda + 1/lambda");
    if (hit->degree() == g.degree())
        throw DomainError("Q(sqrt " + std::to_string(d) + ") is not a subfield of Q(lambda + 1/lambda)");
    return untrace(*hit);
}

/// lambda = e^l(gamma) (Length) or lambda^(1/2) = e^l(gamma) (HalfLength) for a hyperbolic gamma
/// in O'(f, o_K) with f of dimension n+1. `witness` overrides the preferred square-root witness.
inline Realization realize_salem_as_length(const SalemCertificate& cert, long d, long n, RealizeMode mode,
                                           const std::optional<SqrtWitness>& witness = std::nullopt,
                                           const PrecisionPolicy& policy = default_precision()) {
    Realization R;
    R.cert = cert;
    R.field = d;
    R.minpoly = minimal_polynomial_over(cert, d, policy);
    const long m = R.minpoly.degree();
    if (m > n + 1)
        throw DomainError("deg_K(lambda) = " + std::to_string(m) + " exceeds n+1 = " + std::to_string(n + 1));
    if (mode == RealizeMode::Length) {
        R.lattice = extend_to_dimension(lattice_from_minpoly(R.minpoly, d), n);
        R.isometry = classify_isometry(R.lattice.companion, R.lattice.form.gram, false, policy);
    } else {
        if (n % 2 == 0)
            throw DomainError("half-length realization needs n odd");
        SqrtWitness w;
        if (witness) {
            w = *witness;
        } else {
            SignSearchOptions so;
            so.policy = policy;
            R.sqrt_verdict = sign_enumeration_search(R.minpoly, d, so);
            if (R.sqrt_verdict->status != SqrtStatus::Sqrtable)
                throw DomainError("lambda is not square-rootable over the chosen field: " + R.sqrt_verdict->reason);
            w = R.sqrt_verdict->preferred();
        }
        R.lattice = extend_to_dimension(sqrt_matrix(R.minpoly, w, policy), n);
        const SqrtPart& s = *R.lattice.sqrt;
        QMatrix C = QuadExt(Rat(1)) / s.b * (s.B * s.B);
        if (!(C == R.lattice.companion))
            throw DomainError("D^2 differs from C after extension");
        R.isometry = classify_isometry(C, R.lattice.form.gram, true, policy);
    }
    if (!R.lattice.ok())
        throw DomainError("lattice verification failed");
    R.isometry.salem_lambda = cert;
    return R;
}

} // namespace salem
