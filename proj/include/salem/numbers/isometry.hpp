// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "salem/linalg/matrix.hpp"
#include "salem/numbers/classify.hpp"

namespace salem {

enum class IsometryKind { Elliptic, Parabolic, Hyperbolic };

inline std::string to_string(IsometryKind k) {
    switch (k) {
    case IsometryKind::Elliptic:
        return "elliptic";
    case IsometryKind::Parabolic:
        return "parabolic";
    case IsometryKind::Hyperbolic:
        return "hyperbolic";
    }
    return "elliptic";
}

struct IsometryReport {
    IsometryKind kind = IsometryKind::Elliptic;
    QPoly char_poly;
    /// Eigenvalues that are roots of unity (with multiplicity) vs the rest.
    long deg1 = 0;
    long deg_inf = 0;
    /// Minimal polynomial square-free (diagonalizable over C).
    bool diagonalizable = true;
    std::optional<RealBall> eigenvalue;          // the eigenvalue > 1, hyperbolic only
    std::optional<RealBall> translation_length;  // log of it, halved for square roots
    std::optional<SalemCertificate> salem_lambda;
    long dimension = 0;
};

/// Phi_N over Z.
inline IntPoly cyclotomic_polynomial(unsigned long N) {
    static std::map<unsigned long, IntPoly> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(N);
        if (it != cache.end())
            return it->second;
    }
    IntPoly num = IntPoly::monomial(Int(1), N) - IntPoly::constant(Int(1));
    for (unsigned long e = 1; e < N; ++e)
        if (N % e == 0)
            num = num / cyclotomic_polynomial(e);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(N, num);
    return num;
}

namespace detail {

/// Total multiplicity of root-of-unity roots of a polynomial over Q(sqrt d).
inline long root_of_unity_degree(QPoly h) {
    long n = h.degree();
    long total = 0;
    for (unsigned long N = 1; N <= static_cast<unsigned long>(2 * n * n + 2); ++N) {
        unsigned long ph = euler_phi(N);
        if (ph > static_cast<unsigned long>(n))
            continue;
        QPoly phi = to_quad_poly(cyclotomic_polynomial(N));
        while (h.degree() > 0) {
            QPoly g = poly_gcd(h, phi);
            if (g.degree() <= 0)
                break;
            total += g.degree();
            h = h / g;
        }
    }
    return total;
}

inline QPoly as_quad(const Poly<Rat>& p) { return to_quad_poly(p); }
inline QPoly as_quad(const Poly<QuadExt>& p) { return p; }

} // namespace detail

/// Classifies an isometry M of a Lorentzian form A (over Q or a real quadratic field).
/// `square_root_of` halves the translation length: pass true when M = D^2 and D is reported.
template <class T>
IsometryReport classify_isometry(const Matrix<T>& m, const Matrix<T>& gram, bool square_root_of = false,
                                 const PrecisionPolicy& policy = default_precision()) {
    static_assert(elem::is_field_v<T>, "classify_isometry needs field entries");
    if (m.rows() != gram.rows() || !m.is_square() || !gram.is_square())
        throw DomainError("matrix dimensions do not match");
    if (m.transpose() * gram * m != gram)
        throw DomainError("matrix does not preserve the form");
    Signature sig = signature(gram);
    if (!(sig.zero == 0 && sig.negative == 1))
        throw DomainError("form is not of signature (n,1)");

    IsometryReport r;
    r.dimension = static_cast<long>(m.rows());
    QPoly chi = detail::as_quad(m.charpoly());
    r.char_poly = chi;
    r.deg1 = detail::root_of_unity_degree(chi);
    r.deg_inf = chi.degree() - r.deg1;

    QPoly sqf = chi / poly_gcd(chi, chi.derivative());
    sqf = sqf.monic();
    r.diagonalizable = m.eval_poly(sqf.map<T>([](const QuadExt& a) {
        if constexpr (std::is_same_v<T, Rat>)
            return elem::to_rat(a);
        else
            return a;
    })).is_zero();

    if (r.deg_inf > 0) {
        // Lorentzian isometries have at most one eigenvalue of modulus > 1, and it is real.
        for (long bits = 100;; bits *= 2) {
            IsolationOptions opt;
            opt.target_bits = bits;
            opt.policy = policy;
            RootSet rs = isolate_roots(sqf, opt);
            std::optional<RealBall> big;
            bool undecided = false;
            for (std::size_t i = 0; i < rs.size(); ++i) {
                UnitCircle pos = unit_circle_position(rs.roots[i]);
                if (pos == UnitCircle::Outside) {
                    if (!rs.certified_real(i))
                        throw DomainError("eigenvalue of modulus > 1 is not real");
                    RealBall re = rs.real_ball(i);
                    big = re.negative() ? -re : re;
                } else if (pos == UnitCircle::Undecided && rs.certified_real(i)) {
                    // real roots at +-1 are roots of unity; others must separate at higher precision
                    RealBall re = rs.real_ball(i);
                    bool at_one = re.contains(Dyadic(1)) && elem::is_zero(sqf.eval(QuadExt(1)));
                    bool at_minus_one = re.contains(Dyadic(-1)) && elem::is_zero(sqf.eval(QuadExt(-1)));
                    if (!at_one && !at_minus_one)
                        undecided = true;
                }
            }
            if (big) {
                r.kind = IsometryKind::Hyperbolic;
                RealBall len = log(*big);
                if (square_root_of)
                    len = len * RealBall::exact(Dyadic(Int(1), -1), len.prec);
                r.eigenvalue = *big;
                r.translation_length = len;
                return r;
            }
            if (!undecided)
                break;
            if (bits * 2 > policy.cap_bits)
                throw PrecisionExhausted("could not separate a real eigenvalue from the unit circle");
        }
    }
    r.kind = r.diagonalizable ? IsometryKind::Elliptic : IsometryKind::Parabolic;
    return r;
}

} // namespace salem
