// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "salem/numbers/classify.hpp"
#include "salem/numbers/trace.hpp"
#include "salem/sqrtable/square_class.hpp"

namespace salem {

/// q(x) = E(x) + sqrt(alpha) O(x) with E even, O odd, both over K.
/// Stored as `q_even[i]` = coefficient of x^i for even i, `q_odd_scaled[i]` for odd i (zero elsewhere).
struct SqrtWitness {
    QPoly base_poly;
    long field = 0;
    QuadExt alpha;
    std::vector<QuadExt> q_even;
    std::vector<QuadExt> q_odd_scaled;
    bool verified = false;
    bool alpha_integral = false;
    bool alpha_class_searched = true;
    std::vector<int> signs;

    QPoly even_poly() const { return QPoly(q_even); }
    QPoly odd_poly() const { return QPoly(q_odd_scaled); }

    /// q(x)q(-x) = E^2 - alpha O^2 must equal p(x^2); plus monic, palindromic, alpha totally positive.
    bool check() const {
        QPoly E = even_poly(), O = odd_poly();
        for (std::size_t i = 0; i < q_even.size(); i += 2)
            if (i + 1 < q_even.size() && !q_even[i + 1].is_zero())
                return false;
        for (std::size_t i = 0; i < q_odd_scaled.size(); i += 2)
            if (!q_odd_scaled[i].is_zero())
                return false;
        if (!alpha.is_totally_positive())
            return false;
        std::size_t m = static_cast<std::size_t>(base_poly.degree());
        if (E.coeff(m) != QuadExt(1) || !(O.degree() < static_cast<long>(m)))
            return false;
        for (std::size_t i = 0; i <= m; ++i) {
            QuadExt a = (i % 2 == 0) ? E.coeff(i) : O.coeff(i);
            QuadExt b = (i % 2 == 0) ? E.coeff(m - i) : O.coeff(m - i);
            if (a != b)
                return false;
        }
        QPoly lhs = E * E - QPoly::constant(alpha) * O * O;
        return lhs == base_poly.compose_x_squared();
    }

    /// Human-readable q with sqrt(alpha) written symbolically.
    std::string q_string() const {
        std::string ra = alpha.is_rational() ? alpha.to_string() : "(" + alpha.to_string() + ")";
        std::string out;
        std::size_t m = std::max(q_even.size(), q_odd_scaled.size());
        for (std::size_t k = m; k-- > 0;) {
            bool odd = k % 2 == 1;
            QuadExt c = odd ? (k < q_odd_scaled.size() ? q_odd_scaled[k] : QuadExt()) : (k < q_even.size() ? q_even[k] : QuadExt());
            if (c.is_zero())
                continue;
            std::string s = c.to_string();
            bool compound = s.find_first_of("+-", 1) != std::string::npos;
            bool neg = !compound && s[0] == '-';
            if (neg)
                s.erase(0, 1);
            if (compound)
                s = "(" + s + ")";
            std::string coef;
            if (odd)
                coef = (s == "1" ? "" : s + "*") + "sqrt" + (alpha.is_rational() ? "(" + alpha.to_string() + ")" : ra);
            else
                coef = s;
            std::string term;
            if (k == 0)
                term = coef;
            else
                term = ((coef == "1") ? std::string() : coef + "*") + "x" + (k > 1 ? "^" + std::to_string(k) : "");
            if (out.empty())
                out = (neg ? "-" : "") + term;
            else
                out += (neg ? " - " : " + ") + term;
        }
        return out;
    }
};

enum class SqrtStatus { Sqrtable, NotSqrtable, Undecided };

inline std::string to_string(SqrtStatus s) {
    switch (s) {
    case SqrtStatus::Sqrtable:
        return "square-rootable";
    case SqrtStatus::NotSqrtable:
        return "not-square-rootable";
    case SqrtStatus::Undecided:
        return "undecided";
    }
    return "undecided";
}

struct NecessaryConditions {
    long degree = 0;
    QuadExt value_at_minus_one;
    /// m = 0 mod 4: p(-1) must be a square in o_K. m = 2 mod 4: p(-1) = alpha k^2 forces p(-1) totally positive.
    bool passes = false;
    std::optional<QuadExt> square_root; // k with k^2 = p(-1), when it exists
    std::string detail;
};

struct SqrtVerdict {
    SqrtStatus status = SqrtStatus::Undecided;
    std::vector<SqrtWitness> witnesses;
    NecessaryConditions necessary;
    std::size_t candidates_examined = 0;
    std::string method;
    std::string reason;

    /// Default witness: smallest max over real embeddings of alpha.
    const SqrtWitness& preferred() const {
        if (witnesses.empty())
            throw DomainError("no square-rootability witness");
        const SqrtWitness* best = &witnesses.front();
        auto key = [](const SqrtWitness& w) { return std::max(w.alpha.to_double(), w.alpha.conj().to_double()); };
        for (const auto& w : witnesses)
            if (key(w) < key(*best))
                best = &w;
        return *best;
    }
};

namespace detail {

inline QPoly in_field(const QPoly& p, long d) {
    return p.map<QuadExt>([d](const QuadExt& a) { return a.in_field(d); });
}

inline void check_salem_shape(const QPoly& p) {
    if (!p.is_monic() || p.degree() < 2 || p.degree() % 2 != 0 || !p.is_palindromic())
        throw DomainError("expected a monic palindromic polynomial of even degree");
}

/// Splits q = E + sqrt(alpha) O given every coefficient as a K element and the odd ones
/// already divided by sqrt(alpha).
inline SqrtWitness make_witness(const QPoly& p, long d, const QuadExt& alpha, std::vector<QuadExt> even,
                                std::vector<QuadExt> odd_scaled, std::vector<int> signs = {}) {
    SqrtWitness w;
    w.base_poly = p;
    w.field = d;
    w.alpha = alpha.in_field(d);
    std::size_t m = static_cast<std::size_t>(p.degree());
    even.resize(m + 1, QuadExt());
    odd_scaled.resize(m + 1, QuadExt());
    for (std::size_t i = 0; i <= m; ++i) {
        if (i % 2 == 0)
            odd_scaled[i] = QuadExt();
        else
            even[i] = QuadExt();
        even[i] = even[i].in_field(d);
        odd_scaled[i] = odd_scaled[i].in_field(d);
    }
    w.q_even = std::move(even);
    w.q_odd_scaled = std::move(odd_scaled);
    w.signs = std::move(signs);
    w.verified = w.check();
    w.alpha_integral = w.alpha.is_integral();
    return w;
}

/// Rewrites a witness with alpha replaced by its square-class representative (alpha = f^2 a').
inline SqrtWitness normalize_witness(const SqrtWitness& w, const SquareClassOptions& opt) {
    SquareClass sc = reduce_square_class(w.alpha, w.field, opt);
    if (sc.factor.sign() < 0)
        sc.factor = -sc.factor;
    std::vector<QuadExt> odd = w.q_odd_scaled;
    for (auto& c : odd)
        c = c * sc.factor;
    SqrtWitness out = make_witness(w.base_poly, w.field, sc.reduced, w.q_even, odd, w.signs);
    out.alpha_class_searched = sc.searched;
    return out;
}

inline bool same_witness(const SqrtWitness& a, const SqrtWitness& b) {
    return a.alpha == b.alpha && a.even_poly() == b.even_poly() && a.odd_poly() == b.odd_poly();
}

/// Flips the odd part when needed so that sqrt(lambda) (lambda the largest real root) is a root of q.
inline void orient_witness(SqrtWitness& w) {
    QPoly g = trace_polynomial(w.base_poly);
    IsolationOptions opt;
    opt.target_bits = 120;
    RootSet rs = isolate_roots(g, opt);
    std::optional<RealBall> t1;
    for (std::size_t i = 0; i < rs.size(); ++i)
        if (rs.certified_real(i) && (!t1 || rs.real_ball(i).mid > t1->mid))
            t1 = rs.real_ball(i);
    if (!t1)
        throw DomainError("trace polynomial has no real root");
    const long prec = t1->prec;
    RealBall y1 = (*t1 + RealBall::exact(Dyadic(2), prec)).sqrt();
    RealBall s = (y1 + (*t1 - RealBall::exact(Dyadic(2), prec)).sqrt()) * RealBall::exact(Dyadic(Int(1), -1), prec);
    RealBall ra = w.alpha.to_ball(prec).sqrt();
    auto eval = [&](const std::vector<QuadExt>& c) {
        RealBall acc = RealBall::exact(Dyadic(), prec);
        for (std::size_t i = c.size(); i-- > 0;)
            acc = acc * s + c[i].to_ball(prec);
        return acc;
    };
    RealBall q = eval(w.q_even) + ra * eval(w.q_odd_scaled);
    if (q.contains_zero())
        return;
    for (auto& c : w.q_odd_scaled)
        c = -c;
    for (auto& e : w.signs)
        e = -e;
}

} // namespace detail

/// Necessary conditions on p(-1).
inline NecessaryConditions necessary_conditions(const QPoly& p_in, long d = 0) {
    QPoly p = detail::in_field(p_in, d);
    detail::check_salem_shape(p);
    NecessaryConditions nc;
    nc.degree = p.degree();
    nc.value_at_minus_one = p.eval(QuadExt(-1).in_field(d));
    if (nc.degree % 4 == 0) {
        auto r = nc.value_at_minus_one.sqrt();
        if (r && r->is_integral()) {
            nc.square_root = *r;
            nc.passes = true;
            nc.detail = "p(-1) = " + nc.value_at_minus_one.to_string() + " = (" + r->to_string() + ")^2";
        } else {
            nc.detail = "p(-1) = " + nc.value_at_minus_one.to_string() + " is not a square in o_K";
        }
    } else {
        nc.passes = nc.value_at_minus_one.is_totally_positive();
        if (auto r = nc.value_at_minus_one.sqrt())
            nc.square_root = *r;
        nc.detail = nc.passes ? "alpha must lie in the square class of p(-1) = " + nc.value_at_minus_one.to_string()
                              : "p(-1) = " + nc.value_at_minus_one.to_string() + " is not totally positive";
    }
    return nc;
}
inline NecessaryConditions necessary_conditions(const IntPoly& p) { return necessary_conditions(to_quad_poly(p), 0); }

/// x^2 - t x + 1 (or x^2 + t x + 1 with t > 2, normalized) is square-rootable via t + 2.
inline SqrtWitness degree2_canonical(const QPoly& p_in, long d = 0) {
    QPoly p = detail::in_field(p_in, d);
    if (p.degree() != 2 || !p.is_monic() || !p.is_palindromic())
        throw DomainError("degree2_canonical needs x^2 - t x + 1");
    QuadExt t = -p.coeff(1);
    if (t < QuadExt(-2)) {
        // other sign convention: x^2 + t x + 1 with t > 2
        t = -t;
    }
    if (!(t > QuadExt(2)))
        throw DomainError("degree2_canonical needs |t| > 2");
    QPoly canon({QuadExt(1).in_field(d), -t, QuadExt(1).in_field(d)});
    QuadExt alpha = t + QuadExt(2);
    return detail::make_witness(canon, d, alpha, {QuadExt(1), QuadExt(), QuadExt(1)}, {QuadExt(), QuadExt(-1), QuadExt()}, {1});
}

/// Quartic criterion: p = x^4 + a x^3 + b x^2 + a x + 1 is square-rootable iff p(-1) = k^2 with k > 0 in
/// o_K and 4 - a +- 2k totally positive. Each valid sign yields alpha = 4 - a +- 2k, d = 2 +- k, c^2 = alpha.
inline SqrtVerdict degree4_criterion(const QPoly& p_in, long d = 0) {
    QPoly p = detail::in_field(p_in, d);
    detail::check_salem_shape(p);
    if (p.degree() != 4)
        throw DomainError("degree4_criterion needs a quartic");
    SqrtVerdict v;
    v.method = "quartic criterion";
    v.necessary = necessary_conditions(p, d);
    v.candidates_examined = 2;
    if (!v.necessary.square_root || !v.necessary.passes) {
        v.status = SqrtStatus::NotSqrtable;
        v.reason = v.necessary.detail;
        return v;
    }
    QuadExt a = p.coeff(3);
    QuadExt k = *v.necessary.square_root;
    if (k.sign() < 0)
        k = -k;
    for (int s : {1, -1}) {
        QuadExt alpha = QuadExt(4) - a + QuadExt(2 * s) * k;
        if (!alpha.is_totally_positive())
            continue;
        QuadExt dd = QuadExt(2) + QuadExt(s) * k;
        // q = x^4 + c x^3 + dd x^2 + c x + 1 with c = -sqrt(alpha) so that sqrt(lambda) is a root
        SqrtWitness w = detail::make_witness(p, d, alpha, {QuadExt(1), QuadExt(), dd, QuadExt(), QuadExt(1)},
                                             {QuadExt(), QuadExt(-1), QuadExt(), QuadExt(-1), QuadExt()}, {s});
        detail::orient_witness(w);
        if (w.verified)
            v.witnesses.push_back(w);
    }
    v.status = v.witnesses.empty() ? SqrtStatus::NotSqrtable : SqrtStatus::Sqrtable;
    v.reason = v.witnesses.empty() ? "no sign gives a totally positive alpha" : "quartic criterion satisfied";
    return v;
}

struct SignSearchOptions {
    SquareClassOptions square_class;
    PrecisionPolicy policy = default_precision();
    /// Skip the search when the necessary condition already fails.
    bool use_filter = false;
    /// Keep the raw alpha (square of an odd coefficient) instead of its square-class representative.
    bool normalize_alpha = true;
};

namespace detail {

/// Both real embeddings of a product prod_j (x^2 - eps_j y_j x + 1).
inline std::vector<RealBall> product_from_signs(const std::vector<RealBall>& y, const std::vector<int>& eps, long prec) {
    std::vector<RealBall> c{RealBall::exact(Dyadic(1), prec)};
    for (std::size_t j = 0; j < y.size(); ++j) {
        RealBall b = eps[j] > 0 ? -y[j] : y[j];
        std::vector<RealBall> next(c.size() + 2, RealBall::exact(Dyadic(), prec));
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i] = next[i] + c[i];
            next[i + 1] = next[i + 1] + c[i] * b;
            next[i + 2] = next[i + 2] + c[i];
        }
        c = std::move(next);
    }
    return c;
}

enum class Rounded { Ok, NoLattice, Ambiguous };

/// Element of o_K whose two embeddings lie in the given balls (d = 0: an integer).
inline Rounded round_to_ok(const RealBall& e, const std::optional<RealBall>& e_conj, long d, QuadExt& out) {
    bool amb = false;
    if (d == 0) {
        auto v = round_to_integer(e, amb);
        if (!v)
            return amb ? Rounded::Ambiguous : Rounded::NoLattice;
        out = QuadExt(*v);
        return Rounded::Ok;
    }
    // e = (X + Y sqrt d)/2: X = e + e', Y = (e - e')/sqrt(d)
    RealBall sd = RealBall::exact(Dyadic(d), e.prec).sqrt();
    RealBall X = e + *e_conj;
    RealBall Y = (e - *e_conj) / sd;
    auto xv = round_to_integer(X, amb);
    bool amb2 = false;
    auto yv = round_to_integer(Y, amb2);
    if (!xv || !yv)
        return (amb || amb2) ? Rounded::Ambiguous : Rounded::NoLattice;
    QuadExt cand(Rat(*xv, 2), Rat(*yv, 2), d);
    if (!cand.is_integral())
        return Rounded::NoLattice;
    out = cand;
    return Rounded::Ok;
}

/// One candidate: identity-side sign vector `eps`, conjugate side `eps_c` (empty over Q).
inline Rounded try_candidate(const QPoly& p, long d, const std::vector<RealBall>& y, const std::vector<RealBall>& yc,
                             const std::vector<int>& eps, const std::vector<int>& eps_c, long prec,
                             std::optional<SqrtWitness>& result) {
    std::vector<RealBall> c = product_from_signs(y, eps, prec);
    std::optional<std::vector<RealBall>> cc;
    if (d != 0)
        cc = product_from_signs(yc, eps_c, prec);
    const std::size_t m = c.size() - 1;
    auto conj_at = [&](std::size_t i) -> std::optional<RealBall> {
        if (!cc)
            return std::nullopt;
        return (*cc)[i];
    };

    std::vector<QuadExt> even(m + 1), odd(m + 1);
    bool ambiguous = false;
    for (std::size_t i = 0; i <= m; i += 2) {
        Rounded r = round_to_ok(c[i], conj_at(i), d, even[i]);
        if (r == Rounded::NoLattice)
            return r;
        ambiguous = ambiguous || r == Rounded::Ambiguous;
    }
    // pivot: odd index with the largest identity-side coefficient
    std::optional<std::size_t> piv;
    for (std::size_t i = 1; i <= m; i += 2)
        if (!c[i].contains_zero() && (!piv || c[i].mid.abs() > c[*piv].mid.abs()))
            piv = i;
    if (!piv) {
        // every odd coefficient may vanish: then q = E and alpha is arbitrary; use alpha = 1
        for (std::size_t i = 1; i <= m; i += 2) {
            QuadExt z;
            Rounded r = round_to_ok(c[i], conj_at(i), d, z);
            if (r != Rounded::Ok)
                return r;
            if (!z.is_zero())
                return Rounded::Ambiguous;
        }
        if (ambiguous)
            return Rounded::Ambiguous;
        SqrtWitness w = make_witness(p, d, QuadExt(1), even, odd, eps);
        if (w.verified)
            result = w;
        return Rounded::Ok;
    }
    QuadExt alpha;
    {
        std::optional<RealBall> sc;
        if (cc)
            sc = (*cc)[*piv] * (*cc)[*piv];
        Rounded r = round_to_ok(c[*piv] * c[*piv], sc, d, alpha);
        if (r == Rounded::NoLattice)
            return r;
        ambiguous = ambiguous || r == Rounded::Ambiguous;
    }
    int s0 = c[*piv].positive() ? 1 : -1;
    for (std::size_t i = 1; i <= m; i += 2) {
        std::optional<RealBall> pc;
        if (cc)
            pc = (*cc)[i] * (*cc)[*piv];
        QuadExt prod;
        Rounded r = round_to_ok(c[i] * c[*piv], pc, d, prod);
        if (r == Rounded::NoLattice)
            return r;
        ambiguous = ambiguous || r == Rounded::Ambiguous;
        if (r == Rounded::Ok && !alpha.is_zero())
            odd[i] = QuadExt(s0) * prod / alpha;
    }
    if (ambiguous)
        return Rounded::Ambiguous;
    if (alpha.is_zero() || !alpha.is_totally_positive())
        return Rounded::NoLattice;
    std::vector<int> signs = eps;
    signs.insert(signs.end(), eps_c.begin(), eps_c.end());
    SqrtWitness w = make_witness(p, d, alpha, even, odd, signs);
    if (w.verified)
        result = w;
    return Rounded::Ok;
}

/// Sorted real roots of a real-rooted polynomial with the largest first.
inline std::optional<std::vector<RealBall>> real_roots_desc(const QPoly& g, long bits, bool conjugate, const PrecisionPolicy& policy) {
    IsolationOptions opt;
    opt.target_bits = bits;
    opt.policy = policy;
    RootSet rs = isolate_roots(g, opt, conjugate);
    std::vector<RealBall> out;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (!rs.certified_real(i))
            return std::nullopt;
        out.push_back(rs.real_ball(i));
    }
    std::sort(out.begin(), out.end(), [](const RealBall& a, const RealBall& b) { return a.mid > b.mid; });
    return out;
}

} // namespace detail

/// Exhaustive search over square-root sign choices. Over Q there are 2^(l-1) candidates
/// (the sign for lambda is fixed so that sqrt(lambda) is a root of q); over Q(sqrt d) the
/// conjugate embedding contributes another 2^(l-1) choices.
inline SqrtVerdict sign_enumeration_search(const QPoly& p_in, long d = 0, const SignSearchOptions& opt = {}) {
    QPoly p = detail::in_field(p_in, d);
    detail::check_salem_shape(p);
    if (d == 0)
        for (const auto& a : p.coeffs())
            if (!a.is_rational() || !is_integer(a.a()))
                throw DomainError("over Q the polynomial must have integer coefficients");
    for (const auto& a : p.coeffs())
        if (!a.is_integral())
            throw DomainError("coefficients must lie in o_K");

    SqrtVerdict v;
    v.method = d == 0 ? "sign enumeration over Q" : "sign enumeration over Q(sqrt " + std::to_string(d) + ")";
    v.necessary = necessary_conditions(p, d);
    if (opt.use_filter && !v.necessary.passes) {
        v.status = SqrtStatus::NotSqrtable;
        v.reason = "necessary condition fails: " + v.necessary.detail;
        return v;
    }
    QPoly g = trace_polynomial(p);
    const std::size_t l = static_cast<std::size_t>(g.degree());

    for (long bits = 96;; bits *= 2) {
        if (bits + 64 > opt.policy.cap_bits) {
            v.status = SqrtStatus::Undecided;
            v.reason = "precision cap reached with ambiguous rounding";
            return v;
        }
        auto t = detail::real_roots_desc(g, bits, false, opt.policy);
        if (!t)
            throw DomainError("trace polynomial has non-real roots: not a Salem minimal polynomial");
        std::optional<std::vector<RealBall>> tc;
        if (d != 0) {
            tc = detail::real_roots_desc(g, bits, true, opt.policy);
            if (!tc)
                throw DomainError("conjugate trace polynomial has non-real roots");
        }
        auto shifted_sqrt = [](const std::vector<RealBall>& ts) {
            std::vector<RealBall> y;
            for (const auto& x : ts) {
                RealBall s = x + RealBall::exact(Dyadic(2), x.prec);
                if (!s.positive())
                    throw DomainError("trace root not above -2");
                y.push_back(s.sqrt());
            }
            return y;
        };
        std::vector<RealBall> y = shifted_sqrt(*t);
        std::vector<RealBall> yc = tc ? shifted_sqrt(*tc) : std::vector<RealBall>{};
        const long prec = y.front().prec;

        std::size_t count_id = std::size_t(1) << (l - 1);
        std::size_t count_c = d == 0 ? 1 : (std::size_t(1) << (l - 1));
        std::vector<SqrtWitness> found;
        bool ambiguous = false;
        std::size_t visited = 0;
        for (std::size_t mask = 0; mask < count_id; ++mask) {
            std::vector<int> eps(l, 1);
            for (std::size_t j = 1; j < l; ++j)
                eps[j] = (mask >> (j - 1)) & 1U ? -1 : 1;
            for (std::size_t mc = 0; mc < count_c; ++mc) {
                std::vector<int> epsc;
                if (d != 0) {
                    epsc.assign(l, 1);
                    for (std::size_t j = 1; j < l; ++j)
                        epsc[j] = (mc >> (j - 1)) & 1U ? -1 : 1;
                }
                ++visited;
                std::optional<SqrtWitness> w;
                auto r = detail::try_candidate(p, d, y, yc, eps, epsc, prec, w);
                if (r == detail::Rounded::Ambiguous)
                    ambiguous = true;
                if (w)
                    found.push_back(*w);
            }
        }
        if (ambiguous)
            continue;
        v.candidates_examined = visited;
        for (auto& w : found) {
            SqrtWitness nw = opt.normalize_alpha ? detail::normalize_witness(w, opt.square_class) : w;
            if (!nw.verified)
                nw = w;
            bool dup = false;
            for (const auto& e : v.witnesses)
                dup = dup || detail::same_witness(e, nw);
            if (!dup)
                v.witnesses.push_back(nw);
        }
        if (!v.witnesses.empty()) {
            v.status = SqrtStatus::Sqrtable;
            v.reason = std::to_string(v.witnesses.size()) + " verified witness(es)";
        } else {
            v.status = SqrtStatus::NotSqrtable;
            v.reason = "all " + std::to_string(visited) + " sign choices fail";
        }
        return v;
    }
}
inline SqrtVerdict sign_enumeration_search(const IntPoly& p, const SignSearchOptions& opt = {}) {
    return sign_enumeration_search(to_quad_poly(p), 0, opt);
}

struct SqrtDegree {
    long degree = 0;        // deg lambda^(1/2)
    bool sqrt_is_salem = false;
    bool norm_case = false; // degree-2 case with minimal polynomial x^2 - c x - 1
    std::optional<IntPoly> sqrt_poly;
};

/// Degree of sqrt(lambda): searches s(x^2) for a factor of degree deg(lambda) through sqrt(lambda)
/// (one square root per conjugate, complex pairs kept conjugate); otherwise s(x^2) is irreducible.
inline SqrtDegree sqrt_degree_analysis(const SalemCertificate& c) {
    if (!c.is_salem())
        throw DomainError("sqrt_degree_analysis needs a Salem certificate");
    const RootSet& rs = c.roots;
    const long prec = rs.prec;
    SqrtDegree out;
    // square roots of each root: sqrt(lambda) > 0, +-1/sqrt(lambda), and for pairs (z, conj z) a sign
    RealBall sl = c.lambda.sqrt();
    RealBall sli = c.roots.real_ball(c.inverse_index).sqrt();
    std::vector<ComplexBall> pair_roots;
    std::vector<bool> used(rs.size(), false);
    used[c.lambda_index] = used[c.inverse_index] = true;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (used[i])
            continue;
        long j = rs.unique_overlap(rs.roots[i].conj());
        if (j < 0)
            throw PrecisionExhausted("conjugate pairing failed");
        used[i] = used[static_cast<std::size_t>(j)] = true;
        // principal square root of a unit-circle point via half angle: sqrt(z) = (z + 1)/|z + 1| (|z| = 1, z != -1)
        ComplexBall z = rs.roots[i];
        ComplexBall zp1 = z + ComplexBall::exact(Dyadic(1), Dyadic(), prec);
        RealBall n = zp1.abs();
        pair_roots.push_back(zp1 * ComplexBall(n.inverse()));
    }
    const std::size_t np = pair_roots.size();
    const std::size_t d = static_cast<std::size_t>(c.degree());
    for (std::size_t mask = 0; mask < (std::size_t(1) << (np + 1)) && !out.sqrt_poly; ++mask) {
        std::vector<ComplexBall> roots{ComplexBall(sl)};
        ComplexBall inv(sli);
        roots.push_back((mask & 1U) ? -inv : inv);
        for (std::size_t k = 0; k < np; ++k) {
            ComplexBall w = (mask >> (k + 1)) & 1U ? -pair_roots[k] : pair_roots[k];
            roots.push_back(w);
            roots.push_back(w.conj());
        }
        auto coeffs = product_coefficients(roots, prec);
        std::vector<Int> ic;
        bool ok = true;
        for (const auto& b : coeffs) {
            bool amb = false;
            auto v = round_to_integer(b, amb);
            if (!v) {
                ok = false;
                break;
            }
            ic.push_back(*v);
        }
        if (!ok)
            continue;
        IntPoly cand(ic);
        if (static_cast<std::size_t>(cand.degree()) == d && IntPoly::divides(cand, c.poly.compose_x_squared()))
            out.sqrt_poly = cand;
    }
    if (!out.sqrt_poly) {
        out.degree = 2 * c.degree();
        return out;
    }
    out.degree = c.degree();
    SalemCertificate sc = classify_salem(*out.sqrt_poly);
    out.sqrt_is_salem = sc.is_salem();
    if (!out.sqrt_is_salem && d == 2 && out.sqrt_poly->coeff(0) == -1)
        out.norm_case = true;
    return out;
}

} // namespace salem
