// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "salem/poly/poly.hpp"
#include "salem/poly/roots.hpp"

namespace salem {

template <class T>
struct FactorPower {
    Poly<T> factor;
    unsigned multiplicity = 1;
};

namespace detail {

/// Orbits of complex conjugation on a certified root set of a real polynomial.
inline std::optional<std::vector<std::vector<std::size_t>>> conjugation_orbits(const RootSet& rs) {
    std::vector<std::vector<std::size_t>> orbits;
    std::vector<bool> used(rs.size(), false);
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (used[i])
            continue;
        long j = rs.unique_overlap(rs.roots[i].conj());
        if (j < 0 || used[static_cast<std::size_t>(j)])
            return std::nullopt;
        used[i] = true;
        if (static_cast<std::size_t>(j) == i) {
            orbits.push_back({i});
        } else {
            used[static_cast<std::size_t>(j)] = true;
            orbits.push_back({i, static_cast<std::size_t>(j)});
        }
    }
    return orbits;
}

inline bool int_poly_less(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (long i = a.degree(); i >= 0; --i) {
        auto ai = a.coeff(static_cast<std::size_t>(i)), bi = b.coeff(static_cast<std::size_t>(i));
        if (ai != bi)
            return ai < bi;
    }
    return false;
}

enum class SubsetResult { Found, None, Ambiguous };

/// Splits a monic square-free integer polynomial into irreducible factors by testing products
/// over conjugation-closed root subsets, smallest degree first.
inline SubsetResult split_by_subsets(const IntPoly& p, const RootSet& rs, std::vector<IntPoly>& out) {
    auto orbits_opt = conjugation_orbits(rs);
    if (!orbits_opt)
        return SubsetResult::Ambiguous;
    std::vector<std::vector<std::size_t>> remaining = *orbits_opt;
    IntPoly cur = p;
    long prec = rs.prec;
    bool ambiguous = false;

    long k = 1;
    while (cur.degree() >= 2 * k) {
        // enumerate subsets of `remaining` whose sizes sum to k
        std::vector<std::size_t> chosen;
        std::optional<std::pair<IntPoly, std::vector<std::size_t>>> hit;
        std::function<void(std::size_t, long)> rec = [&](std::size_t start, long left) {
            if (hit)
                return;
            if (left == 0) {
                std::vector<ComplexBall> roots;
                ComplexBall tr = ComplexBall::exact(Dyadic(), Dyadic(), prec);
                for (std::size_t oi : chosen)
                    for (std::size_t r : remaining[oi]) {
                        roots.push_back(rs.roots[r]);
                        tr = tr + rs.roots[r];
                    }
                bool amb = false;
                if (!round_to_integer(tr, amb)) {
                    ambiguous = ambiguous || amb;
                    if (!amb)
                        return;
                }
                std::vector<ComplexBall> c = product_coefficients(roots, prec);
                std::vector<Int> ic;
                for (const auto& b : c) {
                    auto v = round_to_integer(b, amb);
                    if (!v) {
                        ambiguous = ambiguous || amb;
                        return;
                    }
                    ic.push_back(*v);
                }
                IntPoly cand(ic);
                if (IntPoly::divides(cand, cur))
                    hit = std::make_pair(cand, chosen);
                return;
            }
            for (std::size_t oi = start; oi < remaining.size() && !hit; ++oi) {
                long sz = static_cast<long>(remaining[oi].size());
                if (sz > left)
                    continue;
                chosen.push_back(oi);
                rec(oi + 1, left - sz);
                chosen.pop_back();
            }
        };
        rec(0, k);
        if (hit) {
            out.push_back(hit->first);
            cur = cur / hit->first;
            std::vector<std::vector<std::size_t>> rest;
            for (std::size_t oi = 0; oi < remaining.size(); ++oi)
                if (std::find(hit->second.begin(), hit->second.end(), oi) == hit->second.end())
                    rest.push_back(remaining[oi]);
            remaining = std::move(rest);
            continue;
        }
        if (ambiguous)
            return SubsetResult::Ambiguous;
        ++k;
    }
    if (cur.degree() > 0)
        out.push_back(cur);
    return out.size() > 1 ? SubsetResult::Found : SubsetResult::None;
}

} // namespace detail

/// Irreducible monic factors of a monic square-free integer polynomial.
inline std::vector<IntPoly> factor_squarefree_monic(const IntPoly& p, const PrecisionPolicy& policy = default_precision()) {
    if (!p.is_monic())
        throw DomainError("factorization expects a monic polynomial");
    if (p.degree() <= 1)
        return {p};
    for (long bits = 60;; bits *= 2) {
        IsolationOptions opt;
        opt.target_bits = bits;
        opt.policy = policy;
        if (bits + 32 > policy.cap_bits)
            throw PrecisionExhausted("factor search could not round coefficients unambiguously");
        RootSet rs = isolate_roots(p, opt);
        std::vector<IntPoly> out;
        auto res = detail::split_by_subsets(p, rs, out);
        if (res == detail::SubsetResult::Ambiguous)
            continue;
        std::sort(out.begin(), out.end(), detail::int_poly_less);
        return out;
    }
}

/// Irreducible factorization over Z of a monic integer polynomial, with multiplicities.
inline std::vector<FactorPower<Int>> factor_over_z(const IntPoly& p, const PrecisionPolicy& policy = default_precision()) {
    if (!p.is_monic())
        throw DomainError("factorization expects a monic polynomial");
    std::vector<FactorPower<Int>> out;
    for (const auto& [f, mult] : squarefree_decomposition(to_rat_poly(p))) {
        IntPoly fi = to_int_poly(f);
        for (const auto& g : factor_squarefree_monic(fi, policy))
            out.push_back({g, mult});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.factor != b.factor)
            return detail::int_poly_less(a.factor, b.factor);
        return a.multiplicity < b.multiplicity;
    });
    return out;
}

inline bool is_irreducible_over_z(const IntPoly& p) {
    auto f = factor_over_z(p);
    return f.size() == 1 && f[0].multiplicity == 1;
}

/// Product of a factor list (with multiplicities).
template <class T>
Poly<T> expand(const std::vector<FactorPower<T>>& fs) {
    Poly<T> r = Poly<T>::constant(T(1));
    for (const auto& f : fs)
        for (unsigned i = 0; i < f.multiplicity; ++i)
            r = r * f.factor;
    return r;
}

/// Norm p * sigma(p) of a polynomial over Q(sqrt d); rational coefficients.
inline RatPoly norm_poly(const QPoly& p) {
    QPoly n = p * p.conj();
    return to_rat_poly(n);
}

/// Monic irreducible factors over Q(sqrt d) of a monic polynomial with o_K coefficients,
/// by the norm method: shift until the norm is square-free, factor it over Z, take gcds.
inline std::vector<FactorPower<QuadExt>> factor_over_quadratic(const QPoly& p, long d, const PrecisionPolicy& policy = default_precision()) {
    if (d < 2)
        throw DomainError("factor_over_quadratic needs a real quadratic field");
    QPoly pk = p.map<QuadExt>([d](const QuadExt& a) { return a.in_field(d); });
    if (!pk.is_monic())
        throw DomainError("factorization expects a monic polynomial");
    std::vector<FactorPower<QuadExt>> out;
    for (const auto& [f, mult] : squarefree_decomposition(pk)) {
        if (f.degree() == 1) {
            out.push_back({f, mult});
            continue;
        }
        for (long step = 0;; ++step) {
            long k = (step + 1) / 2 * (step % 2 ? 1 : -1);
            QuadExt c = QuadExt(Rat(0), Rat(k), d);
            QPoly g = f.shift(c);
            RatPoly n = norm_poly(g);
            if (!is_squarefree(n))
                continue;
            IntPoly nz = to_int_poly(n);
            for (const auto& h : factor_squarefree_monic(nz, policy)) {
                QPoly hk = to_quad_poly(h, d);
                QPoly gg = poly_gcd(g, hk);
                if (gg.degree() > 0)
                    out.push_back({gg.shift(-c), mult});
            }
            break;
        }
    }
    return out;
}

/// x^e mod m for monic m.
inline IntPoly power_x_mod(unsigned long e, const IntPoly& m) {
    IntPoly result = IntPoly::constant(Int(1));
    IntPoly base = IntPoly::x() % m;
    while (e > 0) {
        if (e & 1UL)
            result = (result * base) % m;
        base = (base * base) % m;
        e >>= 1;
    }
    return result;
}

/// Order N with p | x^N - 1 and phi(N) == deg p, searched up to 2 deg^2; 0 when none.
inline unsigned long cyclotomic_order(const IntPoly& p) {
    if (!p.is_monic() || p.degree() < 1)
        return 0;
    unsigned long n = static_cast<unsigned long>(p.degree());
    IntPoly one = IntPoly::constant(Int(1));
    for (unsigned long N = 1; N <= 2 * n * n; ++N) {
        if (euler_phi(N) != n)
            continue;
        if ((power_x_mod(N, p) - one) % p == IntPoly())
            return N;
    }
    return 0;
}

inline bool is_cyclotomic(const IntPoly& p) { return cyclotomic_order(p) != 0; }

} // namespace salem
