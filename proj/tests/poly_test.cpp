// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "oracle.hpp"
#include "salem/numbers/isometry.hpp"
#include "salem/poly/factor.hpp"
#include "salem/poly/roots.hpp"

using namespace salem;

namespace {

IntPoly random_int_poly(long deg, long span = 9) {
    std::uniform_int_distribution<long> c(-span, span);
    std::vector<long> v(static_cast<std::size_t>(deg + 1));
    for (auto& x : v)
        x = c(oracle::rng());
    v.back() = 1;
    return oracle::make(v);
}

} // namespace

TEST(Poly, DivisionIdentity) {
    for (int t = 0; t < 100; ++t) {
        IntPoly a = random_int_poly(2 + t % 7), b = random_int_poly(1 + t % 3);
        auto [q, r] = IntPoly::divrem(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_LT(r.degree(), b.degree());
    }
}

TEST(Poly, MultiplicationMatchesConvolution) {
    for (int t = 0; t < 50; ++t) {
        std::vector<long> a{1, -2, 3, 0, 5}, b{7, 0, -1};
        a[t % 4] += t;
        EXPECT_EQ(oracle::make(a) * oracle::make(b), oracle::make(oracle::convolve(a, b)));
    }
}

TEST(Poly, ParseOrderAndErrors) {
    EXPECT_EQ(parse_int_poly({"1", "-3", "1"}), oracle::make({1, -3, 1}));
    EXPECT_EQ(parse_int_poly({"1", "2", "3"}, true), oracle::make({3, 2, 1}));
    EXPECT_THROW(parse_int_poly({"1", "x"}), ParseError);
    QPoly q = parse_quad_poly({"1", "-2-sqrt(6)", "1"});
    EXPECT_EQ(q.coeff(1), QuadExt(Rat(-2), Rat(-1), 6));
}

TEST(Roots, BallsContainKnownRoots) {
    // (x-1)(x-2)(x+3)(x^2+1): exact roots known
    IntPoly p = oracle::make({-1, 1}) * oracle::make({-2, 1}) * oracle::make({3, 1}) * oracle::make({1, 0, 1});
    RootSet rs = isolate_roots(p);
    ASSERT_EQ(rs.size(), 5u);
    auto has = [&](long re, long im) {
        int n = 0;
        for (const auto& r : rs.roots)
            n += r.contains(Dyadic(re), Dyadic(im));
        return n == 1;
    };
    EXPECT_TRUE(has(1, 0));
    EXPECT_TRUE(has(2, 0));
    EXPECT_TRUE(has(-3, 0));
    EXPECT_TRUE(has(0, 1));
    EXPECT_TRUE(has(0, -1));
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = i + 1; j < rs.size(); ++j)
            EXPECT_TRUE(rs.roots[i].disjoint(rs.roots[j]));
}

TEST(Roots, AgreeWithIndependentSolver) {
    for (const auto& s : oracle::salem_samples()) {
        IntPoly p = oracle::make(s.coeffs);
        RootSet rs = isolate_roots(p);
        auto ref = oracle::roots(p);
        ASSERT_EQ(rs.size(), ref.size());
        for (auto z : ref) {
            double best = 1e9;
            for (const auto& r : rs.roots)
                best = std::min(best, std::abs(std::complex<double>(r.re.to_double(), r.im.to_double()) -
                                               std::complex<double>(static_cast<double>(z.real()), static_cast<double>(z.imag()))));
            EXPECT_LT(best, 1e-9) << s.label;
        }
    }
}

TEST(Factor, OverZExpandsBackAndFindsKnownFactors) {
    IntPoly lehmer = oracle::lehmer();
    IntPoly phi6 = oracle::make({1, -1, 1}), xm1 = oracle::make({-1, 1});
    IntPoly p = lehmer * phi6 * phi6 * xm1;
    auto fs = factor_over_z(p);
    EXPECT_EQ(expand(fs), p);
    std::map<std::string, unsigned> seen;
    for (const auto& f : fs)
        seen[f.factor.to_string()] = f.multiplicity;
    EXPECT_EQ(seen.at(lehmer.to_string()), 1u);
    EXPECT_EQ(seen.at(phi6.to_string()), 2u);
    EXPECT_EQ(seen.at(xm1.to_string()), 1u);
}

TEST(Factor, RandomProductsFactorConsistently) {
    for (int t = 0; t < 25; ++t) {
        IntPoly a = random_int_poly(1 + t % 4, 5), b = random_int_poly(2 + t % 3, 5);
        IntPoly p = a * b;
        auto fs = factor_over_z(p);
        EXPECT_EQ(expand(fs), p);
        for (const auto& f : fs)
            EXPECT_TRUE(is_irreducible_over_z(f.factor)) << f.factor.to_string();
        EXPECT_FALSE(is_irreducible_over_z(p));
    }
}

TEST(Factor, OverQuadraticField) {
    // f = x^4 - 4x^3 - 4x^2 + 4x + 1 splits into two quadratics over Q(sqrt d), d = 2, 3, 6
    QPoly f = to_quad_poly(oracle::make({1, 4, -4, -4, 1}));
    for (long d : {2L, 3L, 6L}) {
        auto fs = factor_over_quadratic(f, d);
        ASSERT_EQ(fs.size(), 2u) << d;
        EXPECT_EQ(expand(fs), to_quad_poly(oracle::make({1, 4, -4, -4, 1}), d));
        EXPECT_EQ(fs[0].factor.conj(), fs[1].factor);
    }
    auto f5 = factor_over_quadratic(f, 5);
    EXPECT_EQ(f5.size(), 1u);
    // norm of an irreducible factor is the rational polynomial it came from
    auto f6 = factor_over_quadratic(f, 6);
    EXPECT_EQ(norm_poly(f6[0].factor), to_rat_poly(oracle::make({1, 4, -4, -4, 1})));
}

TEST(Cyclotomic, OrderDetection) {
    for (unsigned long n = 1; n <= 60; ++n) {
        IntPoly phi = cyclotomic_polynomial(n);
        EXPECT_EQ(static_cast<unsigned long>(phi.degree()), euler_phi(n));
        EXPECT_EQ(cyclotomic_order(phi), n);
        // x^n - 1 is divisible by Phi_n
        std::vector<long> xn(n + 1, 0);
        xn[0] = -1;
        xn[n] = 1;
        EXPECT_TRUE(IntPoly::divides(phi, oracle::make(xn)));
    }
    EXPECT_EQ(cyclotomic_order(oracle::lehmer()), 0u);
    EXPECT_EQ(cyclotomic_order(oracle::make({2, 0, 1})), 0u);
}
