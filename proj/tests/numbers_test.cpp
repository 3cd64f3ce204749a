// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "salem/forms/gram.hpp"
#include "salem/numbers/isometry.hpp"
#include "salem/numbers/primitive.hpp"
#include "salem/numbers/trace.hpp"

using namespace salem;

TEST(Classify, DatasetSamplesAreSalemWithOracleLambda) {
    for (const auto& s : oracle::salem_samples()) {
        IntPoly p = oracle::make(s.coeffs);
        SalemCertificate c = classify_salem(p);
        ASSERT_TRUE(c.is_salem()) << s.label << ": " << c.reason;
        long double ref = oracle::largest_real_root(p);
        EXPECT_NEAR(c.lambda.to_double(), static_cast<double>(ref), 1e-12) << s.label;
        if (s.lambda > 0)
            EXPECT_NEAR(c.lambda.to_double(), s.lambda, 1e-5 * s.lambda) << s.label;
        EXPECT_NEAR(c.log_lambda.to_double(), std::log(static_cast<double>(ref)), 1e-12) << s.label;
        if (p.degree() > 2) {
            auto cc = oracle::circle_count(p);
            EXPECT_EQ(cc.outside, 1);
            EXPECT_EQ(cc.inside, 1);
            EXPECT_EQ(cc.on, p.degree() - 2);
        }
    }
}

TEST(Classify, RejectsNonSalem) {
    EXPECT_EQ(classify_salem(oracle::make({1, 0, 1})).verdict, Verdict::Cyclotomic);
    EXPECT_EQ(classify_salem(oracle::make({1, -1, 1})).verdict, Verdict::Cyclotomic);
    EXPECT_EQ(classify_salem(oracle::make({-1, -1, 0, 1})).verdict, Verdict::Other);  // Pisot, not palindromic
    EXPECT_EQ(classify_salem(oracle::lehmer() * oracle::make({1, 1})).verdict, Verdict::Reducible);
    EXPECT_EQ(classify_salem(oracle::make({1, 2, 1})).verdict, Verdict::Reducible);
    // palindromic, two roots off the circle on each side
    EXPECT_EQ(classify_salem(oracle::make({1, -10, 1}) * oracle::make({1, -7, 1})).verdict, Verdict::Reducible);
    EXPECT_THROW(classify_salem(oracle::make({1, 2})), DomainError);
    EXPECT_THROW(classify_salem(oracle::make({1, 1, 2})), DomainError);
}

TEST(Classify, QuarticExampleAgainstOracleCircleCount) {
    // x^4 - 3x^3 + 3x^2 - 3x + 1: trace polynomial y^2 - 3y + 1, one root above 2 and one inside (-2, 2)
    IntPoly p = oracle::make({1, -3, 3, -3, 1});
    auto cc = oracle::circle_count(p);
    bool salem_shape = cc.outside == 1 && cc.inside == 1 && cc.on == 2;
    EXPECT_EQ(classify_salem(p).is_salem(), salem_shape);
}

TEST(Trace, RoundTripAndRootRelation) {
    for (const auto& s : oracle::salem_samples()) {
        IntPoly p = oracle::make(s.coeffs);
        IntPoly g = trace_polynomial(p);
        EXPECT_EQ(untrace(g), p) << s.label;
        EXPECT_EQ(g.degree() * 2, p.degree());
        // g(lambda + 1/lambda) = 0 in long double
        long double lam = oracle::largest_real_root(p), t = lam + 1 / lam, v = 0, scale = 0;
        for (std::size_t i = g.coeffs().size(); i-- > 0;) {
            v = v * t + g.coeffs()[i].get_d();
            scale = scale * std::abs(t) + std::abs(g.coeffs()[i].get_d());
        }
        EXPECT_LT(std::abs(v), 1e-12L * scale) << s.label;
    }
    EXPECT_EQ(trace_polynomial(oracle::octic()), oracle::make({1, 4, -4, -4, 1}));
    EXPECT_THROW(trace_polynomial(oracle::make({1, 2, 3})), DomainError);
}

TEST(Trace, TotallyRealInverse) {
    auto r = salem_from_totally_real(oracle::make({1, 4, -4, -4, 1}));
    EXPECT_TRUE(r.ok) << r.reason;
    EXPECT_EQ(r.certificate.poly, oracle::octic());
    // x^2 - 5: roots +-2.236, two outside (-2, 2)
    EXPECT_FALSE(salem_from_totally_real(oracle::make({-5, 0, 1})).ok);
    // x^2 + 1 is not totally real
    EXPECT_FALSE(salem_from_totally_real(oracle::make({1, 0, 1})).ok);
}

TEST(Squares, ExactSquareMatchesNumericPowerAndTraceIdentity) {
    for (const auto& s : oracle::salem_samples()) {
        IntPoly p = oracle::make(s.coeffs);
        SalemCertificate c = classify_salem(p);
        IntPoly sq = squared_salem(p);
        EXPECT_EQ(power_polynomial(c, 2), sq) << s.label;
        SalemCertificate c2 = squared_salem(c);
        ASSERT_TRUE(c2.is_salem());
        long double lam = oracle::largest_real_root(p);
        EXPECT_NEAR(c2.lambda.to_double(), static_cast<double>(lam * lam), 1e-10 * static_cast<double>(lam * lam));
        // (lambda + 1/lambda)^2 - 2 = lambda^2 + lambda^-2 is a root of the squared trace polynomial
        long double t = (lam + 1 / lam) * (lam + 1 / lam) - 2, v = 0, scale = 0;
        IntPoly g2 = trace_polynomial(sq);
        for (std::size_t i = g2.coeffs().size(); i-- > 0;) {
            v = v * t + g2.coeffs()[i].get_d();
            scale = scale * std::abs(t) + std::abs(g2.coeffs()[i].get_d());
        }
        EXPECT_LT(std::abs(v), 1e-11L * scale) << s.label;
    }
}

TEST(Primitive, SquaresAndCubesRecoverTheBase) {
    SalemCertificate lehmer = classify_salem(oracle::lehmer());
    SalemCertificate sq = squared_salem(lehmer);
    PrimitiveResult r = primitive_salem(sq);
    EXPECT_EQ(r.primitive.poly, oracle::lehmer());
    EXPECT_EQ(r.exponent, 2u);
    EXPECT_TRUE(commensurable(lehmer, sq));

    SalemCertificate l41 = classify_salem(oracle::make({1, -1, -1, -1, 1}));
    SalemCertificate cube = classify_salem(power_polynomial(l41, 3));
    ASSERT_TRUE(cube.is_salem());
    PrimitiveResult r3 = primitive_salem(cube);
    EXPECT_EQ(r3.primitive.poly, l41.poly);
    EXPECT_EQ(r3.exponent, 3u);

    EXPECT_EQ(primitive_salem(lehmer).exponent, 1u);
    EXPECT_FALSE(commensurable(lehmer, classify_salem(oracle::make({1, 0, -1, -1, -1, 0, 1}))));
}

TEST(Primitive, QuadraticUnits) {
    // golden ratio squared: x^2 - 3x + 1 is phi^2 with phi of norm -1, so it stays primitive as a Salem number
    SalemCertificate g = classify_salem(oracle::make({1, -3, 1}));
    EXPECT_EQ(primitive_salem(g).exponent, 1u);
    // (2 + sqrt 3)^2 = 7 + 4 sqrt 3: x^2 - 14x + 1
    SalemCertificate c = classify_salem(oracle::make({1, -14, 1}));
    PrimitiveResult r = primitive_salem(c);
    EXPECT_EQ(r.exponent, 2u);
    EXPECT_EQ(r.primitive.poly, oracle::make({1, -4, 1}));
}

TEST(Isometry, CompanionOfSalemIsHyperbolicWithLogLambda) {
    for (const auto& s : oracle::salem_samples()) {
        IntPoly p = oracle::make(s.coeffs);
        QPoly q = to_quad_poly(p);
        GramForm f = gram_from_minpoly(q);
        IsometryReport rep = classify_isometry(companion(q), f.gram);
        EXPECT_EQ(rep.kind, IsometryKind::Hyperbolic) << s.label;
        ASSERT_TRUE(rep.translation_length);
        EXPECT_NEAR(rep.translation_length->to_double(), std::log(static_cast<double>(oracle::largest_real_root(p))), 1e-12);
    }
}

TEST(Isometry, EllipticAndParabolic) {
    // Lorentzian diag(1, 1, -1): rotation in the positive plane is elliptic
    Matrix<Rat> A{{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(-1)}};
    Matrix<Rat> R{{Rat(0), Rat(-1), Rat(0)}, {Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
    EXPECT_EQ(classify_isometry(R, A).kind, IsometryKind::Elliptic);
    EXPECT_EQ(classify_isometry(Matrix<Rat>::identity(3), A).kind, IsometryKind::Elliptic);
    // unipotent element preserving 2xz + y^2
    Matrix<Rat> B{{Rat(0), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(0)}, {Rat(1), Rat(0), Rat(0)}};
    Matrix<Rat> U{{Rat(1), Rat(-1), make_rat(Int(-1), Int(2))}, {Rat(0), Rat(1), Rat(1)}, {Rat(0), Rat(0), Rat(1)}};
    ASSERT_EQ(U.transpose() * B * U, B);
    EXPECT_EQ(classify_isometry(U, B).kind, IsometryKind::Parabolic);
    EXPECT_THROW(classify_isometry(U, A), DomainError);
}
