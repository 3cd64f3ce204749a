// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "salem/exactnum/ball.hpp"
#include "salem/exactnum/field.hpp"
#include "salem/numbers/units.hpp"

using namespace salem;

namespace {

Rat random_rat(long span = 40) {
    std::uniform_int_distribution<long> num(-span, span), den(1, 9);
    return make_rat(Int(num(oracle::rng())), Int(den(oracle::rng())));
}

QuadExt random_quad(long d) { return QuadExt(random_rat(), random_rat(), d); }

} // namespace

TEST(Integer, FactorIntegerMultipliesBack) {
    for (long n : {1L, 2L, 12L, 97L, 360L, 1001L, 65536L, 999983L * 7L}) {
        Factorization f = factor_integer(Int(n));
        Int prod = f.cofactor;
        for (const auto& [p, e] : f.primes)
            for (unsigned i = 0; i < e; ++i)
                prod *= p;
        EXPECT_EQ(prod, Int(n)) << n;
        EXPECT_TRUE(f.complete);
    }
}

TEST(Integer, SplitSquareAgainstBruteForce) {
    for (long n = 1; n < 600; ++n) {
        SquareSplit s = split_square(Int(n));
        EXPECT_EQ(s.square_root * s.square_root * s.squarefree, Int(n));
        for (long k = 2; k * k <= n; ++k)
            EXPECT_NE(s.squarefree.get_si() % (k * k), 0) << n;
    }
}

TEST(Integer, EulerPhiCountsCoprimes) {
    for (unsigned long n = 1; n < 200; ++n) {
        unsigned long c = 0;
        for (unsigned long k = 1; k <= n; ++k)
            c += std::gcd(k, n) == 1;
        EXPECT_EQ(euler_phi(n), c) << n;
    }
}

TEST(Dyadic, ArithmeticMatchesRationals) {
    for (int t = 0; t < 200; ++t) {
        std::uniform_int_distribution<long> m(-100000, 100000), e(-30, 30);
        Dyadic a(Int(m(oracle::rng())), e(oracle::rng())), b(Int(m(oracle::rng())), e(oracle::rng()));
        EXPECT_EQ((a + b).to_rat(), a.to_rat() + b.to_rat());
        EXPECT_EQ((a - b).to_rat(), a.to_rat() - b.to_rat());
        EXPECT_EQ((a * b).to_rat(), a.to_rat() * b.to_rat());
    }
}

TEST(RealBall, LogEnclosesLibmValue) {
    for (double x : {0.001, 0.5, 1.0, 1.1762808182, 2.6180339887, 1e6}) {
        RealBall b = RealBall::exact(Dyadic::from_double(x), 128);
        RealBall l = log(b);
        EXPECT_NEAR(l.to_double(), std::log(x), 1e-15 * std::max(1.0, std::abs(std::log(x))));
        EXPECT_LT(l.rad.to_double(), 1e-30);
    }
    EXPECT_THROW(log(RealBall::exact(Dyadic(0), 64)), DomainError);
}

TEST(RealBall, CertifiedDecimalRefusesStraddlingBalls) {
    RealBall x = RealBall::from_rat(make_rat(Int(1), Int(3)), 128);
    EXPECT_EQ(certified_decimal(x, 10).value(), "0.3333333333");
    RealBall wide(Dyadic(Int(1), -1), Dyadic(Int(1), -12), 64);
    EXPECT_FALSE(certified_decimal(wide, 10));
    EXPECT_EQ(certified_decimal(wide, 2).value(), "0.50");
}

TEST(RealBall, SqrtEnclosesSquareRoot) {
    for (long v : {2L, 3L, 5L, 6L, 1000003L}) {
        RealBall s = RealBall::exact(Dyadic(v), 128).sqrt();
        EXPECT_TRUE((s * s).contains(Rat(v)));
        EXPECT_NEAR(s.to_double(), std::sqrt(static_cast<double>(v)), 1e-12 * std::sqrt(v));
    }
}

TEST(QuadExt, FieldAxiomsAndNormIsMultiplicative) {
    for (long d : {2L, 3L, 5L, 6L, 13L}) {
        for (int t = 0; t < 50; ++t) {
            QuadExt a = random_quad(d), b = random_quad(d), c = random_quad(d);
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ((a * b).norm(), a.norm() * b.norm());
            EXPECT_EQ(a.conj().conj(), a);
            if (!b.is_zero())
                EXPECT_EQ((a / b) * b, a);
        }
    }
}

TEST(QuadExt, EmbeddingMatchesDoubleEvaluation) {
    for (long d : {2L, 3L, 6L, 7L}) {
        for (int t = 0; t < 40; ++t) {
            QuadExt a = random_quad(d);
            double expect = a.a().get_d() + a.b().get_d() * std::sqrt(static_cast<double>(d));
            double conj = a.a().get_d() - a.b().get_d() * std::sqrt(static_cast<double>(d));
            EXPECT_NEAR(a.to_ball(128).to_double(), expect, 1e-9 * (1 + std::abs(expect)));
            EXPECT_NEAR(a.to_ball(128, true).to_double(), conj, 1e-9 * (1 + std::abs(conj)));
            if (std::abs(expect) > 1e-9)
                EXPECT_EQ(a.sign(), expect > 0 ? 1 : -1);
        }
    }
}

TEST(QuadExt, ParsePrintRoundTrip) {
    for (long d : {2L, 3L, 5L, 6L}) {
        for (int t = 0; t < 60; ++t) {
            QuadExt a = random_quad(d);
            if (a.is_rational())
                continue;
            EXPECT_EQ(QuadExt::parse(a.to_string()), a) << a.to_string();
        }
    }
    EXPECT_EQ(QuadExt::parse("4-sqrt(6)"), QuadExt(Rat(4), Rat(-1), 6));
    EXPECT_EQ(QuadExt::parse("-7/2"), QuadExt(make_rat(Int(-7), Int(2))));
    EXPECT_THROW(QuadExt::parse("sqrt(4)"), ParseError);
    EXPECT_THROW(QuadExt::parse("1+x"), ParseError);
}

TEST(QuadExt, SqrtOfSquares) {
    for (long d : {2L, 3L, 6L}) {
        for (int t = 0; t < 30; ++t) {
            QuadExt a = random_quad(d);
            auto r = (a * a).sqrt();
            ASSERT_TRUE(r);
            EXPECT_TRUE(*r == a || *r == -a);
        }
    }
    // 7 + 2 sqrt 6 = (1 + sqrt 6)^2, 5 is not a square in Q(sqrt 2)
    EXPECT_TRUE(QuadExt(Rat(7), Rat(2), 6).sqrt());
    EXPECT_FALSE(QuadExt(5).in_field(2).sqrt());
    EXPECT_FALSE(QuadExt(Rat(10), Rat(5), 3).sqrt());
}

TEST(QuadExt, IntegralityFollowsOmegaBasis) {
    EXPECT_TRUE(QuadExt(make_rat(Int(1), Int(2)), make_rat(Int(1), Int(2)), 5).is_integral());
    EXPECT_FALSE(QuadExt(make_rat(Int(1), Int(2)), make_rat(Int(1), Int(2)), 3).is_integral());
    EXPECT_EQ(QuadExt(make_rat(Int(1), Int(5)), Rat(1), 6).denominator_in_ok(), Int(5));
}

TEST(Units, FundamentalUnitIsSmallestUnitAboveOne) {
    for (long d : {2L, 3L, 5L, 6L, 7L, 13L, 19L}) {
        QuadExt eps = fundamental_unit(d);
        EXPECT_TRUE(eps.is_integral());
        EXPECT_EQ(abs(eps.norm()), Rat(1));
        EXPECT_GT(eps, QuadExt(1));
        // brute force: no unit x + y*omega in (1, eps)
        QuadExt omega = integral_basis_omega(d);
        double e = eps.to_double();
        for (long y = 1; y < 200; ++y) {
            double w = omega.to_double(), wc = omega.conj().to_double();
            for (long x = static_cast<long>(std::floor(1 - y * w)) - 1; x <= static_cast<long>(std::ceil(e - y * w)) + 1; ++x) {
                double v = x + y * w;
                if (v <= 1 + 1e-12 || v >= e - 1e-9)
                    continue;
                double n = v * (x + y * wc);
                EXPECT_GT(std::abs(std::abs(n) - 1), 1e-6) << "d=" << d << " smaller unit " << x << "+" << y << "w";
            }
        }
    }
}
