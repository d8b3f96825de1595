// Gaussian integers, Q(i), interval enclosures and quadratic surds.

#include "hcf/gaussian.hpp"
#include "hcf/interval.hpp"
#include "hcf/surd.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

using namespace hcf;
using G = GaussianInt;

namespace {

RatGauss rg(long rn, long rd, long in, long id) { return {Rational(rn, rd), Rational(in, id)}; }

Surd golden() { return Surd::make(RatGauss(Rational(1, 2)), RatGauss(Rational(1, 2)), G(5)); }
Surd golden_conj() { return Surd::make(RatGauss(Rational(1, 2)), RatGauss(Rational(-1, 2)), G(5)); }

/// Floating evaluation with the principal square root, used as an independent oracle.
std::complex<double> approx(const Surd& x) {
    auto c = [](const RatGauss& z) { return std::complex<double>(z.re().get_d(), z.im().get_d()); };
    if (x.is_rational()) return c(x.a());
    return c(x.a()) + c(x.b()) * std::sqrt(std::complex<double>(x.d().re().get_d(), x.d().im().get_d()));
}

}  // namespace

// ---------------------------------------------------------------------------
// Rounding and the fundamental square
// ---------------------------------------------------------------------------

TEST(NearestGauss, ListedValues) {
    EXPECT_EQ(nearest_gauss(RatGauss(0)), G(0));
    EXPECT_EQ(nearest_gauss(rg(1, 2, -1, 2)), G(1));
    EXPECT_EQ(nearest_gauss(rg(-6, 5, 27, 10)), G(-1, 3));
}

TEST(NearestGauss, RemainderLiesInSquareAgainstNeighbourSearch) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-400, 400), den(1, 40);
    for (int k = 0; k < 2000; ++k) {
        const RatGauss z(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        const G g = nearest_gauss(z);
        // exactly one Gaussian integer near the double estimate leaves a remainder in the square
        int hits = 0;
        const long cx = std::lround(z.re().get_d()), cy = std::lround(z.im().get_d());
        for (long dx = -1; dx <= 1; ++dx)
            for (long dy = -1; dy <= 1; ++dy) {
                const RatGauss r = z - RatGauss(G(cx + dx, cy + dy));
                const bool in = r.re() >= Rational(-1, 2) && r.re() < Rational(1, 2) && r.im() >= Rational(-1, 2) &&
                                r.im() < Rational(1, 2);
                if (in) {
                    ++hits;
                    EXPECT_EQ(g, G(cx + dx, cy + dy));
                }
            }
        EXPECT_EQ(hits, 1);
    }
}

TEST(FundamentalDomain, HalfOpenBoundary) {
    EXPECT_TRUE(in_fundamental_domain(RatGauss(0)));
    EXPECT_FALSE(in_fundamental_domain(RatGauss(Rational(1, 2))));
    EXPECT_TRUE(in_fundamental_domain(rg(-1, 2, -1, 2)));
    EXPECT_FALSE(in_fundamental_domain(rg(0, 1, 1, 2)));
}

// ---------------------------------------------------------------------------
// Division and gcd
// ---------------------------------------------------------------------------

TEST(GaussGcd, ListedValues) {
    auto assoc = [](const G& a, const G& b) {
        for (int k = 0; k < 4; ++k)
            if (a.rotate(k) == b) return true;
        return false;
    };
    EXPECT_TRUE(assoc(gauss_gcd(G(2), G(1, 1)), G(1, 1)));
    EXPECT_TRUE(assoc(gauss_gcd(G(5), G(0)), G(5)));
    EXPECT_TRUE(assoc(gauss_gcd(G(1, 1), G(1, -1)), G(1, 1)));
}

TEST(GaussGcd, MatchesExhaustiveCommonDivisorSearch) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> v(-12, 12);
    for (int k = 0; k < 200; ++k) {
        const G a(v(rng), v(rng)), b(v(rng), v(rng));
        if (a.is_zero() && b.is_zero()) continue;
        const G g = gauss_gcd(a, b);
        EXPECT_TRUE(divides(g, a) && divides(g, b));
        // no common divisor has larger norm
        Integer best = 0;
        for (long x = -12; x <= 12; ++x)
            for (long y = -12; y <= 12; ++y) {
                const G d(x, y);
                if (!d.is_zero() && divides(d, a) && divides(d, b)) best = std::max(best, Integer(d.norm()));
            }
        EXPECT_EQ(g.norm(), best);
    }
}

TEST(GaussDivmod, RemainderSmallerThanDivisor) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> v(-50, 50);
    for (int k = 0; k < 500; ++k) {
        const G a(v(rng), v(rng)), b(v(rng), v(rng));
        if (b.is_zero()) continue;
        const auto [q, r] = gauss_divmod(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_LT(2 * r.norm(), 2 * b.norm() + 1);
    }
}

TEST(ParseGaussian, RoundTripsThroughText) {
    for (const char* s : {"3", "-2+5i", "i", "-i", "4-i", "7i", "0"}) EXPECT_EQ(parse_gaussian(s).str(), s);
    EXPECT_THROW(parse_gaussian("2+"), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Enclosures
// ---------------------------------------------------------------------------

TEST(IntervalSqrt, BracketsRootWithRequestedWidth) {
    for (long n : {2L, 3L, 5L, 10L, 12345L}) {
        for (long bits : {8L, 32L, 100L}) {
            const auto [lo, hi] = sqrt_bounds(Rational(n), bits);
            EXPECT_LE(lo * lo, Rational(n));
            EXPECT_GE(hi * hi, Rational(n));
            EXPECT_LE(Rational(hi - lo), detail::mul_pow2(Rational(1), -bits + 4));
        }
    }
}

TEST(Refine, ExactRationalGivesPointBox) {
    const ComplexInterval box = refine(Surd(RatGauss(Rational(1, 2))), 10);
    EXPECT_TRUE(box.re().is_point());
    EXPECT_EQ(box.re().lo(), Rational(1, 2));
    EXPECT_TRUE(box.im().is_point());
    EXPECT_EQ(box.im().lo(), 0);
}

TEST(Refine, GoldenRatioAndImaginaryRoot) {
    // Newton iterate for sqrt(5) in exact rationals as the oracle
    Rational s(2);
    for (int k = 0; k < 6; ++k) s = (s + Rational(5) / s) / 2;
    const Rational phi = (1 + s) / 2;
    const ComplexInterval b = refine(golden(), 20);
    EXPECT_LE(b.re().width(), detail::mul_pow2(Rational(1), -20));
    // the Newton value is within 2^-60 of phi after six steps
    const Rational slack = detail::mul_pow2(Rational(1), -60);
    EXPECT_LE(b.re().lo() - slack, phi);
    EXPECT_GE(b.re().hi() + slack, phi);

    const Surd i_root2 = Surd::make(RatGauss(0), RatGauss(1), G(-2));
    const ComplexInterval c = refine(i_root2, 8);
    EXPECT_TRUE(c.re().contains(Rational(0)));
    EXPECT_LE(c.im().width(), detail::mul_pow2(Rational(1), -8));
    EXPECT_TRUE(c.im().contains(Rational(141421356, 100000000)));
}

TEST(Refine, NestedAcrossPrecisions) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> v(-9, 9);
    for (int k = 0; k < 50; ++k) {
        const G d(v(rng), v(rng));
        if (d.is_zero() || gaussian_sqrt(d)) continue;
        const Surd x = Surd::make(RatGauss(G(v(rng), v(rng))), RatGauss(G(1, v(rng))), d);
        for (long bits : {16L, 40L, 90L}) EXPECT_TRUE(refine(x, bits).contains(refine(x, bits + 2)));
    }
}

// ---------------------------------------------------------------------------
// Surd arithmetic
// ---------------------------------------------------------------------------

TEST(SurdArithmetic, ListedValues) {
    const Surd x = golden();
    EXPECT_EQ(x - Surd(2), Surd::make(RatGauss(Rational(-3, 2)), RatGauss(Rational(1, 2)), G(5)));
    const Surd y = Surd::make(RatGauss(Rational(-3, 2)), RatGauss(Rational(1, 2)), G(5));
    const Surd inv = Surd(1) / y;
    EXPECT_EQ(inv, Surd::make(RatGauss(Rational(-3, 2)), RatGauss(Rational(-1, 2)), G(5)));
    EXPECT_EQ(inv * y, Surd(1));  // rationalized by the conjugate, product is one
    EXPECT_EQ(golden() * golden_conj(), Surd(-1));
}

TEST(SurdArithmetic, GaloisConjugateIsInvolution) {
    EXPECT_EQ(golden().conjugate(), golden_conj());
    EXPECT_EQ(Surd(RatGauss(G(3, 4))).conjugate(), Surd(RatGauss(G(3, 4))));
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<long> v(-7, 7);
    for (int k = 0; k < 100; ++k) {
        const G d(v(rng), v(rng));
        const Surd x = Surd::make(RatGauss(G(v(rng), v(rng))), RatGauss(G(v(rng), v(rng))), d);
        EXPECT_EQ(x.conjugate().conjugate(), x);
    }
}

TEST(SurdArithmetic, CanonicalRadicands) {
    // sqrt(-2) = i sqrt(2); sqrt(8) = 2 sqrt(2); sqrt(-4) = 2i; sqrt(2i) = 1 + i
    const Surd a = Surd::make(RatGauss(0), RatGauss(1), G(-2));
    EXPECT_EQ(a.d(), G(2));
    EXPECT_EQ(a.b(), RatGauss(G(0, 1)));
    const Surd b = Surd::make(RatGauss(0), RatGauss(1), G(8));
    EXPECT_EQ(b.d(), G(2));
    EXPECT_EQ(b.b(), RatGauss(2));
    EXPECT_EQ(Surd::make(RatGauss(0), RatGauss(1), G(-4)), Surd(RatGauss(G(0, 2))));
    EXPECT_EQ(Surd::make(RatGauss(0), RatGauss(1), G(0, 2)), Surd(RatGauss(G(1, 1))));
}

TEST(SurdArithmetic, FieldOperationsAgreeWithFloatingEvaluation) {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> v(-6, 6);
    for (int k = 0; k < 300; ++k) {
        const G d(v(rng), v(rng));
        if (d.is_zero() || gaussian_sqrt(d)) continue;
        const Surd x = Surd::make(RatGauss(G(v(rng), v(rng))), RatGauss(G(v(rng), 1)), d);
        const Surd y = Surd::make(RatGauss(G(v(rng), v(rng))), RatGauss(G(1, v(rng))), d);
        const std::complex<double> xd = approx(x), yd = approx(y);
        EXPECT_LT(std::abs(approx(x + y) - (xd + yd)), 1e-9);
        EXPECT_LT(std::abs(approx(x * y) - xd * yd), 1e-7 * (1 + std::abs(xd * yd)));
        if (!y.is_zero()) EXPECT_LT(std::abs(approx(x / y) - xd / yd), 1e-6 * (1 + std::abs(xd / yd)));
        EXPECT_EQ((x * y) / y, x);
    }
}

TEST(SurdRounding, ListedValues) {
    EXPECT_EQ(nearest_gauss(golden()), G(2));
    EXPECT_EQ(nearest_gauss(golden_conj()), G(-1));
    EXPECT_EQ(nearest_gauss(Surd(RatGauss(Rational(1, 2)))), G(1));
}

TEST(SurdRounding, RemainderInSquareForRandomSurds) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> v(-9, 9);
    for (int k = 0; k < 300; ++k) {
        const G d(v(rng), v(rng));
        if (d.is_zero()) continue;
        const Surd x = Surd::make(RatGauss(G(v(rng), v(rng))) / RatGauss(G(1, 1)), RatGauss(G(v(rng), v(rng))), d);
        const G g = nearest_gauss(x);
        EXPECT_TRUE(in_fundamental_domain(x - Surd(g)));
        // matches floating rounding when clear of cell edges
        const std::complex<double> z = approx(x);
        const double fx = z.real() + 0.5 - std::floor(z.real() + 0.5), fy = z.imag() + 0.5 - std::floor(z.imag() + 0.5);
        if (fx > 1e-6 && fx < 1 - 1e-6 && fy > 1e-6 && fy < 1 - 1e-6) {
            EXPECT_EQ(g, G(static_cast<long>(std::floor(z.real() + 0.5)), static_cast<long>(std::floor(z.imag() + 0.5))));
        }
    }
}

TEST(SurdComparison, ExactTies) {
    const Surd r2 = Surd::make(RatGauss(0), RatGauss(1), G(2));
    EXPECT_EQ(sign_norm_minus(r2, Rational(2)), 0);
    EXPECT_EQ(sign_norm_minus(golden(), Rational(2)), 1);
    EXPECT_EQ(compare_abs(golden(), golden_conj()), 1);
    EXPECT_EQ(compare_abs(golden_conj().inverse(), golden()), 0);
}
