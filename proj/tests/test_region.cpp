// Feasible regions, prefix validity, periodic validity and the shape catalog.

#include "hcf/expansion.hpp"
#include "hcf/harness.hpp"
#include "hcf/region.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hcf;
using G = GaussianInt;

namespace {

/// A point of the square with large denominators, away from every cell boundary in practice.
RatGauss random_point(std::mt19937_64& rng) {
    const long den = 1000003;
    const long re = draw(rng, -den / 2, den / 2 - 1), im = draw(rng, -den / 2, den / 2 - 1);
    return RatGauss(Rational(re, den), Rational(im, den));
}

bool satisfies(const Region& r, const RatGauss& z) {
    for (const Constraint& f : r.constraints())
        if (f.eval(z) < 0) return false;
    return true;
}

}  // namespace

TEST(Constraint, NamedShapes) {
    const Constraint d = Constraint::disk(RatGauss(1), Rational(1, 4));
    EXPECT_GE(d.eval(RatGauss(1)), 0);
    EXPECT_LT(d.eval(RatGauss(2)), 0);
    EXPECT_EQ(d.eval(RatGauss(Rational(3, 2))), 0);
    const Constraint e = Constraint::disk_exterior(RatGauss(1), Rational(1, 4));
    EXPECT_LT(e.eval(RatGauss(1)), 0);
    EXPECT_GT(e.complement().eval(RatGauss(1)), 0);
    EXPECT_GE(Constraint::re_at_least(Rational(-1, 2)).eval(RatGauss(Rational(-1, 2))), 0);
}

TEST(Constraint, InversionMapsPointsConsistently) {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 200; ++k) {
        const Constraint f{Rational(draw(rng, -3, 3)), RatGauss(Rational(draw(rng, -5, 5), 2), Rational(draw(rng, -5, 5), 2)),
                           Rational(draw(rng, -5, 5)), false};
        const RatGauss z = random_point(rng) * RatGauss(3);
        if (z.is_zero()) continue;
        // f at 1/z times the norm of z equals f.inverted() at z
        const Rational lhs = f.eval(z.inverse());
        const Rational rhs = f.inverted().eval(z);
        EXPECT_EQ(lhs * z.norm(), rhs);
        // f.translated(t) evaluated at z equals f at z + t
        const RatGauss t(G(draw(rng, -3, 3), draw(rng, -3, 3)));
        EXPECT_EQ(f.translated(t).eval(z), f.eval(z + t));
    }
}

TEST(Region, SquareAndEmptyStep) {
    EXPECT_FALSE(Region::fundamental().interior_empty());
    EXPECT_TRUE(step(Region::fundamental(), G(1)).is_empty_marker());
    EXPECT_TRUE(step(Region::fundamental(), G(0)).is_empty_marker());
    EXPECT_TRUE(step(Region::fundamental(), G(0, -1)).is_empty_marker());
    EXPECT_FALSE(step(Region::fundamental(), G(1, 1)).is_empty_marker());
}

TEST(Region, LargeDigitsLeaveTheWholeSquare) {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 60; ++k) {
        const G a(draw(rng, -9, 9), draw(rng, -9, 9));
        if (a.norm() < 8) continue;
        const Region r = step(Region::fundamental(), a);
        EXPECT_TRUE(r.interior_equals(Region::fundamental())) << a;
    }
}

TEST(Region, PointOracleAlongExpansions) {
    std::mt19937_64 rng(7);
    for (int s = 0; s < 300; ++s) {
        const RatGauss x = random_point(rng) + RatGauss(G(draw(rng, -3, 3), draw(rng, -3, 3)));
        const Expansion e = expand(x, 8);
        Region r = Region::fundamental();
        RatGauss z = x - RatGauss(e.digits[0]);
        for (std::size_t k = 1; k < e.size(); ++k) {
            if (z.is_zero()) break;
            z = z.inverse() - RatGauss(e.digits[k]);
            r = step(r, e.digits[k]);
            ASSERT_FALSE(r.is_empty_marker());
            EXPECT_TRUE(satisfies(r, z)) << "digit " << k << " region " << r.str();
        }
    }
}

TEST(Region, FirstDigitCellsCoverSampledPoints) {
    std::mt19937_64 rng(9);
    for (int s = 0; s < 200; ++s) {
        const RatGauss w = random_point(rng);
        if (w.is_zero()) continue;
        const G a = nearest_gauss(w.inverse());
        EXPECT_TRUE(satisfies(first_digit_cell(a), w)) << w;
    }
}

TEST(Region, InvertRegionExamples) {
    // the square maps to the exterior of four unit disks centered at +-1, +-i
    const Region inv = invert_region(Region::fundamental());
    EXPECT_TRUE(satisfies(inv, RatGauss(3)));
    EXPECT_FALSE(satisfies(inv, RatGauss(1)));
    EXPECT_FALSE(satisfies(inv, RatGauss(G(0, -1))));
    EXPECT_TRUE(satisfies(inv, RatGauss(G(1, 1))));
    // a disk not through the origin inverts to a disk
    const Region d({Constraint::disk(RatGauss(2), Rational(1))});
    const Region di = invert_region(d);
    EXPECT_TRUE(satisfies(di, RatGauss(Rational(1, 2))));
    EXPECT_TRUE(satisfies(di, RatGauss(Rational(1, 3))));
    EXPECT_FALSE(satisfies(di, RatGauss(Rational(1, 4))));
}

TEST(Feasibility, DigitsAfterSquare) {
    const FeasibleDigits f = feasible_digits(Region::fundamental(), 20);
    auto has = [&](const G& a) { return std::find(f.digits.begin(), f.digits.end(), a) != f.digits.end(); };
    EXPECT_TRUE(has(G(1, 1)));
    EXPECT_TRUE(has(G(2)));
    EXPECT_TRUE(has(G(-2, 2)));
    EXPECT_FALSE(has(G(1)));
    EXPECT_FALSE(has(G(0)));
    EXPECT_FALSE(has(G(0, 1)));
    EXPECT_TRUE(f.cusp);
    for (const G& a : f.digits) EXPECT_GE(a.norm(), 2);
}

TEST(Feasibility, AgreesWithStep) {
    std::mt19937_64 rng(11);
    for (int s = 0; s < 20; ++s) {
        const Digits w = random_valid_word(rng, static_cast<std::size_t>(draw(rng, 2, 8)));
        Region r = Region::fundamental();
        for (std::size_t k = 1; k < w.size(); ++k) r = step(r, w[k]);
        const FeasibleDigits f = feasible_digits(r, 18);
        for (long x = -4; x <= 4; ++x)
            for (long y = -4; y <= 4; ++y) {
                const G a(x, y);
                if (a.norm() > 18) continue;
                const bool listed = std::find(f.digits.begin(), f.digits.end(), a) != f.digits.end();
                EXPECT_EQ(listed, !step(r, a).is_empty_marker());
            }
    }
}

TEST(Validity, ShortFixtures) {
    EXPECT_TRUE(is_valid_prefix({G(0), G(-2, 2), G(1, 1)}));
    EXPECT_FALSE(is_valid_prefix({G(0), G(1, 2), G(-2, 2), G(1, 1)}));
    EXPECT_TRUE(is_valid_prefix({G(5)}));
    EXPECT_THROW(is_valid_prefix({}), std::invalid_argument);
}

TEST(Validity, SmallDigitIsNeverValid) {
    std::mt19937_64 rng(13);
    for (int s = 0; s < 100; ++s) {
        Digits w = random_valid_word(rng, static_cast<std::size_t>(draw(rng, 2, 10)));
        const std::size_t at = static_cast<std::size_t>(draw(rng, 1, static_cast<long>(w.size()) - 1));
        const G small[] = {G(0), G(1), G(-1), G(0, 1), G(0, -1)};
        w[at] = small[draw(rng, 0, 4)];
        EXPECT_FALSE(is_valid_prefix(w));
    }
}

TEST(Validity, LargeDigitWordsAreValid) {
    std::mt19937_64 rng(17);
    for (int s = 0; s < 1000; ++s) {
        Digits w{G(draw(rng, -5, 5), draw(rng, -5, 5))};
        const long len = draw(rng, 1, 20);
        while (static_cast<long>(w.size()) < len + 1) {
            const G a(draw(rng, -6, 6), draw(rng, -6, 6));
            if (a.norm() >= 8) w.push_back(a);
        }
        EXPECT_TRUE(is_valid_prefix(w));
    }
}

TEST(Validity, ExpandedSurdsAreValid) {
    std::mt19937_64 rng(19);
    for (int s = 0; s < 60; ++s) EXPECT_TRUE(is_valid_prefix(expand(harness::random_surd(rng), 20).digits));
}

TEST(Validity, PrefixClosed) {
    std::mt19937_64 rng(23);
    for (int s = 0; s < 50; ++s) {
        const Digits w = random_valid_word(rng, 12);
        for (std::size_t n = 1; n <= w.size(); ++n) EXPECT_TRUE(is_valid_prefix(Digits(w.begin(), w.begin() + n)));
    }
}

TEST(Families, ComputedTruth) {
    // n copies of -2+2i separated by 2-2i, closed by 1+i
    for (const G& xi : {G(0), G(3), G(0, 5)}) {
        for (std::size_t n = 1; n <= 5; ++n) {
            EXPECT_TRUE(is_valid_prefix(harness::alternating_family({xi}, n)));
            EXPECT_TRUE(is_valid_prefix(harness::alternating_family({xi, G(2, -2)}, n)));
            EXPECT_EQ(is_valid_prefix(harness::alternating_family({xi, G(1, 2)}, n)), n != 1) << n;
            EXPECT_TRUE(is_valid_prefix(harness::alternating_family({xi, G(-1, 2), G(2, -2)}, n)));
        }
    }
}

TEST(Families, WitnessesReexpandToTheWord) {
    const Expansion a = expand(RatGauss(Rational(49388, 226525), Rational(-108516, 226525)), 6);
    EXPECT_EQ(a.digits, harness::alternating_family({G(0), G(1, 2)}, 2));
    const Expansion b = expand(RatGauss(Rational(-5919, 43469), Rational(-16988, 43469)), 5);
    EXPECT_EQ(b.digits, harness::alternating_family({G(0), G(-1, 2), G(2, -2)}, 1));
}

TEST(PeriodicValidity, Examples) {
    EXPECT_TRUE(is_valid_periodic({G(3), G(-3)}));
    EXPECT_TRUE(is_valid_periodic({G(3)}));
    EXPECT_TRUE(is_valid_periodic({G(-2, 2), G(2, -2)}));
    EXPECT_FALSE(is_valid_periodic({G(3), G(1)}));
    EXPECT_TRUE(is_valid_eventually_periodic({G(0), G(-2, 2)}, {G(-2, 2)}));
    EXPECT_THROW(is_valid_periodic({}), std::invalid_argument);
}

namespace {

/// The eventually periodic word cut after `periods` copies of the period.
Digits unrolled(const Digits& pre, const Digits& period, long periods) {
    Digits w = pre;
    for (long r = 0; r < periods; ++r) w.insert(w.end(), period.begin(), period.end());
    return w;
}

}  // namespace

TEST(PeriodicValidity, RepeatedSingularDigitCycles) {
    for (const G& a : {G(-2), G(2), G(0, 2), G(1, 1), G(-1, 1), G(-2, 2)}) {
        bool periodic = false;
        ASSERT_NO_THROW(periodic = is_valid_eventually_periodic({G(0)}, {a})) << a;
        EXPECT_EQ(periodic, is_valid_prefix(unrolled({G(0)}, {a}, kDefaultCyclePeriods + 2))) << a;
    }
}

TEST(PeriodicValidity, AgreesWithLongPrefix) {
    std::mt19937_64 rng(29);
    int decided = 0;
    for (int s = 0; s < 200; ++s) {
        Digits period;
        const long m = draw(rng, 1, 3);
        for (long k = 0; k < m; ++k) period.emplace_back(draw(rng, -3, 3), draw(rng, -3, 3));
        bool periodic = false;
        try {
            periodic = is_valid_eventually_periodic({G(0)}, period);
        } catch (const budget_exhausted&) {
            continue;
        }
        ++decided;
        EXPECT_EQ(periodic, is_valid_prefix(unrolled({G(0)}, period, kDefaultCyclePeriods + 2)));
    }
    EXPECT_GT(decided, 150);
}

TEST(Catalog, StabilizesOnRandomWords) {
    std::mt19937_64 rng(31);
    RegionCatalog catalog;
    std::size_t half = 0;
    for (int s = 0; s < 400; ++s) {
        random_valid_word(rng, static_cast<std::size_t>(draw(rng, 2, 30)), &catalog);
        if (s == 199) half = catalog.size();
    }
    EXPECT_EQ(catalog.size(), half);
    EXPECT_LE(catalog.size(), 16u);
}

TEST(Catalog, KeyIsRotationInvariant) {
    const Region r = step(step(Region::fundamental(), G(-2, 2)), G(1, 1));
    for (int j = 0; j < 4; ++j) EXPECT_EQ(catalog_key(r.rotated(j).pruned()), catalog_key(r));
}

TEST(Boundary, SamplesLieOnTheRegionBoundary) {
    const Region r = first_digit_cell(G(1, 1));
    const auto pts = sample_boundary(r, 64);
    ASSERT_FALSE(pts.empty());
    for (const BoundaryPoint& p : pts) {
        ASSERT_LT(p.arc, r.constraints().size());
        const Constraint& f = r.constraints()[p.arc];
        const double v = f.A.get_d() * (p.re * p.re + p.im * p.im) +
                         2 * (f.B.re().get_d() * p.re + f.B.im().get_d() * p.im) + f.C.get_d();
        EXPECT_NEAR(v, 0.0, 1e-9);
        EXPECT_GE(p.re, -0.5 - 1e-9);
        EXPECT_LE(p.re, 0.5 + 1e-9);
    }
}
